use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("quiver mismatch between operands")]
    QuiverMismatch,
    #[error("matrix is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("quiver has a directed cycle")]
    Cyclic,
    #[error("not a morphism: {0}")]
    NotIntertwining(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("over the size budget: {0}")]
    TooLarge(String),
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, ArError>;
