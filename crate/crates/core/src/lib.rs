//! Exact Auslander-Reiten translates, extension classes and the AR pairings
//! for path algebras of acyclic quivers over the rationals and prime fields.

pub mod error;
pub mod exactmat;
pub mod harness;
pub mod pairing;
pub mod quiver;
pub mod rep;
pub mod translate;

pub use error::{ArError, Result};
pub use exactmat::{Field, Matrix, Scalar};
