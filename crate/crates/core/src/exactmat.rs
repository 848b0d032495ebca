//! Dense exact linear algebra over the rationals and prime fields.
//!
//! Every matrix carries its [`Field`]. Rational entries are arbitrary
//! precision and always kept in lowest terms, so equality is structural.
//! Row reduction always takes the first nonzero entry at or below the
//! current pivot row, which makes kernels, cokernels and solutions
//! canonical functions of the input.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ArError, Result};

/// Modulus used when no field is specified.
pub const DEFAULT_PRIME: u64 = 10007;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field with `p` elements. `p` must be a prime below 2^32.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 32) || !is_prime(p) {
            return Err(ArError::InvalidInput(format!(
                "{p} is not a prime below 2^32"
            )));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q` or `fp:<p>` (case-insensitive).
    pub fn parse(s: &str) -> Result<Field> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = lower.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| ArError::InvalidInput(format!("bad prime in field `{s}`")))?;
            return Field::prime(p);
        }
        Err(ArError::InvalidInput(format!(
            "unknown field `{s}` (expected q or fp:<p>)"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Field::Rational => FieldRepr::Name("Q".into()).serialize(serializer),
            Field::Prime(p) => FieldRepr::Prime { fp: *p }.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match FieldRepr::deserialize(deserializer)? {
            FieldRepr::Name(n) if n == "Q" => Ok(Field::Rational),
            FieldRepr::Name(n) => Field::parse(&n).map_err(serde::de::Error::custom),
            FieldRepr::Prime { fp } => Field::prime(fp).map_err(serde::de::Error::custom),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A single field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: reduce_i64(v, p),
                modulus: p,
            },
        }
    }

    /// `num / den` in the given field; `den` must be invertible.
    pub fn from_ratio(field: Field, num: i64, den: i64) -> Result<Scalar> {
        let n = Scalar::from_i64(field, num);
        let d = Scalar::from_i64(field, den);
        Ok(n.mul(&d.inv()?))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: (a * b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(ArError::Inconsistent("division by zero".into()));
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: ModOps(*modulus).inv(value),
                modulus: *modulus,
            },
        })
    }

    /// Parses an integer or `n/d` string.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let bad = || ArError::InvalidInput(format!("cannot parse scalar `{s}`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        match field {
            Field::Rational => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(_) => {
                let n: i64 = n.parse().map_err(|_| bad())?;
                let d: i64 = d.parse().map_err(|_| bad())?;
                Scalar::from_ratio(field, n, d).map_err(|_| bad())
            }
        }
    }

    /// JSON form: an integer when possible, otherwise an `n/d` string.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Prime { value, .. } => serde_json::Value::from(*value),
            Scalar::Rational(r) => {
                if r.is_integer() {
                    if let Some(v) = r.numer().to_i64() {
                        return serde_json::Value::from(v);
                    }
                }
                serde_json::Value::from(r.to_string())
            }
        }
    }

    pub fn from_json(field: Field, v: &serde_json::Value) -> Result<Scalar> {
        match v {
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(Scalar::from_i64(field, i)),
                None => match n.as_u64() {
                    Some(u) if field != Field::Rational => {
                        Ok(Scalar::from_i64(field, (u % field.characteristic()) as i64))
                    }
                    _ => Scalar::parse(field, &n.to_string()),
                },
            },
            serde_json::Value::String(s) => Scalar::parse(field, s),
            other => Err(ArError::InvalidInput(format!(
                "expected a scalar, got {other}"
            ))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_i64(v: i64, p: u64) -> u64 {
    let r = v.rem_euclid(p as i64);
    r as u64
}

trait Ops {
    type E: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_i64(&self, v: i64) -> Self::E;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn scalar(&self, e: &Self::E) -> Scalar;
    fn view(data: &Entries) -> &[Self::E];
    fn view_mut(data: &mut Entries) -> &mut Vec<Self::E>;
    fn wrap(v: Vec<Self::E>) -> Entries;
}

struct RatOps;

impl Ops for RatOps {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn lift(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rational(r) => r.clone(),
            _ => panic!("expected a rational scalar"),
        }
    }
    fn scalar(&self, e: &BigRational) -> Scalar {
        Scalar::Rational(e.clone())
    }
    fn view(data: &Entries) -> &[BigRational] {
        match data {
            Entries::Rational(v) => v,
            _ => panic!("entry storage mismatch"),
        }
    }
    fn view_mut(data: &mut Entries) -> &mut Vec<BigRational> {
        match data {
            Entries::Rational(v) => v,
            _ => panic!("entry storage mismatch"),
        }
    }
    fn wrap(v: Vec<BigRational>) -> Entries {
        Entries::Rational(v)
    }
}

struct ModOps(u64);

impl Ops for ModOps {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        // a^(p-2)
        let p = self.0;
        let (mut base, mut exp, mut acc) = (*a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
    fn from_i64(&self, v: i64) -> u64 {
        reduce_i64(v, self.0)
    }
    fn lift(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Prime { value, modulus } if *modulus == self.0 => *value,
            _ => panic!("expected an element of F_{}", self.0),
        }
    }
    fn scalar(&self, e: &u64) -> Scalar {
        Scalar::Prime {
            value: *e,
            modulus: self.0,
        }
    }
    fn view(data: &Entries) -> &[u64] {
        match data {
            Entries::Prime(v) => v,
            _ => panic!("entry storage mismatch"),
        }
    }
    fn view_mut(data: &mut Entries) -> &mut Vec<u64> {
        match data {
            Entries::Prime(v) => v,
            _ => panic!("entry storage mismatch"),
        }
    }
    fn wrap(v: Vec<u64>) -> Entries {
        Entries::Prime(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Entries {
    Rational(Vec<BigRational>),
    Prime(Vec<u64>),
}

macro_rules! with_ops {
    ($field:expr, $k:ident => $body:expr) => {
        match $field {
            Field::Rational => {
                let $k = RatOps;
                $body
            }
            Field::Prime(p) => {
                let $k = ModOps(p);
                $body
            }
        }
    };
}

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Entries,
}

/// A cokernel `q: k^rows -> k^(rows - rank)` with a section `s`, `q s = 1`.
#[derive(Clone, Debug)]
pub struct CokernelData {
    pub projection: Matrix,
    pub section: Matrix,
    pub rank: usize,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref_in_place<K: Ops>(k: &K, rows: usize, cols: usize, a: &mut [K::E]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| !k.is_zero(&a[i * cols + c])) else {
            continue;
        };
        if found != r {
            for j in 0..cols {
                a.swap(found * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(&a[r * cols + c]);
        for j in c..cols {
            a[r * cols + j] = k.mul(&a[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || k.is_zero(&a[i * cols + c]) {
                continue;
            }
            let factor = a[i * cols + c].clone();
            for j in c..cols {
                if k.is_zero(&a[r * cols + j]) {
                    continue;
                }
                let t = k.mul(&factor, &a[r * cols + j]);
                a[i * cols + j] = k.sub(&a[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        with_ops!(field, k => Matrix {
            field,
            rows,
            cols,
            data: wrap(&k, vec![k.zero(); rows * cols]),
        })
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set_i64(i, i, 1);
        }
        m
    }

    /// Row-major integer entries.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count does not match shape"
        );
        with_ops!(field, k => Matrix {
            field,
            rows,
            cols,
            data: wrap(&k, entries.iter().map(|&v| k.from_i64(v)).collect()),
        })
    }

    /// Row-major scalar entries.
    pub fn from_scalars(
        field: Field,
        rows: usize,
        cols: usize,
        entries: &[Scalar],
    ) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(ArError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|s| s.field() != field) {
            return Err(ArError::FieldMismatch);
        }
        Ok(with_ops!(field, k => Matrix {
            field,
            rows,
            cols,
            data: wrap(&k, entries.iter().map(|s| k.lift(s)).collect()),
        }))
    }

    /// Column vector.
    pub fn column(field: Field, entries: &[Scalar]) -> Result<Matrix> {
        Matrix::from_scalars(field, entries.len(), 1, entries)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        with_ops!(self.field, k => k.scalar(&view(&k, &self.data)[i * self.cols + j]))
    }

    pub fn set(&mut self, i: usize, j: usize, s: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let cols = self.cols;
        with_ops!(self.field, k => {
            let v = k.lift(s);
            view_mut(&k, &mut self.data)[i * cols + j] = v;
        })
    }

    pub fn set_i64(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let cols = self.cols;
        with_ops!(self.field, k => {
            let v = k.from_i64(v);
            view_mut(&k, &mut self.data)[i * cols + j] = v;
        })
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_i64(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let cols = self.cols;
        with_ops!(self.field, k => {
            let d = view_mut(&k, &mut self.data);
            let v = k.from_i64(v);
            d[i * cols + j] = k.add(&d[i * cols + j], &v);
        })
    }

    /// Adds `s` to entry `(i, j)`.
    pub fn add_scalar_at(&mut self, i: usize, j: usize, s: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let cols = self.cols;
        with_ops!(self.field, k => {
            let d = view_mut(&k, &mut self.data);
            let v = k.lift(s);
            d[i * cols + j] = k.add(&d[i * cols + j], &v);
        })
    }

    /// Adds `scale * block` into the submatrix starting at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix, scale: i64) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of range"
        );
        assert_eq!(self.field, block.field);
        let cols = self.cols;
        with_ops!(self.field, k => {
            let s = k.from_i64(scale);
            let b = view(&k, &block.data).to_vec();
            let d = view_mut(&k, &mut self.data);
            for i in 0..block.rows {
                for j in 0..block.cols {
                    let e = &b[i * block.cols + j];
                    if k.is_zero(e) {
                        continue;
                    }
                    let idx = (r0 + i) * cols + c0 + j;
                    d[idx] = k.add(&d[idx], &k.mul(&s, e));
                }
            }
        })
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of range"
        );
        assert_eq!(self.field, block.field);
        let cols = self.cols;
        with_ops!(self.field, k => {
            let b = view(&k, &block.data).to_vec();
            let d = view_mut(&k, &mut self.data);
            for i in 0..block.rows {
                for j in 0..block.cols {
                    d[(r0 + i) * cols + c0 + j] = b[i * block.cols + j].clone();
                }
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        with_ops!(self.field, k => view(&k, &self.data).iter().all(|e| k.is_zero(e)))
    }

    fn check_same(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(ArError::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(ArError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        Ok(with_ops!(self.field, k => {
            let a = view(&k, &self.data);
            let b = view(&k, &other.data);
            let mut out = vec![k.zero(); n * p];
            for i in 0..n {
                for l in 0..m {
                    let x = &a[i * m + l];
                    if k.is_zero(x) {
                        continue;
                    }
                    for j in 0..p {
                        let y = &b[l * p + j];
                        if k.is_zero(y) {
                            continue;
                        }
                        out[i * p + j] = k.add(&out[i * p + j], &k.mul(x, y));
                    }
                }
            }
            Matrix { field: self.field, rows: n, cols: p, data: wrap(&k, out) }
        }))
    }

    /// Matrix product; panics on a shape or field mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product")
    }

    fn zip(&self, other: &Matrix, sub: bool) -> Result<Matrix> {
        self.check_same(other)?;
        if self.shape() != other.shape() {
            return Err(ArError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(with_ops!(self.field, k => {
            let a = view(&k, &self.data);
            let b = view(&k, &other.data);
            let out = a
                .iter()
                .zip(b)
                .map(|(x, y)| if sub { k.sub(x, y) } else { k.add(x, y) })
                .collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&k, out) }
        }))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, false).expect("matrix sum")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, true).expect("matrix difference")
    }

    pub fn neg(&self) -> Matrix {
        with_ops!(self.field, k => {
            let out = view(&k, &self.data).iter().map(|x| k.neg(x)).collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&k, out) }
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        with_ops!(self.field, k => {
            let s = k.lift(s);
            let out = view(&k, &self.data).iter().map(|x| k.mul(x, &s)).collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&k, out) }
        })
    }

    pub fn transpose(&self) -> Matrix {
        with_ops!(self.field, k => {
            let a = view(&k, &self.data);
            let mut out = Vec::with_capacity(a.len());
            for j in 0..self.cols {
                for i in 0..self.rows {
                    out.push(a[i * self.cols + j].clone());
                }
            }
            Matrix { field: self.field, rows: self.cols, cols: self.rows, data: wrap(&k, out) }
        })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, other);
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        with_ops!(self.field, k => {
            let a = view(&k, &self.data);
            let mut out = Vec::with_capacity(idx.len() * self.cols);
            for &i in idx {
                out.extend_from_slice(&a[i * self.cols..(i + 1) * self.cols]);
            }
            Matrix { field: self.field, rows: idx.len(), cols: self.cols, data: wrap(&k, out) }
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        with_ops!(self.field, k => {
            let a = view(&k, &self.data);
            let mut out = Vec::with_capacity(idx.len() * self.rows);
            for i in 0..self.rows {
                for &j in idx {
                    out.push(a[i * self.cols + j].clone());
                }
            }
            Matrix { field: self.field, rows: self.rows, cols: idx.len(), data: wrap(&k, out) }
        })
    }

    /// Column `j` as an `rows x 1` matrix.
    pub fn col(&self, j: usize) -> Matrix {
        self.select_cols(&[j])
    }

    /// Row `i` as a `1 x cols` matrix.
    pub fn row(&self, i: usize) -> Matrix {
        self.select_rows(&[i])
    }

    /// Row-major entries as scalars.
    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> Vec<(usize, usize, Scalar)> {
        let cols = self.cols;
        with_ops!(self.field, k => view(&k, &self.data)
            .iter()
            .enumerate()
            .filter(|(_, e)| !k.is_zero(e))
            .map(|(i, e)| (i / cols, i % cols, k.scalar(e)))
            .collect())
    }

    pub fn entries(&self) -> Vec<Scalar> {
        with_ops!(self.field, k => view(&k, &self.data).iter().map(|e| k.scalar(e)).collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = with_ops!(self.field, k => {
            let d = view_mut(&k, &mut m.data);
            rref_in_place(&k, self.rows, self.cols, d)
        });
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space as columns; the free coordinates of each
    /// basis vector form a standard basis vector.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            out.set_i64(fc, t, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if !v.is_zero() {
                    out.set(pc, t, &v.neg());
                }
            }
        }
        out
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        self.check_same(rhs)?;
        if self.rows != rhs.rows {
            return Err(ArError::DimensionMismatch(format!(
                "solve: {} rows against {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, &r.get(row, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Cokernel of the column space. Pivot coordinates of the row-reduced
    /// transpose span a complement of the non-pivot coordinates, which
    /// index the cokernel basis.
    pub fn cokernel(&self) -> CokernelData {
        let (r, pivots) = self.transpose().rref();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut projection = Matrix::zeros(self.field, free.len(), n);
        let mut section = Matrix::zeros(self.field, n, free.len());
        for (t, &j) in free.iter().enumerate() {
            projection.set_i64(t, j, 1);
            section.set_i64(j, t, 1);
            for (k, &pk) in pivots.iter().enumerate() {
                let v = r.get(k, j);
                if !v.is_zero() {
                    projection.set(t, pk, &v.neg());
                }
            }
        }
        CokernelData {
            projection,
            section,
            rank: pivots.len(),
        }
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(ArError::NonSquare(self.rows, self.cols));
        }
        let mut acc = Scalar::zero(self.field);
        for i in 0..self.rows {
            acc = acc.add(&self.get(i, i));
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(ArError::NonSquare(self.rows, self.cols));
        }
        if self.rank() != self.rows {
            return Err(ArError::Inconsistent("matrix is singular".into()));
        }
        Ok(self
            .solve(&Matrix::identity(self.field, self.rows))?
            .expect("full rank system is solvable"))
    }

    /// JSON rows-major list of entries.
    pub fn to_json_flat(&self) -> Vec<serde_json::Value> {
        self.entries().iter().map(Scalar::to_json).collect()
    }
}

// Small helpers so the macro bodies stay readable.
fn view<'a, K: Ops>(_k: &K, d: &'a Entries) -> &'a [K::E] {
    K::view(d)
}

fn view_mut<'a, K: Ops>(_k: &K, d: &'a mut Entries) -> &'a mut Vec<K::E> {
    K::view_mut(d)
}

fn wrap<K: Ops>(_k: &K, v: Vec<K::E>) -> Entries {
    K::wrap(v)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Convenience for tests and examples: integer row-major matrix over `field`.
pub fn mat(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_i64(field, rows, cols, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;
    const F5: Field = Field::Prime(5);

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(F5, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 3, 4).rank(), 0);
        assert_eq!(mat(Q, 2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel().cols(), 0);
        let z = Matrix::zeros(Q, 3, 3).kernel();
        assert_eq!(z.cols(), 3);
        assert_eq!(z.rank(), 3);
        let k = mat(Q, 2, 2, &[1, 2, 2, 4]).kernel();
        assert_eq!(k.shape(), (2, 1));
        // proportional to (2, -1)
        let two = k.get(0, 0);
        let minus_one = k.get(1, 0);
        assert_eq!(two, minus_one.mul(&Scalar::from_i64(Q, -2)));
        assert!(!two.is_zero());
    }

    #[test]
    fn solve_examples() {
        let rhs = mat(Q, 2, 1, &[3, -7]);
        assert_eq!(
            Matrix::identity(Q, 2).solve(&rhs).unwrap(),
            Some(rhs.clone())
        );
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&rhs).unwrap(), None);
        let x = mat(Q, 1, 1, &[2])
            .solve(&mat(Q, 1, 1, &[1]))
            .unwrap()
            .unwrap();
        assert_eq!(x.get(0, 0), Scalar::from_ratio(Q, 1, 2).unwrap());
        assert!(matches!(
            Matrix::identity(Q, 2).solve(&mat(Q, 3, 1, &[1, 2, 3])),
            Err(ArError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn cokernel_examples() {
        let c = Matrix::identity(Q, 3).cokernel();
        assert_eq!(c.projection.rows(), 0);
        let c = Matrix::zeros(Q, 2, 3).cokernel();
        assert_eq!(c.projection, Matrix::identity(Q, 2));
        let c = mat(Q, 2, 1, &[1, 0]).cokernel();
        assert_eq!(c.projection, mat(Q, 1, 2, &[0, 1]));
        assert_eq!(c.section, mat(Q, 2, 1, &[0, 1]));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(
            Matrix::identity(Q, 3).trace().unwrap(),
            Scalar::from_i64(Q, 3)
        );
        assert!(Matrix::zeros(Q, 2, 2).trace().unwrap().is_zero());
        assert_eq!(
            mat(Q, 2, 2, &[1, 2, 3, 4]).trace().unwrap(),
            Scalar::from_i64(Q, 5)
        );
        assert!(matches!(
            Matrix::zeros(Q, 2, 3).trace(),
            Err(ArError::NonSquare(2, 3))
        ));
    }

    #[test]
    fn prime_arithmetic_wraps() {
        let a = Scalar::from_i64(F5, -1);
        assert_eq!(a, Scalar::from_i64(F5, 4));
        assert_eq!(a.inv().unwrap(), a);
        let m = mat(F5, 2, 2, &[2, 1, 1, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(F5, 2));
    }

    #[test]
    fn field_parsing_and_json() {
        assert_eq!(Field::parse("q").unwrap(), Q);
        assert_eq!(Field::parse("fp:10007").unwrap(), Field::Prime(10007));
        assert!(Field::parse("fp:10").is_err());
        let js = serde_json::to_string(&Field::Prime(7)).unwrap();
        assert_eq!(js, r#"{"Fp":7}"#);
        assert_eq!(serde_json::from_str::<Field>(r#""Q""#).unwrap(), Q);
        let half = Scalar::parse(Q, "1/2").unwrap();
        assert_eq!(half.to_json(), serde_json::json!("1/2"));
        assert_eq!(
            Scalar::from_json(Q, &serde_json::json!("2/4")).unwrap(),
            half
        );
    }

    #[test]
    fn degenerate_shapes() {
        let e = Matrix::zeros(Q, 0, 3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().shape(), (3, 3));
        assert_eq!(e.cokernel().projection.shape(), (0, 0));
        let f = Matrix::zeros(Q, 3, 0);
        assert_eq!(f.kernel().shape(), (0, 0));
        assert_eq!(f.cokernel().projection, Matrix::identity(Q, 3));
        assert_eq!(
            f.solve(&Matrix::zeros(Q, 3, 1)).unwrap(),
            Some(Matrix::zeros(Q, 0, 1))
        );
    }
}
