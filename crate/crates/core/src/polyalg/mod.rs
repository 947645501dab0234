//! Exact multivariate polynomials over the rationals.
//!
//! Polynomials carry their ordered variable list; every arithmetic operation
//! requires both operands to share it. Terms are stored in a sorted map keyed
//! by [`Monomial`], whose `Ord` is graded reverse lexicographic, so printing
//! and iteration are deterministic.

mod matrix;
mod monomial;
mod parse;
mod poly;

pub use matrix::{det_cofactor, det_fraction_free, rational_rank, PolyMatrix};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Vars};

use thiserror::Error;

/// Exact rational scalar used for every coefficient.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent at position {pos} is not a non-negative integer literal")]
    BadExponent { pos: usize },
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {count} variables")]
    VarIndex { index: usize, count: usize },
    #[error("minor size {size} out of range 1..={max}")]
    MinorSize { size: usize, max: usize },
    #[error("matrix is malformed: {0}")]
    Shape(String),
}

/// Parses an integer or `a/b` string into a [`Rational`].
pub fn rational_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    }
}

/// Convenience constructor used throughout the crate.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
