//! Exact rational arithmetic and dense/sparse linear algebra over ℚ.
//!
//! Everything downstream (root coordinates, structure constants, subspace
//! bases) is built on [`Rational`], which is always stored in lowest terms
//! with a positive denominator. Subspaces are compared through the reduced
//! row-echelon form of their basis, so equality never needs a tolerance.

mod matrix;
mod rational;
pub mod sparse;
mod vector;

pub use matrix::QMatrix;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use vector::QVector;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactqError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational literal {0:?}: expected \"p\" or \"p/q\" with q > 0")]
    BadRational(String),
}
