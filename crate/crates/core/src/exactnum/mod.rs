//! Exact arithmetic over the Gaussian rationals and dense linear algebra on top.

mod matrix;
mod scalar;

pub use matrix::{span_rank, Matrix, Rref};
pub use scalar::{rational_sqrt, Rational, Scalar};
