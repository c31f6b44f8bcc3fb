//! Exact arithmetic: the coefficient ring ℚ[i, √2, √5], sparse polynomials
//! over it, and linear algebra.

mod bivariate;
mod matrix;
mod multipoly;
pub(crate) mod parse;
mod scalar;

pub use bivariate::{BivariatePoly, Exponent2};
pub use matrix::{ExactMatrix, RowSpace};
pub use multipoly::MultiPoly;
pub use scalar::ExactScalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
