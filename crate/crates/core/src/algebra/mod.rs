//! Exact arithmetic: binomials, integer polynomials, and division-free determinants.

mod binomial;
mod matrix;
mod multipoly;
mod unipoly;

pub use binomial::binomial;
pub use matrix::{det_division_free, lgv_matrix, PolyMatrix, MAX_DET_SIZE};
pub use multipoly::MultiPoly;
pub use unipoly::UniPoly;

pub use num_bigint::BigInt;
