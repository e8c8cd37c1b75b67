//! Exact arithmetic over GF(2) and GF(4).

mod bitvec;
mod matrix;
mod number;
mod poly;
mod quaternary;

pub use bitvec::BinaryVector;
pub use matrix::{BinaryMatrix, RowBasis};
pub use number::{cyclotomic_coset, cyclotomic_cosets, gcd, multiplicative_order};
pub use poly::BinaryPolynomial;
pub use quaternary::QuaternaryVector;
