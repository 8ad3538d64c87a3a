//! Exact arithmetic: univariate and multivariate polynomials over `Q`,
//! binary forms, determinants and resultants.

pub mod det;
pub mod form;
pub mod mpoly;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod roots;

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub use form::{column_subsets, parse_rational, BinaryForm, PolyMatrix, PolyVector, ProjPoint};
pub use mpoly::MPoly;
pub use poly::{Poly, QPoly};
pub use ring::Ring;
