//! Exact computations with affine Schubert polynomials of `SL_n` and with
//! the weak order on affine Weyl groups of any finite type.
//!
//! Modules, roughly bottom up:
//! [`weyl`] finite permutations, [`affine`] periodic permutations and coweights,
//! [`polyring`] sparse polynomials and fixed quotient presentations,
//! [`demazure`] divided differences and Schubert polynomials,
//! [`affschubert`] classes in `Q[h_1, ..., h_{n-1}]`,
//! [`alcove`] root systems and translation factors.

pub mod affine;
pub mod affschubert;
pub mod alcove;
pub mod demazure;
pub mod error;
pub mod parse;
pub mod polyring;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

/// Polynomials over the rationals, the default throughout.
pub type QPoly = polyring::Polynomial<BigRational>;
/// Polynomials over the integers.
pub type ZPoly = polyring::Polynomial<BigInt>;
/// Rationals with machine-word parts, for small inputs.
pub type Q64Poly = polyring::Polynomial<Ratio<i64>>;
pub type Q128Poly = polyring::Polynomial<Ratio<i128>>;
