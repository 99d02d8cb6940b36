//! Burch ideals and Burch rings over prime fields.
//!
//! The crate is layered bottom-up: exact linear algebra ([`field`]),
//! polynomials ([`poly`]), Gröbner bases and ideal arithmetic ([`groebner`]),
//! monomial-ideal combinatorics ([`monomial`]), finite-dimensional quotient
//! algebras ([`artinian`]), modules and minimal free resolutions over them
//! ([`resolution`]), and the decision procedures in [`burch`]. The
//! [`sweep`] module runs the cross-validation over enumerated monomial ideals.

pub mod artinian;
pub mod burch;
pub mod error;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{Coeff, Matrix, PrimeField};
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, RingContext};
