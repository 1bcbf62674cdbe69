//! Exact coefficients, monomials, polynomials and rings.

pub mod expr;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use monomial::{Monomial, MonomialOrder};
pub use poly::{verify_identity, Polynomial, Term};
pub use ring::{PolyRing, RingContext};
pub use scalar::{Domain, Fp, Scalar};
