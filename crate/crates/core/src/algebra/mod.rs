//! Exact arithmetic: rationals, polynomials, matrices, quadratic fields and
//! certified real enclosures.

pub mod factor;
pub mod interval;
pub mod laurent;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod quadratic;
pub mod rational;
pub mod real_roots;
pub mod roots;

pub use laurent::{is_symmetric, lp_gcd, LaurentPolynomial};
pub use matrix::{matrix_power, IntegerMatrix, RationalMatrix};
pub use poly::Poly;
pub use quadratic::QuadraticSurd;
pub use rational::Rational;
pub use real_roots::RealAlgebraic;
pub use roots::{classify_roots, is_perfect_square, RootDescriptor, RootKind};

/// Representative of `p` up to units `±t^k`.
pub fn normalize(p: &LaurentPolynomial) -> crate::error::Result<LaurentPolynomial> {
    p.normalize()
}
