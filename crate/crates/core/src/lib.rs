//! Exact classical knot invariants for Seifert-matrix data, strong coprimality
//! of Laurent polynomials, symbolic doubling-operator knot families and
//! certificates for the hypotheses of the 2-torsion independence results.

pub mod algebra;
pub mod certificate;
pub mod coprimality;
pub mod error;
pub mod family;
pub mod obstruction;
pub mod seifert;

pub use error::{Error, Result};
