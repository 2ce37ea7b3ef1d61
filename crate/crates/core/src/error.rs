use thiserror::Error;

/// Errors raised by the exact-arithmetic and certificate layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error("polynomial is constant after normalization")]
    ConstantPolynomial,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifertMatrix(String),
    #[error("Seifert matrix is singular (det V = 0)")]
    SingularSeifertMatrix,
    #[error("twist parameter m must be non-zero")]
    ZeroTwist,
    #[error("input knot has Arf invariant 1")]
    ArfNonzero,
    #[error("Arf invariant of the input knot could not be determined")]
    ArfUnknown,
    #[error("invalid operator {0}: curves must be null-homologous")]
    InvalidOperator(String),
    #[error("operator {name} expects {expected} inputs, got {got}")]
    ArityMismatch { name: String, expected: usize, got: usize },
    #[error("expression is not certified negative amphichiral")]
    NotCertifiedAmphichiral,
    #[error("expression is not a doubling-operator family knot: {0}")]
    NotAFamilyExpression(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("no Cheeger-Gromov bound supplied for operator {0}")]
    MissingBound(String),
    #[error("Cheeger-Gromov bound for {0} must be positive")]
    NonPositiveBound(String),
    #[error("interval enclosure too wide to decide a strict inequality")]
    IntervalTooWide,
    #[error("first polynomial of P is not symmetric: {0}")]
    AsymmetricP1(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
