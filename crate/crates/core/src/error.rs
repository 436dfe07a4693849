use thiserror::Error;

/// Errors produced by the exact-arithmetic and certification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("zero polynomial rejected: {0}")]
    ZeroPolynomial(String),

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
