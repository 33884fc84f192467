use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("insufficient prefix: window needs coefficients up to index {needed}, prefix ends at {available}")]
    InsufficientPrefix { needed: usize, available: usize },

    #[error("zero denominator: specialization sends uv to 0 but the class carries a power of 1/(uv)")]
    ZeroDenominator,

    #[error("certificate g(0) is not a unit; uniqueness of the solution of g*x = h cannot be certified")]
    NonUnitLeadingTerm,

    #[error("invalid Hodge diamond: {0}")]
    InvalidDiamond(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
