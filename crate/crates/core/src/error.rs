use thiserror::Error;

/// Errors raised by the umbral algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmbralError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("need {needed} coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("cannot parse polynomial at byte {pos}: {message}")]
    PolynomialSyntax { pos: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, UmbralError>;

pub(crate) fn domain(msg: impl Into<String>) -> UmbralError {
    UmbralError::Domain(msg.into())
}
