use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidSpec(String),
    #[error("invalid sigma: {0}")]
    InvalidSigma(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("operands live in different coordinate spaces")]
    MixedSpaces,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Invariant breaches, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
