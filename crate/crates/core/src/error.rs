use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input supplied by the caller.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Two routes that must agree did not, or a result violated a structural
    /// invariant (negative product coefficient, empty product, ...).
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
    /// A size guard was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// Floating-point verification exceeded its tolerance.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::Inconsistency(msg.into())
}
