use thiserror::Error;

/// Library error taxonomy. `Domain` and `Validity` are input rejections (the
/// CLI maps them to exit code 2); `Numeric` covers quadrature non-convergence
/// and overflow-class failures (exit code 3).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the function itself.
    #[error("domain error: {0}")]
    Domain(String),
    /// A formula precondition (validity window, stated inequality) failed;
    /// the message names the violated condition.
    #[error("validity error: {0}")]
    Validity(String),
    /// Numeric evaluation failed (non-convergence, overflow, ill-conditioning
    /// with no exact fallback).
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn validity(msg: impl Into<String>) -> Self {
        Error::Validity(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
