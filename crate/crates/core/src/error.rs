//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration or model violates a structural invariant.
    #[error("invalid configuration: {0}")]
    Validation(String),

    /// A physically meaningful configuration the models do not support.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// An iterative numerical procedure failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
