//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (non-finite input, invalid
    /// geometry, empty parameter list, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configurable resource cap (primitive count, evaluation budget) was
    /// exceeded before the operation could finish.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The requested line is degenerate with respect to the set (tangent,
    /// collinear or through an endpoint); the caller must perturb or skip.
    #[error("degenerate line (theta={theta}, offset={offset})")]
    DegenerateLine { theta: f64, offset: f64 },

    /// Serialization or deserialization of a set or report failed.
    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
