//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value outside the chain's state space or an out-of-range argument.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Structured parse failure for on-disk artifacts.
    #[error("parse error at {path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },

    /// A loaded artifact violates a structural invariant.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// Report rows do not match the declared schema.
    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
