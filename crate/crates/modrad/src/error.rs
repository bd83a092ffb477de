//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
#[derive(Debug, Error)]
pub enum ModradError {
    /// Invalid sampling geometry or fold parameters.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Invalid argument to an algorithm (sizes, ranges, flags).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A solver failed to converge or produced an unusable model.
    #[error("recovery failed: {0}")]
    Recovery(String),

    /// Malformed input data (file contents, stream shape).
    #[error("data format error: {0}")]
    Format(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, ModradError>;
