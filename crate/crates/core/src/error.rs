//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical procedure failed to converge or produced a degenerate fit.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Two algebraically equivalent evaluation routes disagree beyond
    /// tolerance, indicating a bug rather than bad input.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),

    /// Invalid simulation or run configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Not enough samples/paths for the requested statistic.
    #[error("statistics error: {0}")]
    Statistics(String),

    /// A spin configuration does not carry the expected open contour.
    #[error("contour extraction error: {0}")]
    Extraction(String),

    /// The open interface touched the clamped rows too often; the strip
    /// truncation height is too small for the requested tilt.
    #[error("interface escape rate {rate:.4} exceeds {limit:.4}; increase M")]
    InterfaceEscape { rate: f64, limit: f64 },

    /// Malformed or unreadable snapshot data.
    #[error("snapshot error: {0}")]
    Snapshot(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
