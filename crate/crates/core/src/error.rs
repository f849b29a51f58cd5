//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value violates a constraint (e.g. spatial Nyquist).
    #[error("configuration error: {0}")]
    Config(String),

    /// A request exceeds the extent of the available data.
    #[error("range error: {0}")]
    Range(String),

    /// Array dimensions do not line up.
    #[error("shape mismatch in {what}: expected {expected}, got {got}")]
    ShapeMismatch {
        what: String,
        expected: usize,
        got: usize,
    },

    /// The integrator produced a non-finite state.
    #[error("simulation diverged at step {step}")]
    SimulationDiverged { step: usize },

    /// A statistic that requires spread was asked of constant data.
    #[error("zero variance in {0}")]
    ZeroVariance(String),

    /// The object is not in a state that permits the operation.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A persisted file is malformed (bad magic, version or truncation).
    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn shape(what: impl Into<String>, expected: usize, got: usize) -> Self {
        Error::ShapeMismatch {
            what: what.into(),
            expected,
            got,
        }
    }
}
