//! Crate-wide error type.

use crate::train::TrainLog;

#[derive(Debug, thiserror::Error)]
pub enum AnantError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("sampling error: {0}")]
    Sampling(String),

    #[error("input {value} outside basis support [{lo}, {hi}] in strict mode")]
    OutOfSupport { value: f64, lo: f64, hi: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// Training hit a NaN loss or gradient; carries the log up to the last
    /// finite iteration.
    #[error("training aborted at iteration {iteration}: {reason}")]
    NanAbort {
        iteration: usize,
        reason: String,
        log: Box<TrainLog>,
    },

    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, AnantError>;
