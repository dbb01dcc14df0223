//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported objective dimension M={0} (supported: 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("unsupported problem: {0}")]
    UnsupportedProblem(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("decision variable {index} out of bounds: {value} not in [{lower}, {upper}]")]
    OutOfBounds {
        index: usize,
        value: f64,
        lower: f64,
        upper: f64,
    },
    #[error("empty population")]
    EmptyPopulation,
    #[error("replacement audit was not enabled for this run")]
    AuditDisabled,
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),
}

pub type Result<T> = std::result::Result<T, Error>;
