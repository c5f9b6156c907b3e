use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the counting and verification pipeline.
///
/// Variants split into caller mistakes (bad parameters, budgets) and
/// mathematical inconsistencies, which indicate a bug in one of the engines.
/// [`Error::is_inconsistency`] tells them apart.
#[derive(Debug, Error)]
pub enum Error {
    #[error("s must be at least 1, got {0}")]
    InvalidCycle(u32),

    #[error("{0}")]
    OutOfRange(String),

    #[error("dilation factor must be positive, got {0}")]
    InvalidDilation(i64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("brute-force enumeration needs {required} candidate points, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("ehrhart table covers n <= {have}, need n <= {need}")]
    TableTooShort { have: usize, need: usize },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("origin is not an interior point of the system")]
    OriginNotInterior,

    #[error("polytope is not full-dimensional (dimension {dim} in ambient dimension {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("ambiguous interior point: {count} interior lattice points at dilation {dilation}")]
    AmbiguousInteriorPoint { dilation: u64, count: String },

    #[error("no interior lattice point found for dilations up to {0}")]
    NoInteriorPoint(u64),

    #[error("inconsistency: {0}")]
    Inconsistent(String),

    #[error("cache file {path}: {message}")]
    Cache { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True when the error signals a failed internal cross-check rather than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
