use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector has no nonzero component")]
    ZeroVector,

    #[error("cannot pack a real vector of odd dimension {0}")]
    OddDimension(usize),

    #[error("dimension {requested} out of range 1..={available}")]
    BadDimension { requested: usize, available: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("leading dimension is degenerate; cannot factor a global phase")]
    DegenerateLeadingDimension,

    #[error("vector is not unit-normalized (norm {0})")]
    NotNormalized(f64),

    #[error("invalid component at index {index}: {reason}")]
    InvalidComponent { index: usize, reason: &'static str },

    #[error("qubit amplitudes are not normalized (|amp0|^2 + |amp1|^2 = {0})")]
    InvalidQubitState(f64),

    #[error("readout flip probability {0} outside [0, 0.5)")]
    InvalidNoise(f64),

    #[error("shot count must be at least 1")]
    InvalidShots,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown estimator `{0}`")]
    UnknownEstimator(String),

    #[error("malformed embedding file: {0}")]
    Format(String),
}
