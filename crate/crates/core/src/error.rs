use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DispersionError {
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate index {0} in subset")]
    DuplicateIndex(usize),
    #[error("invalid subset size k={k} for n={n} (need {min} <= k <= n)")]
    InvalidK { k: usize, n: usize, min: usize },
    #[error("coordinate buffer of length {len} is not a multiple of dimension {dim}")]
    RaggedCoordinates { len: usize, dim: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("non-finite value at position {0}")]
    NonFinite(usize),
    #[error("operation requires dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("point ({x}, {y}) lies outside the unit square")]
    OutOfDomain { x: f64, y: f64 },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = DispersionError> = std::result::Result<T, E>;
