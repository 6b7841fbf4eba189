use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} is outside 1..=16")]
    DegreeOutOfRange(u32),
    #[error("no circulant labeling found for q = {0}")]
    CirculantLabeling(u32),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("parity-check matrix is empty")]
    EmptyMatrix,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("negative entry at position {0}")]
    NegativeEntry(usize),
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("vector is not a member of the fundamental cone ({0})")]
    NotInCone(String),
    #[error("dimension {n} exceeds the enumeration limit {limit}")]
    DimensionLimit { n: usize, limit: usize },
    #[error("resource budget exceeded after {steps} steps with {rays} rays: {reason}")]
    BudgetExceeded {
        reason: String,
        steps: usize,
        rays: usize,
    },
    #[error("code dimension {k} exceeds the sweep limit {limit}")]
    CodeTooLarge { k: usize, limit: usize },
    #[error("search space of {size} vectors exceeds the brute-force limit")]
    SearchSpaceTooLarge { size: u128 },
    #[error("invalid line index {index} (plane has {n} lines)")]
    InvalidLine { index: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
