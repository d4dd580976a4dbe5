use thiserror::Error;

/// Errors raised while building or validating core objects.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid system configuration: {0}")]
    InvalidConfig(String),

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("operation needs exactly two qubits, got {0}")]
    NotTwoQubits(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state vector has zero norm")]
    ZeroVector,

    #[error("state vector is not normalized (norm {0:.3e})")]
    NotNormalized(f64),

    #[error("matrix is not a valid density matrix: {0}")]
    NotPhysical(String),

    #[error("time {0} is not on the sampling grid")]
    OffGrid(f64),

    #[error("unknown basis label '{0}'")]
    UnknownLabel(String),

    #[error("malformed state file: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
