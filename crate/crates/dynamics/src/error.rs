use thiserror::Error;
use wgqed_core::CoreError;

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error("time step {dt} exceeds the stability bound {max:.3e}")]
    StepTooLarge { dt: f64, max: f64 },

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("spectrum at omega = {omega} has imaginary residue {residue:.3e}")]
    ImaginaryResidue { omega: f64, residue: f64 },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}
