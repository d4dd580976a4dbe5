use thiserror::Error;
use wgqed_core::CoreError;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("invalid bath: {0}")]
    Bath(String),

    #[error("initial state has weight {weight:.3e} outside the single-excitation sector")]
    NotSingleExcitation { weight: f64 },

    #[error("time step {dt} exceeds 0.1 / band half-width = {max:.3e}")]
    StepTooLarge { dt: f64, max: f64 },

    #[error("horizon {t_max} reaches the recurrence time {recurrence:.3}")]
    Recurrence { t_max: f64, recurrence: f64 },

    #[error("series does not decay by a decade in the fit window (ratio {ratio:.3e})")]
    NotDecaying { ratio: f64 },

    #[error("non-finite amplitude at t = {0}")]
    NonFinite(f64),

    #[error(transparent)]
    Core(#[from] CoreError),
}
