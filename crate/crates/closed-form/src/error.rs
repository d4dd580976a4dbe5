use thiserror::Error;
use wgqed_core::CoreError;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("unknown initial-state tag '{0}'")]
    InvalidTag(String),

    #[error("no closed form for {0}")]
    Unsupported(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

pub(crate) fn check_time(t: f64) -> Result<(), ClosedFormError> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(ClosedFormError::NegativeTime(t))
    }
}
