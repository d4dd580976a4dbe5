use thiserror::Error;
use wgqed_closed_form::ClosedFormError;
use wgqed_dynamics::DynamicsError;
use wgqed_oracle::OracleError;

/// Exit code for invalid flags or inputs.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for a computation that produced non-finite values.
pub const EXIT_NUMERICAL: i32 = 3;
/// Exit code of `cross-check` when the deviation exceeds the tolerance.
pub const EXIT_CHECK_FAILED: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Usage { flag: &'static str, message: String },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn usage(flag: &'static str, message: impl Into<String>) -> Self {
        Self::Usage {
            flag,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage { .. } => EXIT_USAGE,
            Self::Numerical(_) | Self::Io(_) => EXIT_NUMERICAL,
        }
    }

    /// Classifies a dynamics error; input problems are blamed on `flag`.
    pub fn dynamics(e: DynamicsError, flag: &'static str) -> Self {
        match e {
            DynamicsError::StepTooLarge { .. } => Self::usage("--dt", e.to_string()),
            DynamicsError::NonFinite(_) | DynamicsError::ImaginaryResidue { .. } => {
                Self::Numerical(e.to_string())
            }
            DynamicsError::Grid(_) | DynamicsError::Invalid(_) | DynamicsError::Core(_) => {
                Self::usage(flag, e.to_string())
            }
        }
    }

    pub fn closed_form(e: ClosedFormError, flag: &'static str) -> Self {
        Self::usage(flag, e.to_string())
    }

    pub fn oracle(e: OracleError) -> Self {
        match e {
            OracleError::StepTooLarge { .. } => Self::usage("--dt", e.to_string()),
            OracleError::Recurrence { .. } => Self::usage("--t-max", e.to_string()),
            OracleError::NotSingleExcitation { .. } => Self::usage("--initial", e.to_string()),
            OracleError::NonFinite(_) | OracleError::NotDecaying { .. } => {
                Self::Numerical(e.to_string())
            }
            OracleError::Bath(_) | OracleError::Core(_) => Self::usage("--engine", e.to_string()),
        }
    }
}
