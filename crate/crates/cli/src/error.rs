use dispersion_core::DispersionError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] DispersionError),
    #[error("solver failed: {0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for solver failures, 2 for usage and input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Solver(e) => match e {
                DispersionError::Resource(_) | DispersionError::Internal(_) => 1,
                _ => 2,
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
