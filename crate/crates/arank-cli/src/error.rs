//! CLI error type and its mapping to process exit codes.

use std::path::PathBuf;

use arank_core::Error as CoreError;

/// Exit codes: 0 computed, 2 input error, 3 precondition violated,
/// 4 budget or time limit hit.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Core(e) => match e {
                CoreError::NotASpecialization
                | CoreError::NotPositive
                | CoreError::NotStronglyConvex
                | CoreError::NotBipartite
                | CoreError::NotASubcomplex => 3,
                CoreError::BudgetExceeded { .. } => 4,
                _ => 2,
            },
        }
    }
}
