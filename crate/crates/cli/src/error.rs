use std::path::PathBuf;

use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] frobring::Error),
    /// Two verdicts that must coincide did not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for bad input, 2 for an exceeded cap, 3 for an internal
    /// inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(frobring::Error::CapExceeded { .. }) => 2,
            CliError::Core(frobring::Error::Inconsistent(_)) | CliError::Inconsistent(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

pub type CliResult<T> = Result<T, CliError>;
