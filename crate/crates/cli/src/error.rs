use std::io;
use std::path::Path;

use ffs_core::FfsError;
use thiserror::Error;

/// Exit codes: 0 ok, 1 property failure, 2 malformed input, 3 Nyquist, 4 singular DC.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Library(#[from] FfsError),

    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },

    #[error("{0} properties failed")]
    PropertyFailure(usize),
}

impl CliError {
    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::PropertyFailure(_) => 1,
            CliError::Library(FfsError::NyquistViolation { .. }) => 3,
            CliError::Library(FfsError::SingularDc { .. }) => 4,
            CliError::Input(_) | CliError::Library(_) | CliError::Io { .. } => 2,
        }
    }
}
