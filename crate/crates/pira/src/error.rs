use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PiraError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    /// An input file does not exist.
    #[error("missing input file {}", .0.display())]
    MissingFile(PathBuf),
    #[error("{file}:{line} {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pira_core::Error),
}

pub type Result<T, E = PiraError> = std::result::Result<T, E>;

impl PiraError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        PiraError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(file: &str, line: usize, message: impl Into<String>) -> Self {
        PiraError::Parse {
            file: file.to_string(),
            line,
            message: message.into(),
        }
    }

    /// Process exit status: 2 for usage and invalid input, 3 for I/O
    /// failures, 4 when an iterative solver does not converge.
    pub fn exit_code(&self) -> i32 {
        match self {
            PiraError::Io { .. } => 3,
            PiraError::Core(pira_core::Error::NonConvergence { .. }) => 4,
            _ => 2,
        }
    }
}
