//! Errors of the command layer and their process exit codes.

use skein_core::KernelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("inadmissible input: {0}")]
    Inadmissible(String),
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Failure(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed json in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Kernel(KernelError),
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::Inadmissible(m) | KernelError::OutOfRange(m) | KernelError::InvalidGraph(m) => {
                CliError::Inadmissible(m)
            }
            KernelError::InvalidRoot(m) => CliError::Usage(m),
            KernelError::Degenerate(m) => CliError::Degenerate(m),
            other => CliError::Kernel(other),
        }
    }
}

impl CliError {
    /// `2` for bad input, `3` for a degenerate oracle system, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Inadmissible(_) | CliError::Json { .. } => 2,
            CliError::Io { source, .. } if source.kind() == std::io::ErrorKind::NotFound => 2,
            CliError::Degenerate(_) => 3,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
