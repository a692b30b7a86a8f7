use std::io;

use eqschub::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cache {path}: {reason}")]
    Cache { path: String, reason: String },
    #[error("positivity certificate failed")]
    CertificateFailed,
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(e) => match e {
                Error::ClosureOverflow { .. } | Error::ResourceCap { .. } => 3,
                Error::NotDivisible | Error::Inconsistent { .. } | Error::NotGroupElement { .. } => 4,
                _ => 2,
            },
            CliError::Io(_) | CliError::Usage(_) | CliError::Cache { .. } => 2,
            CliError::CertificateFailed => 5,
        }
    }
}
