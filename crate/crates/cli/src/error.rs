use std::path::PathBuf;

use thiserror::Error;

/// Everything that stops a command before it produces a report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid puzzle document: {0}")]
    Document(String),
    #[error("server: {0}")]
    Server(String),
    #[error(transparent)]
    Core(#[from] peres_core::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 1 for anything the caller got wrong (arguments, paths, ports), 2 for
    /// failures of the mathematics or of a document's consistency check.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Server(_) => 1,
            CliError::Document(_) | CliError::Core(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
