//! File formats and the command-line driver for `kempe-core`.
//!
//! Exit codes: 0 on success, 1 when an internal invariant breaks (a bound
//! is exceeded, a reverse way fails), 2 for bad input.

use std::path::PathBuf;

use kempe_core::error::Error;

pub mod commands;
pub mod io;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(Error),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// Wraps a library error raised after the input was validated.
    pub fn internal(e: Error) -> Self {
        if e.is_input_error() && !matches!(e, Error::Contract(_)) {
            CliError::Core(e)
        } else {
            CliError::Internal(e.to_string())
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            CliError::Internal(_) => 1,
            _ => 2,
        }
    }
}
