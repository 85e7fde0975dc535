//! Command-line front end: `compute` writes a canonical JSON dump of a
//! window center, `verify` runs named suites of structural checks, `mult`
//! reads products back out of a dump.

pub mod compute;
pub mod config;
pub mod dump;
pub mod mult;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, invalid configuration or unreadable input (exit code 2).
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gcenter_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(gcenter_core::Error::InvalidConfig(_) | gcenter_core::Error::InvalidField(_)) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
