//! Census and verification driver on top of `cmkit-core`.
//!
//! Everything here is std-only plumbing: streaming enumeration, per-record
//! bookkeeping, and JSON-lines / CSV output with a versioned schema.

pub mod census;
pub mod output;
pub mod verify;

use thiserror::Error;

/// Value of the top-level `"schema"` field on every emitted line.
pub const SCHEMA: &str = "cmkit/1";

/// Largest rank `verify` accepts.
pub const VERIFY_CAPACITY: usize = 8;

pub const DEFAULT_CENSUS_RANK: usize = 4;
pub const DEFAULT_VERIFY_RANK: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BadInput(_) | CliError::Io(_) => 2,
            CliError::Capacity(_) => 3,
            // a broken invariant means some computed fact disagrees with a proved one
            CliError::Internal(_) => 1,
        }
    }
}

impl From<cmkit_core::Error> for CliError {
    fn from(e: cmkit_core::Error) -> Self {
        match e {
            cmkit_core::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            cmkit_core::Error::Invariant(_) => CliError::Internal(e.to_string()),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e.to_string()))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e.to_string()))
    }
}
