//! Library side of the `fsig` command-line tool: command implementations,
//! output records, and the reference table runner. The binary in `main.rs`
//! is a thin argument-parsing layer over this.

pub mod commands;
pub mod output;
pub mod table;

pub const EXIT_OK: i32 = 0;
/// Internal disagreement between methods that must agree: a correctness alarm.
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Errors that terminate a command, mapped onto the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    CapExceeded(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::CapExceeded(_) => EXIT_CAP,
            CliError::Internal(_) => EXIT_MISMATCH,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::CapExceeded(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<fsig::Error> for CliError {
    fn from(e: fsig::Error) -> Self {
        match e {
            fsig::Error::SubsetCap { .. } | fsig::Error::EnumerationCap { .. } => {
                CliError::CapExceeded(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
