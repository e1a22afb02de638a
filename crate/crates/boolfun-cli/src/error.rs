//! CLI error type carrying the process exit code contract:
//! 0 success, 2 parse or I/O error, 3 resource cap, 4 verification mismatch.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Cap(msg) | CliError::Mismatch(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<boolfun::Error> for CliError {
    fn from(e: boolfun::Error) -> Self {
        match e {
            boolfun::Error::SizeCap { .. } | boolfun::Error::DimensionOutOfRange { .. } => {
                CliError::Cap(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
