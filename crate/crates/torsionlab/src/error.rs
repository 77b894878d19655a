//! Command errors and the exit-code contract: 0 success, 2 invalid input,
//! 3 I/O, 4 numerical certification failure.

use std::fmt;

use serde_json::{json, Value};
use torsionlab_core::error::Error as CoreError;

use crate::output::SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Io,
    Certification,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::InvalidInput => 2,
            ErrorKind::Io => 3,
            ErrorKind::Certification => 4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::InvalidInput => "invalid_input",
            ErrorKind::Io => "io",
            ErrorKind::Certification => "certification",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::InvalidInput, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Io, message: message.into() }
    }

    pub fn certification(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Certification, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }

    /// The machine-readable form written to stderr.
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "error": {
                "kind": self.kind.as_str(),
                "exit_code": self.exit_code(),
                "message": self.message,
            }
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let kind = if e.is_certification_failure() { ErrorKind::Certification } else { ErrorKind::InvalidInput };
        let message = match &e {
            CoreError::InvalidDimensions { m, b, reason } => format!("{reason} (m={m}, b={b})"),
            _ => e.to_string(),
        };
        Self { kind, message }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::io(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
