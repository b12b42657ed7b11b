//! Errors surfaced by the command line, with their exit codes and JSON form.

use serde::Serialize;
use thiserror::Error;

use crate::expr::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Syntax,
    UnknownSymbol,
    Domain,
    Usage,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Syntax | ErrorKind::UnknownSymbol | ErrorKind::Usage => 2,
            ErrorKind::Domain => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), line: None, column: None }
    }

    pub fn at(kind: ErrorKind, message: impl Into<String>, span: Span) -> Self {
        CliError { kind, message: message.into(), line: Some(span.line), column: Some(span.column) }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        CliError::new(ErrorKind::Domain, message)
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(ErrorKind::Usage, message)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": self })
    }

    /// A one-line human-readable rendering.
    pub fn to_text(&self) -> String {
        match (self.line, self.column) {
            (Some(l), Some(c)) => format!("error ({:?}) at {l}:{c}: {}", self.kind, self.message),
            _ => format!("error ({:?}): {}", self.kind, self.message),
        }
    }
}
