use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

/// A parser message anchored at a line/column of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub token: String,
}

impl ParseDiagnostic {
    pub fn error(message: impl Into<String>, pos: Position, token: impl Into<String>) -> Self {
        Self::new(Severity::Error, message, pos, token)
    }

    pub fn warning(message: impl Into<String>, pos: Position, token: impl Into<String>) -> Self {
        Self::new(Severity::Warning, message, pos, token)
    }

    fn new(severity: Severity, message: impl Into<String>, pos: Position, token: impl Into<String>) -> Self {
        ParseDiagnostic { severity, message: message.into(), line: pos.line, column: pos.column, token: token.into() }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {level}: {}", self.line, self.column, self.message)?;
        if !self.token.is_empty() {
            write!(f, " (at `{}`)", self.token)?;
        }
        Ok(())
    }
}
