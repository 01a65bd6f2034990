//! Reader and writer for the supported subset of OWL 2 functional-style
//! syntax.

mod diagnostics;
mod lexer;
mod parser;
mod writer;

use std::path::{Path, PathBuf};

pub use diagnostics::{ParseDiagnostic, Position, Severity};
pub use parser::{parse, DeclarationMode, ParseError, Parsed, ParserOptions, UnknownConstructPolicy};
pub use writer::{render_axiom, render_expression, serialize};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{}", path.display(), error.error)]
    Parse { path: PathBuf, error: ParseError },
}

/// Reads and parses a file, recording its name as the model's source.
pub fn parse_file(path: &Path, options: &ParserOptions) -> Result<Parsed, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_owned(), source })?;
    let mut parsed = parse(&text, options).map_err(|error| LoadError::Parse { path: path.to_owned(), error })?;
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned());
    parsed.model = parsed.model.with_source_name(name);
    Ok(parsed)
}
