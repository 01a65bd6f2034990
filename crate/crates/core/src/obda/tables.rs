use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use super::ObdaError;

/// A comma-separated table with a header row. Cells are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularSource {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TabularSource {
    pub fn new(name: impl Into<String>, header: Vec<String>, rows: Vec<Vec<String>>) -> Result<Self, ObdaError> {
        let name = name.into();
        if let Some(i) = rows.iter().position(|r| r.len() != header.len()) {
            return Err(ObdaError::RaggedRow {
                table: name,
                line: i + 2,
                expected: header.len(),
                found: rows[i].len(),
            });
        }
        Ok(TabularSource { name, header, rows })
    }

    /// Parses CSV text; the table is named `name`.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self, ObdaError> {
        let name = name.into();
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
        let header: Vec<String> = reader
            .headers()
            .map_err(|e| ObdaError::Csv { table: name.clone(), message: e.to_string() })?
            .iter()
            .map(str::to_owned)
            .collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| match e.kind() {
                csv::ErrorKind::UnequalLengths { pos, expected_len, len } => ObdaError::RaggedRow {
                    table: name.clone(),
                    line: pos.as_ref().map_or(0, |p| p.line() as usize),
                    expected: *expected_len as usize,
                    found: *len as usize,
                },
                _ => ObdaError::Csv { table: name.clone(), message: e.to_string() },
            })?;
            rows.push(record.iter().map(str::to_owned).collect());
        }
        Self::new(name, header, rows)
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}

/// Loads each file as a table named after its file stem.
pub fn load_tables(paths: &[PathBuf]) -> Result<Vec<TabularSource>, ObdaError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for path in paths {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        if !seen.insert(name.clone()) {
            return Err(ObdaError::DuplicateTable(name));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|source| ObdaError::Io { path: path.display().to_string(), source })?;
        out.push(TabularSource::parse(name, &text)?);
    }
    Ok(out)
}

/// Every `.csv` file of a directory, in name order.
pub fn load_table_dir(dir: &Path) -> Result<Vec<TabularSource>, ObdaError> {
    let entries = std::fs::read_dir(dir).map_err(|source| ObdaError::Io { path: dir.display().to_string(), source })?;
    let mut paths = Vec::new();
    for entry in entries {
        let path = entry.map_err(|source| ObdaError::Io { path: dir.display().to_string(), source })?.path();
        if path.extension().is_some_and(|e| e == "csv") {
            paths.push(path);
        }
    }
    paths.sort();
    load_tables(&paths)
}
