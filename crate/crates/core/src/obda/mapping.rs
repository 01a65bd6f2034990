use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::ObdaError;

/// One class-to-table mapping: rows of `source` passing every equality
/// filter become instances named by their `id_column` value.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingEntry {
    /// Full IRI, prefixed name, local name or label.
    pub class: String,
    pub source: String,
    pub id_column: String,
    #[serde(default)]
    pub filter: BTreeMap<String, String>,
}

/// Two individual names (`table:id`) denoting the same thing.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SameAs {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingSpec {
    #[serde(default, rename = "mapping")]
    pub entries: Vec<MappingEntry>,
    #[serde(default)]
    pub same_as: Vec<SameAs>,
}

impl MappingSpec {
    pub fn from_toml(text: &str) -> Result<Self, ObdaError> {
        let de = toml::Deserializer::parse(text).map_err(|e| ObdaError::Mapping(e.to_string()))?;
        serde_path_to_error::deserialize(de)
            .map_err(|e| ObdaError::Mapping(format!("at `{}`: {}", e.path(), e.inner().message())))
    }

    pub fn load(path: &Path) -> Result<Self, ObdaError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ObdaError::Io { path: path.display().to_string(), source })?;
        Self::from_toml(&text)
    }
}
