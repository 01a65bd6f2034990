use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{BiasType, Severity};

const DEFAULT_RULES: &str = include_str!("default_rules.toml");

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    pub label_properties: Vec<String>,
    pub thesaurus_annotation_properties: Vec<String>,
    pub boolean_datatypes: Vec<String>,
    pub participation_properties: Vec<String>,
    pub process_terms: Vec<String>,
    /// Data properties per class at or above which pattern B fires.
    pub pattern_b_fraction: f64,
    /// Thesaurus annotations per logical axiom above which pattern C fires.
    pub pattern_c_ratio: f64,
    /// Share of classes that are bare thesaurus entries at or above which
    /// pattern C fires.
    pub thesaurus_class_fraction: f64,
    pub monolingual_min_classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoundationalNamespace {
    pub id: String,
    pub name: String,
    pub prefixes: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopLevelMarker {
    pub id: String,
    pub term: String,
    pub commitment: String,
    /// Namespaces whose use makes the marker class expected.
    #[serde(default)]
    pub expected_with: Vec<String>,
    /// Namespaces of alignments that have no such category.
    #[serde(default)]
    pub conflicts_with: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsumptionCategory {
    Science,
    Economic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContestedSubsumption {
    pub id: String,
    pub sub: String,
    pub sup: String,
    pub category: SubsumptionCategory,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedMinimum {
    pub id: String,
    pub class: String,
    pub minimum: usize,
    #[serde(default)]
    pub known_members: Vec<String>,
    #[serde(default)]
    pub severity: Severity,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LexiconBias {
    SocioCultural,
    PoliticalReligious,
}

impl From<LexiconBias> for BiasType {
    fn from(b: LexiconBias) -> Self {
        match b {
            LexiconBias::SocioCultural => BiasType::SocioCultural,
            LexiconBias::PoliticalReligious => BiasType::PoliticalReligious,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadedTerm {
    pub id: String,
    pub term: String,
    pub bias_type: LexiconBias,
    #[serde(default)]
    pub suggestions: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SensitiveDimension {
    pub id: String,
    pub class: String,
    pub known_members: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionVariant {
    pub id: String,
    pub variant: String,
    pub preferred: Vec<String>,
    #[serde(default)]
    pub locales: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisputedEntity {
    pub id: String,
    pub name: String,
    pub container: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Misclassification {
    pub id: String,
    pub member: String,
    pub container: String,
    pub note: String,
}

/// Detector settings and registries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleConfig {
    pub settings: Settings,
    pub foundational_namespaces: Vec<FoundationalNamespace>,
    pub top_level_markers: Vec<TopLevelMarker>,
    pub contested_subsumptions: Vec<ContestedSubsumption>,
    pub expected_minimums: Vec<ExpectedMinimum>,
    pub loaded_term_lexicon: Vec<LoadedTerm>,
    pub sensitive_dimensions: Vec<SensitiveDimension>,
    pub region_variant_lexicon: Vec<RegionVariant>,
    pub disputed_entities: Vec<DisputedEntity>,
    pub misclassifications: Vec<Misclassification>,
}

/// A user document: every section optional, present sections replace the
/// default ones wholesale, `disabled_rules` drops entries by rule id.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    settings: Option<SettingsPatch>,
    foundational_namespaces: Option<Vec<FoundationalNamespace>>,
    top_level_markers: Option<Vec<TopLevelMarker>>,
    contested_subsumptions: Option<Vec<ContestedSubsumption>>,
    expected_minimums: Option<Vec<ExpectedMinimum>>,
    loaded_term_lexicon: Option<Vec<LoadedTerm>>,
    sensitive_dimensions: Option<Vec<SensitiveDimension>>,
    region_variant_lexicon: Option<Vec<RegionVariant>>,
    disputed_entities: Option<Vec<DisputedEntity>>,
    misclassifications: Option<Vec<Misclassification>>,
    #[serde(default)]
    disabled_rules: Vec<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SettingsPatch {
    label_properties: Option<Vec<String>>,
    thesaurus_annotation_properties: Option<Vec<String>>,
    boolean_datatypes: Option<Vec<String>>,
    participation_properties: Option<Vec<String>>,
    process_terms: Option<Vec<String>>,
    pattern_b_fraction: Option<f64>,
    pattern_c_ratio: Option<f64>,
    thesaurus_class_fraction: Option<f64>,
    monolingual_min_classes: Option<usize>,
}

impl Default for RuleConfig {
    fn default() -> Self {
        let config: RuleConfig = toml::from_str(DEFAULT_RULES).expect("bundled rules are well formed");
        config.validate().expect("bundled rules are valid");
        config
    }
}

macro_rules! registries {
    ($self:ident, $visit:ident) => {
        $visit!($self, foundational_namespaces, "namespace");
        $visit!($self, top_level_markers, "marker");
        $visit!($self, contested_subsumptions, "contested");
        $visit!($self, expected_minimums, "minimum");
        $visit!($self, loaded_term_lexicon, "lexicon");
        $visit!($self, sensitive_dimensions, "dimension");
        $visit!($self, region_variant_lexicon, "variant");
        $visit!($self, disputed_entities, "disputed");
        $visit!($self, misclassifications, "misclassified");
    };
}

impl RuleConfig {
    /// Parses a user document and merges it over the defaults.
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let de = toml::Deserializer::parse(text).map_err(|e| ConfigError::Syntax(e.to_string()))?;
        let doc: Document = serde_path_to_error::deserialize(de)
            .map_err(|e| ConfigError::Schema { path: e.path().to_string(), message: e.inner().message().to_owned() })?;
        let mut config = RuleConfig::default();
        if let Some(patch) = doc.settings {
            config.settings.apply(patch);
        }
        macro_rules! replace {
            ($self:ident, $field:ident, $name:literal) => {
                if let Some(entries) = doc.$field {
                    $self.$field = entries;
                }
            };
        }
        let target = &mut config;
        registries!(target, replace);
        for rule in &doc.disabled_rules {
            if !config.rule_ids().contains(rule) {
                return Err(ConfigError::Invalid(format!("disabled_rules: no entry with rule id `{rule}`")));
            }
            config = config.without_rule(rule);
        }
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::from_toml(&text)
    }

    /// Rule ids of every registry entry, in registry order.
    pub fn rule_ids(&self) -> Vec<String> {
        let mut out = Vec::new();
        macro_rules! collect {
            ($self:ident, $field:ident, $name:literal) => {
                out.extend($self.$field.iter().map(|e| format!("{}.{}", $name, e.id)));
            };
        }
        registries!(self, collect);
        out
    }

    /// The same configuration with one registry entry removed.
    pub fn without_rule(&self, rule_id: &str) -> Self {
        let mut config = self.clone();
        macro_rules! drop_entry {
            ($self:ident, $field:ident, $name:literal) => {
                $self.$field.retain(|e| format!("{}.{}", $name, e.id) != rule_id);
            };
        }
        let target = &mut config;
        registries!(target, drop_entry);
        config
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_string(self).expect("config serialises");
        hex::encode(Sha256::digest(json.as_bytes()))
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let bad = |msg: String| Err(ConfigError::Invalid(msg));
        let mut seen = BTreeSet::new();
        for id in self.rule_ids() {
            if !seen.insert(id.clone()) {
                return bad(format!("duplicate rule id `{id}`"));
            }
        }
        macro_rules! check {
            ($self:ident, $field:ident, $name:literal) => {
                for e in &$self.$field {
                    if e.id.trim().is_empty() {
                        return bad(format!("{}: entry without id", stringify!($field)));
                    }
                    if e.note.trim().is_empty() {
                        return bad(format!("{}.{}: a note is required", $name, e.id));
                    }
                }
            };
        }
        registries!(self, check);
        let s = &self.settings;
        for (name, v) in [
            ("pattern_b_fraction", s.pattern_b_fraction),
            ("pattern_c_ratio", s.pattern_c_ratio),
            ("thesaurus_class_fraction", s.thesaurus_class_fraction),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return bad(format!("settings.{name} must be a positive number"));
            }
        }
        if self.expected_minimums.iter().any(|e| e.minimum == 0) {
            return bad("expected_minimums: minimum must be at least 1".into());
        }
        let patterns = self
            .contested_subsumptions
            .iter()
            .flat_map(|e| [&e.sub, &e.sup])
            .chain(self.expected_minimums.iter().map(|e| &e.class))
            .chain(self.loaded_term_lexicon.iter().map(|e| &e.term))
            .chain(self.sensitive_dimensions.iter().map(|e| &e.class))
            .chain(self.region_variant_lexicon.iter().map(|e| &e.variant))
            .chain(self.top_level_markers.iter().map(|e| &e.term))
            .chain(self.disputed_entities.iter().flat_map(|e| [&e.name, &e.container]))
            .chain(self.misclassifications.iter().flat_map(|e| [&e.member, &e.container]));
        for p in patterns {
            if super::Pattern::new(p).is_trivial() {
                return bad(format!("pattern `{p}` matches every name"));
            }
        }
        Ok(())
    }
}

impl Settings {
    fn apply(&mut self, patch: SettingsPatch) {
        macro_rules! take {
            ($($f:ident),*) => { $(if let Some(v) = patch.$f { self.$f = v; })* };
        }
        take!(
            label_properties,
            thesaurus_annotation_properties,
            boolean_datatypes,
            participation_properties,
            process_terms,
            pattern_b_fraction,
            pattern_c_ratio,
            thesaurus_class_fraction,
            monolingual_min_classes
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_the_default() {
        assert_eq!(RuleConfig::from_toml("").unwrap(), RuleConfig::default());
    }

    #[test]
    fn every_default_entry_has_a_note() {
        let config = RuleConfig::default();
        assert!(config.contested_subsumptions.iter().all(|e| !e.note.is_empty()));
        assert_eq!(config.rule_ids().len(), 34);
    }

    #[test]
    fn present_section_replaces_default() {
        let text = r#"
            [[contested_subsumptions]]
            id = "x"
            sub = "a"
            sup = "b"
            category = "science"
            note = "local rule"
        "#;
        let config = RuleConfig::from_toml(text).unwrap();
        assert_eq!(config.contested_subsumptions.len(), 1);
        assert_eq!(config.expected_minimums, RuleConfig::default().expected_minimums);
    }

    #[test]
    fn settings_merge_per_key() {
        let config = RuleConfig::from_toml("[settings]\npattern_c_ratio = 5.0").unwrap();
        assert_eq!(config.settings.pattern_c_ratio, 5.0);
        assert_eq!(config.settings.pattern_b_fraction, 0.5);
    }

    #[test]
    fn unknown_key_is_named() {
        let err = RuleConfig::from_toml("[settings]\nratio = 1").unwrap_err();
        assert!(err.to_string().contains("settings"), "{err}");
        assert!(err.to_string().contains("ratio"), "{err}");
        let err = RuleConfig::from_toml("colour = 1").unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
    }

    #[test]
    fn disabled_rules_drop_entries() {
        let config = RuleConfig::from_toml(r#"disabled_rules = ["contested.virus-organism"]"#).unwrap();
        assert!(config.contested_subsumptions.iter().all(|e| e.id != "virus-organism"));
        assert_eq!(config, RuleConfig::default().without_rule("contested.virus-organism"));
        assert!(RuleConfig::from_toml(r#"disabled_rules = ["contested.nope"]"#).is_err());
    }

    #[test]
    fn missing_note_is_rejected() {
        let text = "[[disputed_entities]]\nid = \"x\"\nname = \"x\"\ncontainer = \"y\"\nnote = \"\"";
        assert!(matches!(RuleConfig::from_toml(text), Err(ConfigError::Invalid(_))));
    }

    #[test]
    fn fingerprint_tracks_content() {
        let a = RuleConfig::default();
        assert_eq!(a.fingerprint(), RuleConfig::default().fingerprint());
        assert_ne!(a.fingerprint(), a.without_rule("variant.color").fingerprint());
        assert_eq!(a.fingerprint().len(), 64);
    }
}
