//! Registry-driven bias detectors, one per bias type.
//!
//! Each detector is a pure function of the model, its classification and
//! the rule configuration. Registry-backed findings carry the rule id of
//! the entry that produced them (`<registry>.<entry id>`); structural checks
//! use fixed ids.

mod config;
mod context;
mod granularity;
mod linguistic;
mod matching;
mod philosophical;
mod political;
mod purpose;
mod science;
mod sociocultural;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::owl::{Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

pub use config::{
    ConfigError, ContestedSubsumption, DisputedEntity, ExpectedMinimum, FoundationalNamespace, LexiconBias, LoadedTerm,
    Misclassification, RegionVariant, RuleConfig, SensitiveDimension, Settings, SubsumptionCategory, TopLevelMarker,
};
pub use matching::{compact, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BiasType {
    Philosophical,
    Purpose,
    Science,
    Granularity,
    Linguistic,
    SocioCultural,
    PoliticalReligious,
    Economic,
}

impl BiasType {
    pub const ALL: [BiasType; 8] = [
        BiasType::Philosophical,
        BiasType::Purpose,
        BiasType::Science,
        BiasType::Granularity,
        BiasType::Linguistic,
        BiasType::SocioCultural,
        BiasType::PoliticalReligious,
        BiasType::Economic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BiasType::Philosophical => "Philosophical",
            BiasType::Purpose => "Purpose",
            BiasType::Science => "Science",
            BiasType::Granularity => "Granularity",
            BiasType::Linguistic => "Linguistic",
            BiasType::SocioCultural => "SocioCultural",
            BiasType::PoliticalReligious => "PoliticalReligious",
            BiasType::Economic => "Economic",
        }
    }

    /// Human-facing row title.
    pub fn title(self) -> &'static str {
        match self {
            BiasType::Philosophical => "Philosophical",
            BiasType::Purpose => "Purpose",
            BiasType::Science => "Science",
            BiasType::Granularity => "Granularity",
            BiasType::Linguistic => "Linguistic",
            BiasType::SocioCultural => "Socio-cultural",
            BiasType::PoliticalReligious => "Political or religious",
            BiasType::Economic => "Economic",
        }
    }

    pub fn explicitness(self) -> Explicitness {
        match self {
            BiasType::Philosophical | BiasType::Purpose | BiasType::Science | BiasType::Economic => {
                Explicitness::Explicit
            }
            _ => Explicitness::Either,
        }
    }
}

impl fmt::Display for BiasType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown bias type `{0}`")]
pub struct UnknownBiasType(pub String);

impl FromStr for BiasType {
    type Err = UnknownBiasType;

    /// Case-insensitive; spaces, hyphens and underscores are ignored, and
    /// "political" alone is accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = compact(s);
        BiasType::ALL
            .into_iter()
            .find(|b| compact(b.name()) == key || compact(b.title()) == key)
            .or_else(|| (key == "political").then_some(BiasType::PoliticalReligious))
            .ok_or_else(|| UnknownBiasType(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Explicitness {
    Explicit,
    Either,
}

/// Only granularity findings carry a severity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Partial,
    #[default]
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConsequenceClass {
    Omission,
    IncorrectAttribution,
    UndesirableDeduction,
    Terminology,
}

/// A reference to one asserted axiom of the audited model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    /// Position in the model's axiom list.
    pub index: usize,
    /// Functional-syntax rendering.
    pub axiom: String,
    pub file: Option<String>,
    pub line: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub bias_type: BiasType,
    pub rule_id: String,
    pub explicitness: Explicitness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub severity: Option<Severity>,
    pub subjects: Vec<Iri>,
    pub evidence: Vec<Evidence>,
    pub message: String,
    pub suggestions: Vec<String>,
    pub consequence_class: ConsequenceClass,
}

type Detector = fn(&OntologyModel, &TaxonomyIndex, &RuleConfig) -> Vec<Finding>;

pub use granularity::detect_granularity;
pub use linguistic::detect_linguistic;
pub use philosophical::detect_philosophical;
pub use political::detect_political;
pub use purpose::detect_purpose;
pub use science::{detect_economic, detect_science};
pub use sociocultural::detect_sociocultural;

const DETECTORS: [Detector; 8] = [
    detect_philosophical,
    detect_purpose,
    detect_science,
    detect_granularity,
    detect_linguistic,
    detect_sociocultural,
    detect_political,
    detect_economic,
];

/// All eight detectors, run concurrently and concatenated in bias-type order.
pub fn run_all(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    DETECTORS.par_iter().map(|detect| detect(model, index, config)).collect::<Vec<_>>().concat()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicitness_follows_the_bias_type() {
        let explicit: Vec<_> =
            BiasType::ALL.into_iter().filter(|b| b.explicitness() == Explicitness::Explicit).collect();
        assert_eq!(explicit, [BiasType::Philosophical, BiasType::Purpose, BiasType::Science, BiasType::Economic]);
    }

    #[test]
    fn bias_type_names_parse_back() {
        for b in BiasType::ALL {
            assert_eq!(b.name().parse::<BiasType>().unwrap(), b);
            assert_eq!(b.title().parse::<BiasType>().unwrap(), b);
        }
        assert_eq!("socio-cultural".parse::<BiasType>().unwrap(), BiasType::SocioCultural);
        assert!("aesthetic".parse::<BiasType>().is_err());
    }

    #[test]
    fn empty_ontology_has_no_findings() {
        let model = OntologyModel::empty();
        let index = crate::reasoner::classify(&model);
        assert!(run_all(&model, &index, &RuleConfig::default()).is_empty());
    }
}
