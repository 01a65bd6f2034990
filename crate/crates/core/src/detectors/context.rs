use std::collections::{BTreeMap, BTreeSet};

use super::matching::{compact, Pattern};
use super::{BiasType, ConsequenceClass, Evidence, Finding, RuleConfig};
use crate::ofn::render_axiom;
use crate::owl::{AxiomKind, EntityKind, Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

/// One name of an entity: its local name or a label literal.
#[derive(Debug, Clone)]
pub(super) struct Name {
    pub text: String,
    pub compact: String,
    /// The label assertion, `None` for the local name.
    pub axiom: Option<usize>,
}

/// Shared lookups for one detector run.
pub(super) struct Context<'a> {
    pub model: &'a OntologyModel,
    pub index: &'a TaxonomyIndex,
    pub config: &'a RuleConfig,
    names: BTreeMap<Iri, Vec<Name>>,
}

impl<'a> Context<'a> {
    pub fn new(model: &'a OntologyModel, index: &'a TaxonomyIndex, config: &'a RuleConfig) -> Self {
        let label_props: Vec<Iri> =
            config.settings.label_properties.iter().filter_map(|p| Iri::new(p.as_str())).collect();
        let mut names = BTreeMap::new();
        for entity in model.entities() {
            let local = entity.iri.local_name().to_owned();
            let mut list = vec![Name { compact: compact(&local), text: local, axiom: None }];
            for a in model.annotations_of(&entity.iri, None) {
                if !label_props.contains(a.property) {
                    continue;
                }
                if let Some(text) = a.lexical() {
                    list.push(Name { compact: compact(text), text: text.to_owned(), axiom: Some(a.axiom) });
                }
            }
            names.insert(entity.iri, list);
        }
        Context { model, index, config, names }
    }

    pub fn names(&self, iri: &Iri) -> &[Name] {
        self.names.get(iri).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Entities of the given kinds with a name matching `pattern` (whole
    /// name), each with its first matching name. Sorted by IRI.
    pub fn matching(&self, pattern: &str, kinds: &[EntityKind]) -> Vec<(&Iri, &Name)> {
        let pattern = Pattern::new(pattern);
        self.names
            .iter()
            .filter(|(iri, _)| self.model.kind_of(iri).is_some_and(|k| kinds.contains(&k)))
            .filter_map(|(iri, names)| names.iter().find(|n| pattern.matches_compact(&n.compact)).map(|n| (iri, n)))
            .collect()
    }

    pub fn classes_matching(&self, pattern: &str) -> Vec<(&Iri, &Name)> {
        self.matching(pattern, &[EntityKind::Class])
    }

    /// Whether any name of `iri` matches `pattern`.
    pub fn is_named(&self, iri: &Iri, pattern: &Pattern) -> bool {
        self.names(iri).iter().any(|n| pattern.matches_compact(&n.compact))
    }

    /// First label, else the local name.
    pub fn display(&self, iri: &Iri) -> String {
        let names = self.names(iri);
        names
            .iter()
            .find(|n| n.axiom.is_some())
            .or(names.first())
            .map_or_else(|| iri.local_name().to_owned(), |n| n.text.clone())
    }

    /// Axioms that introduce `iri`: its declarations, otherwise the first
    /// axiom mentioning it.
    pub fn anchor(&self, iri: &Iri) -> Vec<usize> {
        let declarations: Vec<usize> = self
            .model
            .axioms_about(iri)
            .iter()
            .copied()
            .filter(|&i| matches!(self.model.axioms()[i].kind, AxiomKind::Declaration(_)))
            .collect();
        if !declarations.is_empty() {
            return declarations;
        }
        self.model.axioms().iter().position(|a| a.kind.signature().contains(&iri)).into_iter().collect()
    }

    /// Evidence for a name: the label assertion, or the anchor for a local name.
    pub fn name_evidence(&self, iri: &Iri, name: &Name) -> Vec<usize> {
        name.axiom.map_or_else(|| self.anchor(iri), |a| vec![a])
    }

    /// Asserted `SubClassOf(sub sup)` axioms between two named classes.
    pub fn asserted_edges(&self, sub: &Iri, sup: &Iri) -> Vec<usize> {
        self.model
            .axioms_about(sub)
            .iter()
            .copied()
            .filter(|&i| {
                matches!(&self.model.axioms()[i].kind,
                AxiomKind::SubClassOf { sup: s, .. } if s.as_named() == Some(sup))
            })
            .collect()
    }

    pub fn evidence(&self, axioms: impl IntoIterator<Item = usize>) -> Vec<Evidence> {
        let positions: BTreeSet<usize> = axioms.into_iter().collect();
        positions
            .into_iter()
            .map(|index| {
                let axiom = &self.model.axioms()[index];
                Evidence {
                    index,
                    axiom: render_axiom(&axiom.kind, self.model.prefixes()),
                    file: self.model.source_name().map(str::to_owned),
                    line: axiom.line(),
                }
            })
            .collect()
    }

    pub fn finding(
        &self,
        bias_type: BiasType,
        rule_id: impl Into<String>,
        consequence_class: ConsequenceClass,
        subjects: Vec<Iri>,
        axioms: impl IntoIterator<Item = usize>,
        message: impl Into<String>,
    ) -> Finding {
        Finding {
            bias_type,
            rule_id: rule_id.into(),
            explicitness: bias_type.explicitness(),
            severity: None,
            subjects,
            evidence: self.evidence(axioms),
            message: message.into(),
            suggestions: Vec::new(),
            consequence_class,
        }
    }
}

/// "a, b and c"
pub(super) fn join(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {}", init.join(", "), last),
    }
}

/// "1 label", "3 labels"
pub(super) fn count(n: usize, singular: &str, plural: &str) -> String {
    format!("{n} {}", if n == 1 { singular } else { plural })
}
