use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::axiom::{AnnotationValue, Axiom, AxiomKind, AxiomVariant, Entity, EntityKind};
use super::iri::{Iri, PrefixTable};

/// Attempt to give one IRI a second entity kind.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{iri} is already declared as {existing}; cannot also declare it as {requested}")]
pub struct PunningError {
    pub iri: Iri,
    pub existing: EntityKind,
    pub requested: EntityKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LookupError {
    #[error("no class named `{0}`")]
    Unknown(String),
    #[error("`{0}` names several classes: {list}", list = .1.iter().map(Iri::to_string).collect::<Vec<_>>().join(", "))]
    Ambiguous(String, Vec<Iri>),
}

/// Per-kind entity counts plus the number of logical axioms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EntityCensus {
    pub classes: usize,
    pub object_properties: usize,
    pub data_properties: usize,
    pub individuals: usize,
    pub annotation_properties: usize,
    pub logical_axioms: usize,
}

/// One annotation assertion on a subject, borrowed from the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annotation<'a> {
    pub property: &'a Iri,
    pub value: &'a AnnotationValue,
    /// Position of the asserting axiom in [`OntologyModel::axioms`].
    pub axiom: usize,
}

impl<'a> Annotation<'a> {
    pub fn lexical(&self) -> Option<&'a str> {
        self.value.as_literal().map(|lit| lit.lexical.as_str())
    }

    pub fn language(&self) -> Option<&'a str> {
        self.value.as_literal().and_then(|lit| lit.language.as_deref())
    }
}

#[derive(Debug, Clone, Default)]
struct Indexes {
    by_subject: HashMap<Iri, Vec<usize>>,
    annotations_by_subject: HashMap<Iri, Vec<usize>>,
    by_annotation_property: HashMap<Iri, Vec<usize>>,
    by_variant: BTreeMap<AxiomVariant, Vec<usize>>,
}

impl Indexes {
    fn build(axioms: &[Axiom]) -> Self {
        let mut idx = Indexes::default();
        for (i, axiom) in axioms.iter().enumerate() {
            idx.by_variant.entry(axiom.kind.variant()).or_default().push(i);
            let mut seen = BTreeSet::new();
            for subject in axiom.kind.subjects() {
                if seen.insert(subject) {
                    idx.by_subject.entry(subject.clone()).or_default().push(i);
                }
            }
            if let AxiomKind::AnnotationAssertion { subject, property, .. } = &axiom.kind {
                idx.annotations_by_subject.entry(subject.clone()).or_default().push(i);
                idx.by_annotation_property.entry(property.clone()).or_default().push(i);
            }
        }
        idx
    }
}

/// Indexed, immutable store of one parsed ontology.
#[derive(Debug, Clone)]
pub struct OntologyModel {
    ontology_iri: Option<Iri>,
    source_name: Option<String>,
    prefixes: PrefixTable,
    entities: BTreeMap<Iri, EntityKind>,
    axioms: Vec<Axiom>,
    indexes: Indexes,
}

impl OntologyModel {
    pub fn builder() -> ModelBuilder {
        ModelBuilder::default()
    }

    pub fn empty() -> Self {
        ModelBuilder::default().build()
    }

    pub fn ontology_iri(&self) -> Option<&Iri> {
        self.ontology_iri.as_ref()
    }

    pub fn with_source_name(mut self, name: Option<String>) -> Self {
        self.source_name = name;
        self
    }

    /// File name or other label the model was read from, for evidence.
    pub fn source_name(&self) -> Option<&str> {
        self.source_name.as_deref()
    }

    pub fn prefixes(&self) -> &PrefixTable {
        &self.prefixes
    }

    /// Axioms in source order.
    pub fn axioms(&self) -> &[Axiom] {
        &self.axioms
    }

    pub fn axiom(&self, index: usize) -> Option<&Axiom> {
        self.axioms.get(index)
    }

    pub fn entities(&self) -> impl Iterator<Item = Entity> + '_ {
        self.entities.iter().map(|(iri, kind)| Entity::new(*kind, iri.clone()))
    }

    pub fn kind_of(&self, iri: &Iri) -> Option<EntityKind> {
        self.entities.get(iri).copied()
    }

    pub fn is_declared(&self, iri: &Iri, kind: EntityKind) -> bool {
        self.kind_of(iri) == Some(kind)
    }

    pub fn entities_of_kind(&self, kind: EntityKind) -> BTreeSet<Iri> {
        self.entities.iter().filter(|(_, k)| **k == kind).map(|(iri, _)| iri.clone()).collect()
    }

    pub fn profile_stats(&self) -> EntityCensus {
        let mut census = EntityCensus::default();
        for kind in self.entities.values() {
            match kind {
                EntityKind::Class => census.classes += 1,
                EntityKind::ObjectProperty => census.object_properties += 1,
                EntityKind::DataProperty => census.data_properties += 1,
                EntityKind::NamedIndividual => census.individuals += 1,
                EntityKind::AnnotationProperty => census.annotation_properties += 1,
            }
        }
        census.logical_axioms = self.axioms.iter().filter(|a| a.kind.is_logical()).count();
        census
    }

    /// Axiom positions with the given variant, in source order.
    pub fn axioms_of_variant(&self, variant: AxiomVariant) -> &[usize] {
        self.indexes.by_variant.get(&variant).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Axiom positions whose subject list contains `iri`, in source order.
    pub fn axioms_about(&self, iri: &Iri) -> &[usize] {
        self.indexes.by_subject.get(iri).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Positions of annotation assertions using `property`.
    pub fn axioms_with_annotation_property(&self, property: &Iri) -> &[usize] {
        self.indexes.by_annotation_property.get(property).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Annotations on `subject`, optionally restricted to one property
    /// (`None` is the wildcard), in source order.
    pub fn annotations_of(&self, subject: &Iri, property: Option<&Iri>) -> Vec<Annotation<'_>> {
        let Some(positions) = self.indexes.annotations_by_subject.get(subject) else {
            return Vec::new();
        };
        positions
            .iter()
            .filter_map(|&i| match &self.axioms[i].kind {
                AxiomKind::AnnotationAssertion { property: p, value, .. } if property.is_none_or(|want| want == p) => {
                    Some(Annotation { property: p, value, axiom: i })
                }
                _ => None,
            })
            .collect()
    }

    /// Same entities, same axiom multiset (ignoring locations), same prefixes
    /// and ontology IRI.
    pub fn structurally_eq(&self, other: &OntologyModel) -> bool {
        fn multiset(model: &OntologyModel) -> BTreeMap<&AxiomKind, usize> {
            let mut counts = BTreeMap::new();
            for axiom in &model.axioms {
                *counts.entry(&axiom.kind).or_insert(0) += 1;
            }
            counts
        }
        self.ontology_iri == other.ontology_iri
            && self.prefixes == other.prefixes
            && self.entities == other.entities
            && multiset(self) == multiset(other)
    }

    /// Finds a class by full IRI, prefixed name, local name or label
    /// (`rdfs:label` or `skos:prefLabel`, case-insensitive).
    pub fn find_class(&self, name: &str) -> Result<Iri, LookupError> {
        let name = name.trim();
        let is_class = |iri: &Iri| self.kind_of(iri) == Some(EntityKind::Class);
        let direct = if name.contains("://") { Iri::new(name) } else { self.prefixes.expand(name) };
        if let Some(iri) = direct.filter(|i| is_class(i)) {
            return Ok(iri);
        }
        let label_props = [format!("{}label", super::ns::RDFS), format!("{}prefLabel", super::ns::SKOS)];
        let wanted = name.to_lowercase();
        let hits: Vec<Iri> = self
            .entities_of_kind(EntityKind::Class)
            .into_iter()
            .filter(|c| {
                c.local_name() == name
                    || self.annotations_of(c, None).iter().any(|a| {
                        label_props.iter().any(|p| p == a.property.as_str())
                            && a.lexical().is_some_and(|l| l.trim().to_lowercase() == wanted)
                    })
            })
            .collect();
        match hits.len() {
            0 => Err(LookupError::Unknown(name.to_owned())),
            1 => Ok(hits.into_iter().next().expect("one hit")),
            _ => Err(LookupError::Ambiguous(name.to_owned(), hits)),
        }
    }
}

/// Mutable staging area; [`ModelBuilder::build`] freezes it into a model.
#[derive(Debug, Clone, Default)]
pub struct ModelBuilder {
    ontology_iri: Option<Iri>,
    source_name: Option<String>,
    prefixes: PrefixTable,
    entities: BTreeMap<Iri, EntityKind>,
    axioms: Vec<Axiom>,
}

impl ModelBuilder {
    pub fn ontology_iri(mut self, iri: Iri) -> Self {
        self.ontology_iri = Some(iri);
        self
    }

    pub fn source_name(mut self, name: impl Into<String>) -> Self {
        self.source_name = Some(name.into());
        self
    }

    pub fn set_ontology_iri(&mut self, iri: Option<Iri>) {
        self.ontology_iri = iri;
    }

    pub fn set_source_name(&mut self, name: Option<String>) {
        self.source_name = name;
    }

    pub fn prefix(&mut self, prefix: impl Into<String>, expansion: impl Into<String>) {
        self.prefixes.insert(prefix, expansion);
    }

    pub fn prefixes(&self) -> &PrefixTable {
        &self.prefixes
    }

    pub fn kind_of(&self, iri: &Iri) -> Option<EntityKind> {
        self.entities.get(iri).copied()
    }

    /// Registers an entity without recording a `Declaration` axiom.
    pub fn declare(&mut self, entity: Entity) -> Result<(), PunningError> {
        match self.entities.get(&entity.iri) {
            Some(&existing) if existing != entity.kind => {
                Err(PunningError { iri: entity.iri, existing, requested: entity.kind })
            }
            Some(_) => Ok(()),
            None => {
                self.entities.insert(entity.iri, entity.kind);
                Ok(())
            }
        }
    }

    /// Appends an axiom; declarations also register their entity.
    pub fn add_axiom(&mut self, axiom: impl Into<Axiom>) -> Result<(), PunningError> {
        let axiom = axiom.into();
        if let AxiomKind::Declaration(entity) = &axiom.kind {
            self.declare(entity.clone())?;
        }
        self.axioms.push(axiom);
        Ok(())
    }

    /// Convenience for programmatic construction: declaration axiom for `iri`.
    pub fn declare_axiom(&mut self, kind: EntityKind, iri: Iri) -> Result<(), PunningError> {
        self.add_axiom(AxiomKind::Declaration(Entity::new(kind, iri)))
    }

    pub fn build(self) -> OntologyModel {
        let indexes = Indexes::build(&self.axioms);
        OntologyModel {
            ontology_iri: self.ontology_iri,
            source_name: self.source_name,
            prefixes: self.prefixes,
            entities: self.entities,
            axioms: self.axioms,
            indexes,
        }
    }
}
