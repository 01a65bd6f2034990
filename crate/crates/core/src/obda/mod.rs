//! Ontology-based data access over small tabular sources.
//!
//! Named classes are mapped to filtered table rows. A class query returns
//! the mapped rows of the class and, with closure, of every class it
//! subsumes; the difference between the two answers shows what the
//! hierarchy adds.

mod mapping;
mod tables;

use std::collections::{BTreeMap, BTreeSet};

use crate::owl::{EntityKind, Iri, LookupError, OntologyModel};
use crate::reasoner::{Fact, ReasonerError, TaxonomyIndex};

pub use mapping::{MappingEntry, MappingSpec, SameAs};
pub use tables::{load_table_dir, load_tables, TabularSource};

#[derive(Debug, thiserror::Error)]
pub enum ObdaError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("table {table}: {message}")]
    Csv { table: String, message: String },
    #[error("table {table}, line {line}: expected {expected} cells, found {found}")]
    RaggedRow { table: String, line: usize, expected: usize, found: usize },
    #[error("duplicate table name `{0}`")]
    DuplicateTable(String),
    #[error("mapping document: {0}")]
    Mapping(String),
    #[error("mapping {entry}: {source}")]
    MappedClass {
        entry: usize,
        #[source]
        source: LookupError,
    },
    #[error("mapping {entry}: no table `{table}`")]
    UnknownTable { entry: usize, table: String },
    #[error("mapping {entry}: table `{table}` has no column `{column}`")]
    UnknownColumn { entry: usize, table: String, column: String },
    #[error("{0}")]
    Lookup(#[from] LookupError),
    #[error("{0}")]
    Reasoner(#[from] ReasonerError),
}

/// Why an individual appears only in the closure answer: it is mapped to
/// `via`, which the queried class subsumes through `axioms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub via: Iri,
    /// Index into the mapping entries.
    pub mapping: usize,
    /// Asserted axioms deriving `via ⊑ class`.
    pub axioms: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionDiff {
    pub class: Iri,
    pub closure: BTreeSet<String>,
    pub flat: BTreeSet<String>,
    pub difference: BTreeSet<String>,
    pub provenance: BTreeMap<String, Vec<Provenance>>,
}

/// Mappings checked against a model and loaded tables, with each mapped
/// class's flat answer precomputed.
#[derive(Debug, Clone)]
pub struct Obda<'a> {
    model: &'a OntologyModel,
    index: &'a TaxonomyIndex,
    /// (mapping entry, class, individuals)
    mapped: Vec<(usize, Iri, BTreeSet<String>)>,
}

impl<'a> Obda<'a> {
    pub fn new(
        model: &'a OntologyModel,
        index: &'a TaxonomyIndex,
        spec: &MappingSpec,
        tables: &[TabularSource],
    ) -> Result<Self, ObdaError> {
        let canonical = same_as_classes(spec);
        let mut mapped = Vec::new();
        for (entry, m) in spec.entries.iter().enumerate() {
            let class = model.find_class(&m.class).map_err(|source| ObdaError::MappedClass { entry, source })?;
            let table = tables
                .iter()
                .find(|t| t.name == m.source)
                .ok_or_else(|| ObdaError::UnknownTable { entry, table: m.source.clone() })?;
            let column = |name: &str| {
                table.column(name).ok_or_else(|| ObdaError::UnknownColumn {
                    entry,
                    table: table.name.clone(),
                    column: name.to_owned(),
                })
            };
            let id = column(&m.id_column)?;
            let filters: Vec<(usize, &str)> =
                m.filter.iter().map(|(c, v)| column(c).map(|i| (i, v.as_str()))).collect::<Result<_, _>>()?;
            let individuals = table
                .rows
                .iter()
                .filter(|row| filters.iter().all(|&(i, v)| row[i] == v))
                .map(|row| {
                    let name = format!("{}:{}", table.name, row[id]);
                    canonical.get(&name).cloned().unwrap_or(name)
                })
                .collect();
            mapped.push((entry, class, individuals));
        }
        Ok(Obda { model, index, mapped })
    }

    fn class(&self, class: &Iri) -> Result<(), ObdaError> {
        if self.model.kind_of(class) == Some(EntityKind::Class) && self.index.contains(class) {
            Ok(())
        } else {
            Err(LookupError::Unknown(class.to_string()).into())
        }
    }

    /// Instances of `class`: its own mapped rows, plus with `closure` those
    /// of every class it subsumes.
    pub fn answer(&self, class: &Iri, closure: bool) -> Result<BTreeSet<String>, ObdaError> {
        self.class(class)?;
        let mut out = BTreeSet::new();
        for (_, mapped, individuals) in &self.mapped {
            let applies = mapped == class || (closure && self.index.is_subclass_of(mapped, class).unwrap_or(false));
            if applies {
                out.extend(individuals.iter().cloned());
            }
        }
        Ok(out)
    }

    pub fn deduction_diff(&self, class: &Iri) -> Result<DeductionDiff, ObdaError> {
        let closure = self.answer(class, true)?;
        let flat = self.answer(class, false)?;
        let difference: BTreeSet<String> = closure.difference(&flat).cloned().collect();
        let mut provenance: BTreeMap<String, Vec<Provenance>> = BTreeMap::new();
        for (entry, via, individuals) in &self.mapped {
            if via == class || !self.index.is_subclass_of(via, class)? {
                continue;
            }
            let extra: Vec<&String> = individuals.iter().filter(|i| difference.contains(*i)).collect();
            if extra.is_empty() {
                continue;
            }
            let axioms = self.index.explain(&Fact::Subsumption(via.clone(), class.clone()))?.axioms;
            for individual in extra {
                provenance.entry(individual.clone()).or_default().push(Provenance {
                    via: via.clone(),
                    mapping: *entry,
                    axioms: axioms.clone(),
                });
            }
        }
        Ok(DeductionDiff { class: class.clone(), closure, flat, difference, provenance })
    }
}

/// Representative (smallest name) of every individual in a same-as group.
fn same_as_classes(spec: &MappingSpec) -> BTreeMap<String, String> {
    let mut groups: Vec<BTreeSet<String>> = Vec::new();
    for link in &spec.same_as {
        let pair = BTreeSet::from([link.left.clone(), link.right.clone()]);
        let (joined, rest): (Vec<_>, Vec<_>) = groups.into_iter().partition(|g| !g.is_disjoint(&pair));
        let mut merged = pair;
        for g in joined {
            merged.extend(g);
        }
        groups = rest;
        groups.push(merged);
    }
    groups
        .into_iter()
        .flat_map(|g| {
            let rep = g.iter().next().expect("non-empty group").clone();
            g.into_iter().map(move |m| (m, rep.clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ofn::{parse, ParserOptions};
    use crate::reasoner::classify;

    const ONTOLOGY: &str =
        "Prefix(:=<http://ex.org/d#>)\nOntology(\nSubClassOf(:Trial :Drug)\nDeclaration(Class(:Leaf))\n)";

    fn table() -> TabularSource {
        TabularSource::parse("t", "id,kind\na,drug\nb,trial\nc,trial\n").unwrap()
    }

    fn spec(links: &[(&str, &str)]) -> MappingSpec {
        let entry = |class: &str, kind: &str| MappingEntry {
            class: class.into(),
            source: "t".into(),
            id_column: "id".into(),
            filter: BTreeMap::from([("kind".into(), kind.into())]),
        };
        MappingSpec {
            entries: vec![entry("Drug", "drug"), entry("Trial", "trial")],
            same_as: links.iter().map(|(l, r)| SameAs { left: (*l).into(), right: (*r).into() }).collect(),
        }
    }

    fn d(name: &str) -> Iri {
        Iri::new(format!("http://ex.org/d#{name}")).unwrap()
    }

    #[test]
    fn closure_adds_subclass_rows() {
        let model = parse(ONTOLOGY, &ParserOptions::default()).unwrap().model;
        let index = classify(&model);
        let obda = Obda::new(&model, &index, &spec(&[]), &[table()]).unwrap();
        assert_eq!(obda.answer(&d("Drug"), false).unwrap(), BTreeSet::from(["t:a".to_owned()]));
        assert_eq!(obda.answer(&d("Drug"), true).unwrap().len(), 3);
        assert!(obda.answer(&d("Leaf"), false).unwrap().is_empty());
        let diff = obda.deduction_diff(&d("Drug")).unwrap();
        assert_eq!(diff.difference.len(), 2);
        assert_eq!(diff.provenance["t:b"][0].via, d("Trial"));
        assert!(obda.deduction_diff(&d("Leaf")).unwrap().difference.is_empty());
    }

    #[test]
    fn same_as_merges_individuals() {
        let model = parse(ONTOLOGY, &ParserOptions::default()).unwrap().model;
        let index = classify(&model);
        let obda = Obda::new(&model, &index, &spec(&[("t:b", "t:a")]), &[table()]).unwrap();
        let diff = obda.deduction_diff(&d("Drug")).unwrap();
        assert_eq!(diff.difference, BTreeSet::from(["t:c".to_owned()]));
    }

    #[test]
    fn bad_references_are_errors() {
        let model = parse(ONTOLOGY, &ParserOptions::default()).unwrap().model;
        let index = classify(&model);
        let mut s = spec(&[]);
        s.entries[0].source = "missing".into();
        assert!(matches!(Obda::new(&model, &index, &s, &[table()]), Err(ObdaError::UnknownTable { .. })));
        let mut s = spec(&[]);
        s.entries[0].id_column = "nope".into();
        assert!(matches!(Obda::new(&model, &index, &s, &[table()]), Err(ObdaError::UnknownColumn { .. })));
        let mut s = spec(&[]);
        s.entries[0].class = "Ghost".into();
        assert!(matches!(Obda::new(&model, &index, &s, &[table()]), Err(ObdaError::MappedClass { .. })));
        let obda = Obda::new(&model, &index, &spec(&[]), &[table()]).unwrap();
        assert!(obda.answer(&d("Ghost"), true).is_err());
    }
}
