#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use ontobias::ofn::{parse_file, ParserOptions};
use ontobias::owl::{AxiomKind, ClassExpression, Iri, ModelBuilder, OntologyModel};
use proptest::prelude::*;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

pub fn load(rel: &str) -> OntologyModel {
    parse_file(&fixture(rel), &ParserOptions::default()).unwrap().model
}

/// Every `.ofn` file under the fixture directory, sorted.
pub fn corpus() -> Vec<PathBuf> {
    let mut out = Vec::new();
    let mut stack = vec![fixture("")];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "ofn") {
                out.push(path);
            }
        }
    }
    out.sort();
    out
}

pub const MINI: [&str; 3] = ["covid/mini_cido.ofn", "covid/mini_codo.ofn", "covid/mini_covoc.ofn"];

pub fn class(i: usize) -> Iri {
    Iri::new(format!("http://example.org/r#C{i}")).unwrap()
}

pub fn model_of(axioms: &[AxiomKind]) -> OntologyModel {
    let mut b = ModelBuilder::default();
    for ax in axioms {
        b.add_axiom(ax.clone()).unwrap();
    }
    b.build()
}

pub fn sub(a: usize, b: usize) -> AxiomKind {
    AxiomKind::SubClassOf { sub: ClassExpression::named(class(a)), sup: ClassExpression::named(class(b)) }
}

/// Reflexive-transitive reachability over `edges`, by depth-first search
/// from every node.
pub fn reachability(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    (0..n)
        .map(|start| {
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(a, b) in edges {
                    if a == x && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
            seen
        })
        .collect()
}

pub fn hierarchy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=15).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..2 * n)))
}

/// Random axioms over at most 15 classes mixing subsumption, disjointness
/// and the three covering forms.
pub fn mixed_axioms() -> impl Strategy<Value = (usize, Vec<AxiomKind>)> {
    (3usize..=15).prop_flat_map(|n| {
        let edge = (0..n, 0..n).prop_map(|(a, b)| sub(a, b));
        let disjoint = (0..n, 0..n).prop_filter_map("distinct", |(a, b)| {
            (a != b).then(|| {
                AxiomKind::DisjointClasses(vec![ClassExpression::named(class(a)), ClassExpression::named(class(b))])
            })
        });
        let covering = (0..n, prop::collection::btree_set(0..n, 2..=3), 0..3u8).prop_filter_map(
            "covered class outside disjuncts",
            |(c, ds, form)| {
                if ds.contains(&c) {
                    return None;
                }
                let named: Vec<ClassExpression> = ds.iter().map(|&d| ClassExpression::named(class(d))).collect();
                Some(match form {
                    0 => AxiomKind::DisjointUnion { class: class(c), disjuncts: named },
                    1 => AxiomKind::SubClassOf {
                        sub: ClassExpression::named(class(c)),
                        sup: ClassExpression::UnionOf(named),
                    },
                    _ => AxiomKind::EquivalentClasses(vec![
                        ClassExpression::named(class(c)),
                        ClassExpression::UnionOf(named),
                    ]),
                })
            },
        );
        let axiom = prop_oneof![4 => edge, 2 => disjoint, 1 => covering];
        (Just(n), prop::collection::vec(axiom, 1..3 * n))
    })
}

pub mod gen {
    //! Random models over the whole supported grammar, with every
    //! non-builtin entity declared.

    use super::*;
    use ontobias::owl::{ns, AnnotationValue, Entity, EntityKind, Literal};

    const EX: &str = "http://example.org/r#";
    const OTHER: &str = "http://other.example/vocab/";

    fn iri(base: &str, local: String) -> Iri {
        Iri::new(format!("{base}{local}")).unwrap()
    }

    fn named_class() -> impl Strategy<Value = Iri> {
        prop_oneof![
            4 => (0..8usize).prop_map(|i| iri(EX, format!("C{i}"))),
            1 => (0..3usize).prop_map(|i| iri(OTHER, format!("Thing_{i}"))),
            1 => Just(iri(EX, "with-dash.and.dot".into())),
        ]
    }

    fn object_property() -> impl Strategy<Value = Iri> {
        (0..3usize).prop_map(|i| iri(EX, format!("p{i}")))
    }

    fn data_property() -> impl Strategy<Value = Iri> {
        (0..2usize).prop_map(|i| iri(EX, format!("d{i}")))
    }

    fn individual() -> impl Strategy<Value = Iri> {
        (0..3usize).prop_map(|i| iri(EX, format!("i{i}")))
    }

    fn datatype() -> impl Strategy<Value = Iri> {
        prop::sample::select(vec!["string", "integer", "boolean", "decimal"]).prop_map(|d| iri(ns::XSD, d.into()))
    }

    fn annotation_property() -> impl Strategy<Value = Iri> {
        prop_oneof![
            Just(iri(ns::RDFS, "label".into())),
            Just(iri(ns::RDFS, "comment".into())),
            Just(iri(ns::SKOS, "prefLabel".into())),
            Just(iri(EX, "note".into())),
        ]
    }

    fn literal() -> impl Strategy<Value = Literal> {
        let lexical = "[a-zA-Z0-9 \"\\\\()é:#-]{0,12}";
        prop_oneof![
            lexical.prop_map(Literal::plain),
            (lexical, prop::sample::select(vec!["en", "en-us", "fr", "zh-Hant"]))
                .prop_map(|(l, t)| Literal::tagged(l, t)),
            (lexical, datatype()).prop_map(|(l, d)| Literal { lexical: l, datatype: Some(d), language: None }),
        ]
    }

    pub fn expression() -> impl Strategy<Value = ClassExpression> {
        let leaf = prop_oneof![
            4 => named_class().prop_map(ClassExpression::Named),
            1 => prop::collection::vec(individual(), 1..3).prop_map(ClassExpression::OneOf),
            1 => (data_property(), datatype()).prop_map(|(p, d)| ClassExpression::DataSomeValuesFrom(p, d)),
            1 => (data_property(), datatype()).prop_map(|(p, d)| ClassExpression::DataAllValuesFrom(p, d)),
        ];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(ClassExpression::IntersectionOf),
                prop::collection::vec(inner.clone(), 2..4).prop_map(ClassExpression::UnionOf),
                inner.clone().prop_map(|e| ClassExpression::ComplementOf(Box::new(e))),
                (object_property(), inner.clone()).prop_map(|(p, e)| ClassExpression::some(p, e)),
                (object_property(), inner.clone()).prop_map(|(p, e)| ClassExpression::all(p, e)),
                (0..4u32, object_property(), prop::option::of(inner))
                    .prop_map(|(n, p, e)| ClassExpression::MaxCardinality(n, p, e.map(Box::new))),
            ]
        })
    }

    pub fn axiom() -> impl Strategy<Value = AxiomKind> {
        prop_oneof![
            4 => (expression(), expression()).prop_map(|(sub, sup)| AxiomKind::SubClassOf { sub, sup }),
            1 => prop::collection::vec(expression(), 2..4).prop_map(AxiomKind::EquivalentClasses),
            1 => prop::collection::vec(expression(), 2..4).prop_map(AxiomKind::DisjointClasses),
            1 => (named_class(), prop::collection::vec(expression(), 2..4))
                .prop_map(|(class, disjuncts)| AxiomKind::DisjointUnion { class, disjuncts }),
            1 => (object_property(), object_property()).prop_map(|(sub, sup)| AxiomKind::SubObjectPropertyOf { sub, sup }),
            1 => (object_property(), object_property()).prop_map(|(p, q)| AxiomKind::InverseObjectProperties(p, q)),
            1 => (expression(), individual()).prop_map(|(class, individual)| AxiomKind::ClassAssertion { class, individual }),
            2 => (named_class(), annotation_property(), literal()).prop_map(|(subject, property, lit)| {
                AxiomKind::AnnotationAssertion { subject, property, value: AnnotationValue::Literal(lit) }
            }),
            1 => (named_class(), annotation_property(), named_class()).prop_map(|(subject, property, target)| {
                AxiomKind::AnnotationAssertion { subject, property, value: AnnotationValue::Iri(target) }
            }),
            1 => prop::sample::select(vec!["obo/bfo.owl", "obo/ro.owl"])
                .prop_map(|p| AxiomKind::Import(iri("http://purl.obolibrary.org/", p.into()))),
        ]
    }

    fn kind_of(iri: &Iri) -> Option<EntityKind> {
        let s = iri.as_str();
        let local = iri.local_name();
        if s.starts_with(ns::RDFS) || s.starts_with(ns::XSD) {
            return None;
        }
        if s.starts_with(ns::SKOS) || local == "note" {
            return Some(EntityKind::AnnotationProperty);
        }
        if !s.starts_with(EX) {
            return Some(EntityKind::Class);
        }
        Some(match local.as_bytes()[0] {
            b'p' => EntityKind::ObjectProperty,
            b'd' => EntityKind::DataProperty,
            b'i' => EntityKind::NamedIndividual,
            _ => EntityKind::Class,
        })
    }

    /// Declarations for everything referenced, then the axioms.
    pub fn model() -> impl Strategy<Value = OntologyModel> {
        (prop::collection::vec(axiom(), 0..12), any::<bool>(), any::<bool>()).prop_map(|(axioms, named, prefixed)| {
            let mut b = ModelBuilder::default();
            if named {
                b.set_ontology_iri(Iri::new("http://example.org/r"));
            }
            if prefixed {
                b.prefix("", EX);
                b.prefix("skos", ns::SKOS);
            }
            b.prefix("rdfs", ns::RDFS);
            b.prefix("xsd", ns::XSD);
            let mut entities = BTreeSet::new();
            for ax in &axioms {
                if matches!(ax, AxiomKind::Import(_)) {
                    continue;
                }
                for iri in ax.signature() {
                    if let Some(kind) = kind_of(iri) {
                        entities.insert(Entity::new(kind, iri.clone()));
                    }
                }
            }
            for entity in entities {
                b.add_axiom(AxiomKind::Declaration(entity)).unwrap();
            }
            for ax in axioms {
                b.add_axiom(ax).unwrap();
            }
            b.build()
        })
    }
}
