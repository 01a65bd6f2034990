use std::fmt;

use serde::Serialize;

use super::expr::ClassExpression;
use super::iri::Iri;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
    NamedIndividual,
    AnnotationProperty,
}

impl EntityKind {
    pub const ALL: [EntityKind; 5] = [
        EntityKind::Class,
        EntityKind::ObjectProperty,
        EntityKind::DataProperty,
        EntityKind::NamedIndividual,
        EntityKind::AnnotationProperty,
    ];

    /// Keyword used inside `Declaration(...)`.
    pub fn keyword(self) -> &'static str {
        match self {
            EntityKind::Class => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
            EntityKind::AnnotationProperty => "AnnotationProperty",
        }
    }

    pub fn from_keyword(keyword: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == keyword)
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entity {
    pub kind: EntityKind,
    pub iri: Iri,
}

impl Entity {
    pub fn new(kind: EntityKind, iri: Iri) -> Self {
        Entity { kind, iri }
    }
}

/// A literal kept in lexical form; no value-space interpretation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub lexical: String,
    pub datatype: Option<Iri>,
    pub language: Option<String>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), datatype: None, language: None }
    }

    pub fn tagged(lexical: impl Into<String>, language: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), datatype: None, language: Some(language.into()) }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.lexical)?;
        if let Some(lang) = &self.language {
            write!(f, "@{lang}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnotationValue {
    Literal(Literal),
    Iri(Iri),
}

impl AnnotationValue {
    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            AnnotationValue::Literal(lit) => Some(lit),
            AnnotationValue::Iri(_) => None,
        }
    }
}

/// Axiom shapes of the supported grammar.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomKind {
    SubClassOf { sub: ClassExpression, sup: ClassExpression },
    EquivalentClasses(Vec<ClassExpression>),
    DisjointClasses(Vec<ClassExpression>),
    DisjointUnion { class: Iri, disjuncts: Vec<ClassExpression> },
    SubObjectPropertyOf { sub: Iri, sup: Iri },
    InverseObjectProperties(Iri, Iri),
    ClassAssertion { class: ClassExpression, individual: Iri },
    AnnotationAssertion { subject: Iri, property: Iri, value: AnnotationValue },
    Declaration(Entity),
    Import(Iri),
}

/// Field-less discriminant of [`AxiomKind`], used as an index key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomVariant {
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    DisjointUnion,
    SubObjectPropertyOf,
    InverseObjectProperties,
    ClassAssertion,
    AnnotationAssertion,
    Declaration,
    Import,
}

impl AxiomVariant {
    pub fn keyword(self) -> &'static str {
        match self {
            AxiomVariant::SubClassOf => "SubClassOf",
            AxiomVariant::EquivalentClasses => "EquivalentClasses",
            AxiomVariant::DisjointClasses => "DisjointClasses",
            AxiomVariant::DisjointUnion => "DisjointUnion",
            AxiomVariant::SubObjectPropertyOf => "SubObjectPropertyOf",
            AxiomVariant::InverseObjectProperties => "InverseObjectProperties",
            AxiomVariant::ClassAssertion => "ClassAssertion",
            AxiomVariant::AnnotationAssertion => "AnnotationAssertion",
            AxiomVariant::Declaration => "Declaration",
            AxiomVariant::Import => "Import",
        }
    }
}

impl AxiomKind {
    pub fn variant(&self) -> AxiomVariant {
        match self {
            AxiomKind::SubClassOf { .. } => AxiomVariant::SubClassOf,
            AxiomKind::EquivalentClasses(_) => AxiomVariant::EquivalentClasses,
            AxiomKind::DisjointClasses(_) => AxiomVariant::DisjointClasses,
            AxiomKind::DisjointUnion { .. } => AxiomVariant::DisjointUnion,
            AxiomKind::SubObjectPropertyOf { .. } => AxiomVariant::SubObjectPropertyOf,
            AxiomKind::InverseObjectProperties(..) => AxiomVariant::InverseObjectProperties,
            AxiomKind::ClassAssertion { .. } => AxiomVariant::ClassAssertion,
            AxiomKind::AnnotationAssertion { .. } => AxiomVariant::AnnotationAssertion,
            AxiomKind::Declaration(_) => AxiomVariant::Declaration,
            AxiomKind::Import(_) => AxiomVariant::Import,
        }
    }

    /// Logical axioms exclude declarations, imports and annotation assertions.
    pub fn is_logical(&self) -> bool {
        !matches!(self, AxiomKind::Declaration(_) | AxiomKind::Import(_) | AxiomKind::AnnotationAssertion { .. })
    }

    /// IRIs the axiom is "about": named top-level operands, asserted
    /// individuals, annotated subjects, declared entities.
    pub fn subjects(&self) -> Vec<&Iri> {
        fn named(exprs: &[ClassExpression]) -> Vec<&Iri> {
            exprs.iter().filter_map(ClassExpression::as_named).collect()
        }
        match self {
            AxiomKind::SubClassOf { sub, .. } => sub.as_named().into_iter().collect(),
            AxiomKind::EquivalentClasses(ops) | AxiomKind::DisjointClasses(ops) => named(ops),
            AxiomKind::DisjointUnion { class, .. } => vec![class],
            AxiomKind::SubObjectPropertyOf { sub, .. } => vec![sub],
            AxiomKind::InverseObjectProperties(p, q) => vec![p, q],
            AxiomKind::ClassAssertion { individual, .. } => vec![individual],
            AxiomKind::AnnotationAssertion { subject, .. } => vec![subject],
            AxiomKind::Declaration(entity) => vec![&entity.iri],
            AxiomKind::Import(_) => vec![],
        }
    }

    /// Every IRI referenced by the axiom, in occurrence order.
    pub fn signature(&self) -> Vec<&Iri> {
        let mut out = Vec::new();
        fn exprs<'a>(out: &mut Vec<&'a Iri>, ops: &'a [ClassExpression]) {
            for op in ops {
                out.extend(op.signature());
            }
        }
        match self {
            AxiomKind::SubClassOf { sub, sup } => {
                out.extend(sub.signature());
                out.extend(sup.signature());
            }
            AxiomKind::EquivalentClasses(ops) | AxiomKind::DisjointClasses(ops) => exprs(&mut out, ops),
            AxiomKind::DisjointUnion { class, disjuncts } => {
                out.push(class);
                exprs(&mut out, disjuncts);
            }
            AxiomKind::SubObjectPropertyOf { sub, sup } => out.extend([sub, sup]),
            AxiomKind::InverseObjectProperties(p, q) => out.extend([p, q]),
            AxiomKind::ClassAssertion { class, individual } => {
                out.extend(class.signature());
                out.push(individual);
            }
            AxiomKind::AnnotationAssertion { subject, property, value } => {
                out.extend([subject, property]);
                match value {
                    AnnotationValue::Iri(iri) => out.push(iri),
                    AnnotationValue::Literal(lit) => out.extend(lit.datatype.iter()),
                }
            }
            AxiomKind::Declaration(entity) => out.push(&entity.iri),
            AxiomKind::Import(iri) => out.push(iri),
        }
        out
    }
}

impl fmt::Display for AxiomKind {
    /// Description-logic style rendering for human-readable output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list =
            |ops: &[ClassExpression], sep: &str| ops.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
        match self {
            AxiomKind::SubClassOf { sub, sup } => write!(f, "{sub} ⊑ {sup}"),
            AxiomKind::EquivalentClasses(ops) => f.write_str(&list(ops, " ≡ ")),
            AxiomKind::DisjointClasses(ops) => write!(f, "Disjoint({})", list(ops, ", ")),
            AxiomKind::DisjointUnion { class, disjuncts } => {
                write!(f, "{} ≡ {} (disjoint)", class.local_name(), list(disjuncts, " ⊔ "))
            }
            AxiomKind::SubObjectPropertyOf { sub, sup } => {
                write!(f, "{} ⊑ {}", sub.local_name(), sup.local_name())
            }
            AxiomKind::InverseObjectProperties(p, q) => {
                write!(f, "{} ≡ {}⁻", p.local_name(), q.local_name())
            }
            AxiomKind::ClassAssertion { class, individual } => {
                write!(f, "{}({})", class, individual.local_name())
            }
            AxiomKind::AnnotationAssertion { subject, property, value } => {
                let value = match value {
                    AnnotationValue::Literal(lit) => lit.to_string(),
                    AnnotationValue::Iri(iri) => iri.local_name().to_owned(),
                };
                write!(f, "{} {} {}", subject.local_name(), property.local_name(), value)
            }
            AxiomKind::Declaration(entity) => {
                write!(f, "{}({})", entity.kind, entity.iri.local_name())
            }
            AxiomKind::Import(iri) => write!(f, "import {iri}"),
        }
    }
}

/// Position of an axiom in its source text (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SourceLocation {
    pub line: usize,
    pub column: usize,
}

/// An axiom plus where it came from. Structural comparisons use `kind` only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Axiom {
    pub kind: AxiomKind,
    pub location: Option<SourceLocation>,
}

impl Axiom {
    pub fn new(kind: AxiomKind) -> Self {
        Axiom { kind, location: None }
    }

    pub fn at(kind: AxiomKind, line: usize, column: usize) -> Self {
        Axiom { kind, location: Some(SourceLocation { line, column }) }
    }

    pub fn line(&self) -> Option<usize> {
        self.location.map(|l| l.line)
    }
}

impl From<AxiomKind> for Axiom {
    fn from(kind: AxiomKind) -> Self {
        Axiom::new(kind)
    }
}
