use std::fmt;

use super::iri::Iri;

/// Class constructors supported by the toolchain.
///
/// List variants hold at least two operands (`OneOf` at least one); the
/// parser and [`ClassExpression::validate`] enforce this.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassExpression {
    Named(Iri),
    IntersectionOf(Vec<ClassExpression>),
    UnionOf(Vec<ClassExpression>),
    ComplementOf(Box<ClassExpression>),
    OneOf(Vec<Iri>),
    SomeValuesFrom(Iri, Box<ClassExpression>),
    AllValuesFrom(Iri, Box<ClassExpression>),
    MaxCardinality(u32, Iri, Option<Box<ClassExpression>>),
    DataSomeValuesFrom(Iri, Iri),
    DataAllValuesFrom(Iri, Iri),
}

/// Why a constructed expression is malformed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpressionError {
    #[error("{constructor} needs at least {min} operand(s), found {found}")]
    TooFewOperands { constructor: &'static str, min: usize, found: usize },
}

impl ClassExpression {
    pub fn named(iri: Iri) -> Self {
        ClassExpression::Named(iri)
    }

    pub fn some(property: Iri, filler: ClassExpression) -> Self {
        ClassExpression::SomeValuesFrom(property, Box::new(filler))
    }

    pub fn all(property: Iri, filler: ClassExpression) -> Self {
        ClassExpression::AllValuesFrom(property, Box::new(filler))
    }

    pub fn as_named(&self) -> Option<&Iri> {
        match self {
            ClassExpression::Named(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn constructor_name(&self) -> &'static str {
        match self {
            ClassExpression::Named(_) => "Class",
            ClassExpression::IntersectionOf(_) => "ObjectIntersectionOf",
            ClassExpression::UnionOf(_) => "ObjectUnionOf",
            ClassExpression::ComplementOf(_) => "ObjectComplementOf",
            ClassExpression::OneOf(_) => "ObjectOneOf",
            ClassExpression::SomeValuesFrom(..) => "ObjectSomeValuesFrom",
            ClassExpression::AllValuesFrom(..) => "ObjectAllValuesFrom",
            ClassExpression::MaxCardinality(..) => "ObjectMaxCardinality",
            ClassExpression::DataSomeValuesFrom(..) => "DataSomeValuesFrom",
            ClassExpression::DataAllValuesFrom(..) => "DataAllValuesFrom",
        }
    }

    /// Checks operand counts recursively.
    pub fn validate(&self) -> Result<(), ExpressionError> {
        let check = |name, min, found| {
            if found < min {
                Err(ExpressionError::TooFewOperands { constructor: name, min, found })
            } else {
                Ok(())
            }
        };
        match self {
            ClassExpression::IntersectionOf(ops) | ClassExpression::UnionOf(ops) => {
                check(self.constructor_name(), 2, ops.len())?;
                ops.iter().try_for_each(ClassExpression::validate)
            }
            ClassExpression::OneOf(members) => check("ObjectOneOf", 1, members.len()),
            ClassExpression::ComplementOf(inner)
            | ClassExpression::SomeValuesFrom(_, inner)
            | ClassExpression::AllValuesFrom(_, inner) => inner.validate(),
            ClassExpression::MaxCardinality(_, _, Some(inner)) => inner.validate(),
            _ => Ok(()),
        }
    }

    /// Visits this expression and every nested sub-expression, outermost first.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a ClassExpression)) {
        visit(self);
        match self {
            ClassExpression::IntersectionOf(ops) | ClassExpression::UnionOf(ops) => {
                ops.iter().for_each(|op| op.walk(visit))
            }
            ClassExpression::ComplementOf(inner)
            | ClassExpression::SomeValuesFrom(_, inner)
            | ClassExpression::AllValuesFrom(_, inner) => inner.walk(visit),
            ClassExpression::MaxCardinality(_, _, Some(inner)) => inner.walk(visit),
            _ => {}
        }
    }

    /// Every IRI mentioned anywhere in the expression, in occurrence order.
    pub fn signature(&self) -> Vec<&Iri> {
        let mut out = Vec::new();
        self.walk(&mut |e| match e {
            ClassExpression::Named(iri) => out.push(iri),
            ClassExpression::OneOf(members) => out.extend(members.iter()),
            ClassExpression::SomeValuesFrom(p, _) | ClassExpression::AllValuesFrom(p, _) => out.push(p),
            ClassExpression::MaxCardinality(_, p, _) => out.push(p),
            ClassExpression::DataSomeValuesFrom(p, dt) | ClassExpression::DataAllValuesFrom(p, dt) => {
                out.push(p);
                out.push(dt);
            }
            _ => {}
        });
        out
    }
}

impl fmt::Display for ClassExpression {
    /// Compact description-logic rendering used in messages.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, ops: &[ClassExpression], sep: &str) -> fmt::Result {
            f.write_str("(")?;
            for (i, op) in ops.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{op}")?;
            }
            f.write_str(")")
        }
        match self {
            ClassExpression::Named(iri) => f.write_str(iri.local_name()),
            ClassExpression::IntersectionOf(ops) => join(f, ops, " ⊓ "),
            ClassExpression::UnionOf(ops) => join(f, ops, " ⊔ "),
            ClassExpression::ComplementOf(inner) => write!(f, "¬{inner}"),
            ClassExpression::OneOf(members) => {
                let names: Vec<_> = members.iter().map(Iri::local_name).collect();
                write!(f, "{{{}}}", names.join(", "))
            }
            ClassExpression::SomeValuesFrom(p, filler) => write!(f, "∃{}.{filler}", p.local_name()),
            ClassExpression::AllValuesFrom(p, filler) => write!(f, "∀{}.{filler}", p.local_name()),
            ClassExpression::MaxCardinality(n, p, filler) => match filler {
                Some(filler) => write!(f, "≤{n} {}.{filler}", p.local_name()),
                None => write!(f, "≤{n} {}", p.local_name()),
            },
            ClassExpression::DataSomeValuesFrom(p, dt) => {
                write!(f, "∃{}.{}", p.local_name(), dt.local_name())
            }
            ClassExpression::DataAllValuesFrom(p, dt) => {
                write!(f, "∀{}.{}", p.local_name(), dt.local_name())
            }
        }
    }
}
