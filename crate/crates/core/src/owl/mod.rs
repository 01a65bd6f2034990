//! In-memory ontology model: IRIs, class expressions, axioms and the indexed
//! [`OntologyModel`] every other module reads from.

mod axiom;
mod expr;
mod iri;
mod model;

pub use axiom::{AnnotationValue, Axiom, AxiomKind, AxiomVariant, Entity, EntityKind, Literal, SourceLocation};
pub use expr::{ClassExpression, ExpressionError};
pub use iri::{ns, Iri, PrefixTable};
pub use model::{Annotation, EntityCensus, LookupError, ModelBuilder, OntologyModel, PunningError};
