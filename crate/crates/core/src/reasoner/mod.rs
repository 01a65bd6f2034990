//! Structural classification over named classes.
//!
//! Four rules run to a fixpoint:
//!
//! 1. subsumption is transitive; equivalences count as mutual subsumption;
//! 2. covering elimination: if `C ⊑ D`, `D` is covered by `D1 ⊔ … ⊔ Dn` and
//!    `C` is disjoint with every disjunct but `Di`, then `C ⊑ Di` (and if it is
//!    disjoint with all of them, `C` is unsatisfiable);
//! 3. a class below two disjoint classes, or disjoint with one of its own
//!    ancestors, is unsatisfiable;
//! 4. disjointness is inherited: `Disjoint(A, B)` and `C ⊑ A` give
//!    `Disjoint(C, B)`.
//!
//! The calculus is polynomial and deliberately incomplete for OWL 2 DL:
//! superclass expressions other than existential restrictions and unions of
//! named classes are kept in the model but do not take part.

mod bitset;
mod explain;
mod premises;
mod restrictions;
mod saturation;

use std::collections::BTreeSet;

use crate::owl::{Iri, OntologyModel};

pub use explain::{Explanation, Fact};
pub use restrictions::{inherited_restrictions, DerivedRestriction};

use premises::Premises;
use saturation::{saturate, Closure};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReasonerError {
    #[error("unknown class {0}")]
    UnknownClass(Iri),
    #[error("not derivable: {0}")]
    NotDerivable(String),
}

/// Derived subsumption, disjointness and unsatisfiability for one model.
#[derive(Debug, Clone)]
pub struct TaxonomyIndex {
    premises: Premises,
    closure: Closure,
}

/// Classifies every named class of the model.
pub fn classify(model: &OntologyModel) -> TaxonomyIndex {
    let premises = Premises::extract(model);
    let closure = saturate(&premises, &|_| true);
    TaxonomyIndex { premises, closure }
}

impl TaxonomyIndex {
    /// Named classes, sorted by IRI.
    pub fn classes(&self) -> &[Iri] {
        &self.premises.classes
    }

    pub fn contains(&self, class: &Iri) -> bool {
        self.premises.ids.contains_key(class)
    }

    fn id(&self, class: &Iri) -> Result<usize, ReasonerError> {
        self.premises.ids.get(class).copied().ok_or_else(|| ReasonerError::UnknownClass(class.clone()))
    }

    pub fn is_subclass_of(&self, sub: &Iri, sup: &Iri) -> Result<bool, ReasonerError> {
        let (sub, sup) = (self.id(sub)?, self.id(sup)?);
        Ok(self.closure.ancestors[sub].contains(sup))
    }

    pub fn are_disjoint(&self, a: &Iri, b: &Iri) -> Result<bool, ReasonerError> {
        let (a, b) = (self.id(a)?, self.id(b)?);
        Ok(self.closure.disjoint[a].contains(b))
    }

    /// Ancestors of `class`, itself included, in IRI order.
    pub fn ancestors(&self, class: &Iri) -> Result<Vec<&Iri>, ReasonerError> {
        let id = self.id(class)?;
        Ok(self.closure.ancestors[id].iter().map(|a| &self.premises.classes[a]).collect())
    }

    /// Descendants of `class`, itself included, in IRI order.
    pub fn descendants(&self, class: &Iri) -> Result<Vec<&Iri>, ReasonerError> {
        let id = self.id(class)?;
        Ok((0..self.premises.classes.len())
            .filter(|&c| self.closure.ancestors[c].contains(id))
            .map(|c| &self.premises.classes[c])
            .collect())
    }

    /// Strict subclasses with no other strict subclass of `class` in between.
    /// Classes equivalent to `class` are excluded; equivalent children are
    /// each reported.
    pub fn direct_subclasses(&self, class: &Iri) -> Result<Vec<&Iri>, ReasonerError> {
        let id = self.id(class)?;
        let anc = &self.closure.ancestors;
        let strict: Vec<usize> =
            (0..self.premises.classes.len()).filter(|&c| anc[c].contains(id) && !anc[id].contains(c)).collect();
        Ok(strict
            .iter()
            .filter(|&&d| !strict.iter().any(|&e| e != d && anc[d].contains(e) && !anc[e].contains(d)))
            .map(|&d| &self.premises.classes[d])
            .collect())
    }

    /// Every (sub, sup) pair of the reflexive-transitive relation.
    pub fn subsumptions(&self) -> impl Iterator<Item = (&Iri, &Iri)> + '_ {
        self.closure
            .ancestors
            .iter()
            .enumerate()
            .flat_map(move |(c, anc)| anc.iter().map(move |a| (&self.premises.classes[c], &self.premises.classes[a])))
    }

    pub fn subsumption_count(&self) -> usize {
        self.closure.ancestors.iter().map(|a| a.len()).sum()
    }

    pub fn unsatisfiable_classes(&self) -> BTreeSet<Iri> {
        self.closure.unsat.iter().map(|c| self.premises.classes[c].clone()).collect()
    }

    pub fn is_unsatisfiable(&self, class: &Iri) -> Result<bool, ReasonerError> {
        Ok(self.closure.unsat.contains(self.id(class)?))
    }

    /// Disjunct sets covering `class`, each with the asserting axiom position.
    pub fn coverings(&self, class: &Iri) -> Result<Vec<(Vec<&Iri>, usize)>, ReasonerError> {
        let id = self.id(class)?;
        Ok(self
            .premises
            .coverings
            .iter()
            .filter(|c| c.covered == id)
            .map(|c| (c.disjuncts.iter().map(|d| &self.premises.classes[*d]).collect(), c.axiom))
            .collect())
    }

    /// Asserted named-class subsumption edges `(sub, sup, axiom)` out of `class`.
    pub(crate) fn asserted_supers(&self, class: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.premises.subclass.iter().filter(move |s| s.0 == class).map(|&(_, sup, ax)| (sup, ax))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ofn::{parse, ParserOptions};

    fn index(body: &str) -> (OntologyModel, TaxonomyIndex) {
        let text = format!("Prefix(:=<http://ex.org/t#>)\nOntology(\n{body}\n)");
        let model = parse(&text, &ParserOptions::default()).unwrap().model;
        let index = classify(&model);
        (model, index)
    }

    fn c(name: &str) -> Iri {
        Iri::new(format!("http://ex.org/t#{name}")).unwrap()
    }

    #[test]
    fn no_disjointness_means_no_unsat() {
        let (_, idx) = index("SubClassOf(:A :B)\nSubClassOf(:B :C)");
        assert!(idx.unsatisfiable_classes().is_empty());
        assert!(idx.is_subclass_of(&c("A"), &c("C")).unwrap());
        assert!(!idx.is_subclass_of(&c("C"), &c("A")).unwrap());
    }

    #[test]
    fn clash_between_two_disjoint_parents() {
        let (_, idx) = index("SubClassOf(:C :A)\nSubClassOf(:C :B)\nDisjointClasses(:A :B)");
        assert_eq!(idx.unsatisfiable_classes(), BTreeSet::from([c("C")]));
        assert!(idx.are_disjoint(&c("B"), &c("A")).unwrap());
        assert!(!idx.are_disjoint(&c("A"), &c("A")).unwrap());
    }

    #[test]
    fn unknown_class_is_an_error() {
        let (_, idx) = index("SubClassOf(:A :B)");
        assert_eq!(idx.is_subclass_of(&c("Z"), &c("A")), Err(ReasonerError::UnknownClass(c("Z"))));
    }

    #[test]
    fn direct_subclasses_skip_transitive_ones() {
        let (_, idx) = index("SubClassOf(:A :B)\nSubClassOf(:B :C)\nSubClassOf(:D :C)\nEquivalentClasses(:C :E)");
        let direct: Vec<_> = idx.direct_subclasses(&c("C")).unwrap().into_iter().map(Iri::local_name).collect();
        assert_eq!(direct, ["B", "D"]);
    }

    #[test]
    fn union_equivalence_covers() {
        let (_, idx) = index("EquivalentClasses(:P ObjectUnionOf(:X :Y))\nSubClassOf(:R :P)\nDisjointClasses(:R :X)");
        assert!(idx.is_subclass_of(&c("R"), &c("Y")).unwrap());
        assert!(idx.is_subclass_of(&c("X"), &c("P")).unwrap());
    }
}
