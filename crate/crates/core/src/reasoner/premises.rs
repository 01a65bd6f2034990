use std::collections::{BTreeSet, HashMap};

use crate::owl::{AxiomKind, ClassExpression, EntityKind, Iri, OntologyModel};

/// Named-class facts extracted from the model, each tagged with the
/// position of the axiom that contributes it.
#[derive(Debug, Clone, Default)]
pub(crate) struct Premises {
    pub classes: Vec<Iri>,
    pub ids: HashMap<Iri, usize>,
    /// (sub, sup, axiom)
    pub subclass: Vec<(usize, usize, usize)>,
    /// (a, b, axiom), a != b
    pub disjoint: Vec<(usize, usize, usize)>,
    pub coverings: Vec<Covering>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Covering {
    pub covered: usize,
    pub disjuncts: Vec<usize>,
    pub axiom: usize,
}

fn all_named(ops: &[ClassExpression]) -> Option<Vec<&Iri>> {
    ops.iter().map(ClassExpression::as_named).collect()
}

impl Premises {
    pub fn extract(model: &OntologyModel) -> Self {
        let mut names: BTreeSet<Iri> = model.entities_of_kind(EntityKind::Class);
        for axiom in model.axioms() {
            collect_class_names(&axiom.kind, &mut names);
        }
        let classes: Vec<Iri> = names.into_iter().collect();
        let ids = classes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut p = Premises { classes, ids, ..Default::default() };
        for (ax, axiom) in model.axioms().iter().enumerate() {
            p.add(&axiom.kind, ax);
        }
        p
    }

    fn id(&self, iri: &Iri) -> usize {
        self.ids[iri]
    }

    fn add(&mut self, kind: &AxiomKind, ax: usize) {
        match kind {
            AxiomKind::SubClassOf { sub: ClassExpression::Named(sub), sup } => {
                let sub = self.id(sub);
                match sup {
                    ClassExpression::Named(sup) => {
                        let sup = self.id(sup);
                        self.subclass.push((sub, sup, ax));
                    }
                    ClassExpression::UnionOf(ops) => {
                        if let Some(named) = all_named(ops) {
                            let disjuncts = named.iter().map(|d| self.id(d)).collect();
                            self.coverings.push(Covering { covered: sub, disjuncts, axiom: ax });
                        }
                    }
                    _ => {}
                }
            }
            AxiomKind::EquivalentClasses(ops) => {
                let named: Vec<usize> = ops.iter().filter_map(ClassExpression::as_named).map(|n| self.id(n)).collect();
                for &a in &named {
                    for &b in &named {
                        if a != b {
                            self.subclass.push((a, b, ax));
                        }
                    }
                }
                for op in ops {
                    let ClassExpression::UnionOf(members) = op else { continue };
                    let Some(members) = all_named(members) else { continue };
                    let disjuncts: Vec<usize> = members.iter().map(|m| self.id(m)).collect();
                    for &covered in &named {
                        for &d in &disjuncts {
                            self.subclass.push((d, covered, ax));
                        }
                        self.coverings.push(Covering { covered, disjuncts: disjuncts.clone(), axiom: ax });
                    }
                }
            }
            AxiomKind::DisjointClasses(ops) => {
                let named: Vec<usize> = ops.iter().filter_map(ClassExpression::as_named).map(|n| self.id(n)).collect();
                self.pairwise_disjoint(&named, ax);
            }
            AxiomKind::DisjointUnion { class, disjuncts } => {
                let covered = self.id(class);
                let named: Vec<usize> =
                    disjuncts.iter().filter_map(ClassExpression::as_named).map(|n| self.id(n)).collect();
                for &d in &named {
                    self.subclass.push((d, covered, ax));
                }
                self.pairwise_disjoint(&named, ax);
                if named.len() == disjuncts.len() {
                    self.coverings.push(Covering { covered, disjuncts: named, axiom: ax });
                }
            }
            _ => {}
        }
    }

    fn pairwise_disjoint(&mut self, named: &[usize], ax: usize) {
        for (i, &a) in named.iter().enumerate() {
            for &b in &named[i + 1..] {
                self.disjoint.push((a, b, ax));
            }
        }
    }

    /// Axiom positions contributing at least one premise, ascending.
    pub fn contributing_axioms(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .subclass
            .iter()
            .map(|s| s.2)
            .chain(self.disjoint.iter().map(|d| d.2))
            .chain(self.coverings.iter().map(|c| c.axiom))
            .collect();
        set.into_iter().collect()
    }
}

/// Named classes appearing in class positions of the axiom.
fn collect_class_names(kind: &AxiomKind, out: &mut BTreeSet<Iri>) {
    let mut visit = |e: &ClassExpression| {
        e.walk(&mut |sub| {
            if let ClassExpression::Named(iri) = sub {
                out.insert(iri.clone());
            }
        })
    };
    match kind {
        AxiomKind::SubClassOf { sub, sup } => {
            visit(sub);
            visit(sup);
        }
        AxiomKind::EquivalentClasses(ops) | AxiomKind::DisjointClasses(ops) => ops.iter().for_each(visit),
        AxiomKind::DisjointUnion { class, disjuncts } => {
            visit(&ClassExpression::Named(class.clone()));
            disjuncts.iter().for_each(visit);
        }
        AxiomKind::ClassAssertion { class, .. } => visit(class),
        _ => {}
    }
}
