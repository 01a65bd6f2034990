use std::collections::{BTreeMap, VecDeque};

use super::{Fact, ReasonerError, TaxonomyIndex};
use crate::owl::{AxiomKind, ClassExpression, Iri, OntologyModel};

/// An existential restriction that holds for `on_class` because it is
/// asserted on `asserted_on`, an ancestor (or the class itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedRestriction {
    pub on_class: Iri,
    pub property: Iri,
    pub filler: ClassExpression,
    pub asserted_on: Iri,
    /// Subsumption axioms from `on_class` up to `asserted_on`, then the axiom
    /// asserting the restriction.
    pub via: Vec<usize>,
}

/// Existential restrictions asserted on `class` or any of its ancestors, one
/// entry per (property, filler) with the shortest derivation.
pub fn inherited_restrictions(
    model: &OntologyModel,
    index: &TaxonomyIndex,
    class: &Iri,
) -> Result<Vec<DerivedRestriction>, ReasonerError> {
    let start = index.id(class)?;
    let paths = asserted_paths(index, start);
    let mut best: BTreeMap<(Iri, ClassExpression), DerivedRestriction> = BTreeMap::new();
    for (ax, axiom) in model.axioms().iter().enumerate() {
        for (owner, property, filler) in restrictions_of(&axiom.kind) {
            let Some(&owner_id) = index.premises.ids.get(owner) else { continue };
            if !index.closure.ancestors[start].contains(owner_id) {
                continue;
            }
            let mut via = match paths.get(&owner_id) {
                Some(path) => path.clone(),
                None => index.explain(&Fact::Subsumption(class.clone(), owner.clone()))?.axioms,
            };
            via.push(ax);
            let candidate = DerivedRestriction {
                on_class: class.clone(),
                property: property.clone(),
                filler: filler.clone(),
                asserted_on: owner.clone(),
                via,
            };
            let key = (property.clone(), filler.clone());
            match best.get(&key) {
                Some(kept) if rank(kept) <= rank(&candidate) => {}
                _ => {
                    best.insert(key, candidate);
                }
            }
        }
    }
    let mut out: Vec<_> = best.into_values().collect();
    out.sort_by_key(rank);
    Ok(out)
}

fn rank(r: &DerivedRestriction) -> (usize, Vec<usize>) {
    (r.via.len(), r.via.clone())
}

/// Shortest chains of asserted subsumption edges from `start`, breadth first
/// with edges taken in axiom order.
fn asserted_paths(index: &TaxonomyIndex, start: usize) -> BTreeMap<usize, Vec<usize>> {
    let mut paths = BTreeMap::from([(start, Vec::new())]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let mut edges: Vec<(usize, usize)> = index.asserted_supers(c).collect();
        edges.sort_by_key(|&(_, ax)| ax);
        for (sup, ax) in edges {
            if paths.contains_key(&sup) {
                continue;
            }
            let mut path = paths[&c].clone();
            path.push(ax);
            paths.insert(sup, path);
            queue.push_back(sup);
        }
    }
    paths
}

/// (class, property, filler) for each existential restriction an axiom puts
/// on a named class.
fn restrictions_of(kind: &AxiomKind) -> Vec<(&Iri, &Iri, &ClassExpression)> {
    fn existentials<'a>(
        owner: &'a Iri,
        expr: &'a ClassExpression,
        out: &mut Vec<(&'a Iri, &'a Iri, &'a ClassExpression)>,
    ) {
        match expr {
            ClassExpression::SomeValuesFrom(p, filler) => out.push((owner, p, filler)),
            ClassExpression::IntersectionOf(ops) => ops.iter().for_each(|op| existentials(owner, op, out)),
            _ => {}
        }
    }
    let mut out = Vec::new();
    match kind {
        AxiomKind::SubClassOf { sub: ClassExpression::Named(owner), sup } => existentials(owner, sup, &mut out),
        AxiomKind::EquivalentClasses(ops) => {
            for owner in ops.iter().filter_map(ClassExpression::as_named) {
                for op in ops.iter().filter(|op| op.as_named().is_none()) {
                    existentials(owner, op, &mut out);
                }
            }
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ofn::{parse, ParserOptions};
    use crate::reasoner::classify;

    fn c(name: &str) -> Iri {
        Iri::new(format!("http://ex.org/t#{name}")).unwrap()
    }

    fn run(body: &str, class: &str) -> Vec<DerivedRestriction> {
        let text = format!("Prefix(:=<http://ex.org/t#>)\nOntology(\n{body}\n)");
        let model = parse(&text, &ParserOptions::default()).unwrap().model;
        inherited_restrictions(&model, &classify(&model), &c(class)).unwrap()
    }

    #[test]
    fn lone_class_has_none() {
        assert!(run("Declaration(Class(:A))", "A").is_empty());
    }

    #[test]
    fn restriction_flows_down() {
        let found = run("SubClassOf(:Drug ObjectSomeValuesFrom(:treats :Disease))\nSubClassOf(:Trial :Drug)", "Trial");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].property, c("treats"));
        assert_eq!(found[0].asserted_on, c("Drug"));
        assert_eq!(found[0].via, [1, 0]);
    }

    #[test]
    fn own_restriction_has_single_step() {
        let found = run("SubClassOf(:A ObjectIntersectionOf(:B ObjectSomeValuesFrom(:p :C)))", "A");
        assert_eq!(found[0].via, [0]);
    }

    #[test]
    fn unknown_class_errors() {
        let text = "Prefix(:=<http://ex.org/t#>)\nOntology(\nSubClassOf(:A :B)\n)";
        let model = parse(text, &ParserOptions::default()).unwrap().model;
        assert!(inherited_restrictions(&model, &classify(&model), &c("Q")).is_err());
    }
}
