mod common;

use common::*;
use ontobias::owl::{AxiomKind, Entity, EntityKind, Iri};
use ontobias::reasoner::{classify, inherited_restrictions, Fact};
use proptest::prelude::*;

fn genet(variant: &str) -> (ontobias::owl::OntologyModel, ontobias::reasoner::TaxonomyIndex) {
    let model = load(&format!("genet/{variant}"));
    let index = classify(&model);
    (model, index)
}

fn g(name: &str) -> Iri {
    Iri::new(format!("http://example.org/genet#{name}")).unwrap()
}

fn rendered(model: &ontobias::owl::OntologyModel, axioms: &[usize]) -> Vec<String> {
    axioms.iter().map(|&a| model.axiom(a).unwrap().kind.to_string()).collect()
}

#[test]
fn genet_base_has_no_robot_and_no_clash() {
    let (_, index) = genet("genet.ofn");
    assert!(!index.contains(&g("Robot")));
    assert!(index.unsatisfiable_classes().is_empty());
}

#[test]
fn genet_v1_forces_robot_into_other_sentient() {
    let (model, index) = genet("genet_v1.ofn");
    assert!(index.is_subclass_of(&g("Robot"), &g("OtherSentient")).unwrap());
    assert!(index.unsatisfiable_classes().is_empty());
    let e = index.explain(&Fact::Subsumption(g("Robot"), g("OtherSentient"))).unwrap();
    let text = rendered(&model, &e.axioms);
    assert_eq!(text.len(), 5, "{text:?}");
    assert!(text[0].starts_with("PatientKind ≡"), "{text:?}");
    assert_eq!(
        &text[1..],
        ["Robot ⊑ PatientKind", "Disjoint(Robot, Human)", "Disjoint(Robot, Nature)", "Disjoint(Robot, NonHumanAnimal)"]
    );
}

#[test]
fn genet_v2_makes_robot_unsatisfiable() {
    let (model, index) = genet("genet_v2.ofn");
    assert_eq!(index.unsatisfiable_classes().into_iter().collect::<Vec<_>>(), [g("Robot")]);
    let e = index.explain(&Fact::Unsatisfiable(g("Robot"))).unwrap();
    assert_eq!(e.axioms.len(), 6);
    assert_eq!(rendered(&model, &e.axioms).last().unwrap(), "Disjoint(Robot, OtherSentient)");
}

#[test]
fn explanations_rederive_on_their_own() {
    for (variant, fact) in [
        ("genet_v1.ofn", Fact::Subsumption(g("Robot"), g("OtherSentient"))),
        ("genet_v2.ofn", Fact::Unsatisfiable(g("Robot"))),
    ] {
        let (model, index) = genet(variant);
        let e = index.explain(&fact).unwrap();
        let kinds: Vec<AxiomKind> = e.axioms.iter().map(|&a| model.axiom(a).unwrap().kind.clone()).collect();
        let alone = classify(&model_of(&kinds));
        match fact {
            Fact::Subsumption(a, b) => assert!(alone.is_subclass_of(&a, &b).unwrap()),
            Fact::Unsatisfiable(c) => assert!(alone.is_unsatisfiable(&c).unwrap()),
        }
    }
}

#[test]
fn experimental_drug_inherits_treatment_restriction() {
    let model = load("covid/mini_cido.ofn");
    let index = classify(&model);
    let obo = |id: &str| Iri::new(format!("http://purl.obolibrary.org/obo/{id}")).unwrap();
    let found = inherited_restrictions(&model, &index, &obo("CIDO_0000007")).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].property, obo("CIDO_0000200"));
    assert_eq!(found[0].filler.as_named(), Some(&obo("CIDO_0000004")));
    assert_eq!(found[0].asserted_on, obo("CIDO_0000006"));
    assert_eq!(found[0].via.len(), 2);
}

#[test]
fn diamond_keeps_one_entry_with_shortest_chain() {
    use ontobias::owl::ClassExpression as E;
    let p = Iri::new("http://example.org/r#p").unwrap();
    let restriction = AxiomKind::SubClassOf { sub: E::named(class(0)), sup: E::some(p.clone(), E::named(class(9))) };
    // two routes from C4 up to C0: 4-1-0 and 4-2-3-0
    let axioms = vec![restriction, sub(1, 0), sub(2, 3), sub(3, 0), sub(4, 2), sub(4, 1)];
    let model = model_of(&axioms);
    let index = classify(&model);
    let found = inherited_restrictions(&model, &index, &class(4)).unwrap();
    // brute force: every simple path from C4 to C0
    let edges = [(1, 0, 1), (2, 3, 2), (3, 0, 3), (4, 2, 4), (4, 1, 5)];
    fn paths(at: usize, edges: &[(usize, usize, usize)], acc: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == 0 {
            out.push(acc);
            return;
        }
        for &(a, b, ax) in edges {
            if a == at {
                let mut next = acc.clone();
                next.push(ax);
                paths(b, edges, next, out);
            }
        }
    }
    let mut all = Vec::new();
    paths(4, &edges, Vec::new(), &mut all);
    assert_eq!(all.len(), 2);
    let shortest = all.iter().min_by_key(|p| p.len()).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(&found[0].via[..found[0].via.len() - 1], &shortest[..]);
}

fn declared(n: usize, edges: &[(usize, usize)]) -> Vec<AxiomKind> {
    let mut axioms: Vec<AxiomKind> =
        (0..n).map(|i| AxiomKind::Declaration(Entity { kind: EntityKind::Class, iri: class(i) })).collect();
    axioms.extend(edges.iter().map(|&(a, b)| sub(a, b)));
    axioms
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn subclass_only_matches_reachability((n, edges) in hierarchy()) {
        let index = classify(&model_of(&declared(n, &edges)));
        let oracle = reachability(n, &edges);
        for (a, reachable) in oracle.iter().enumerate() {
            for b in 0..n {
                prop_assert_eq!(index.is_subclass_of(&class(a), &class(b)).unwrap(), reachable.contains(&b));
            }
        }
        prop_assert!(index.unsatisfiable_classes().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_an_axiom_never_retracts((_, axioms) in mixed_axioms()) {
        let before = classify(&model_of(&axioms[..axioms.len() - 1]));
        let after = classify(&model_of(&axioms));
        for (a, b) in before.subsumptions() {
            prop_assert!(after.is_subclass_of(a, b).unwrap());
        }
        prop_assert!(before.unsatisfiable_classes().is_subset(&after.unsatisfiable_classes()));
    }

    #[test]
    fn covering_elimination_is_closed((_, axioms) in mixed_axioms()) {
        let index = classify(&model_of(&axioms));
        for covered in index.classes() {
            for (disjuncts, _) in index.coverings(covered).unwrap() {
                for c in index.descendants(covered).unwrap() {
                    if index.is_unsatisfiable(c).unwrap() {
                        continue;
                    }
                    let open: Vec<_> =
                        disjuncts.iter().filter(|d| !index.are_disjoint(c, d).unwrap()).collect();
                    prop_assert!(!open.is_empty(), "{} disjoint with every disjunct but satisfiable", c);
                    if open.len() == 1 {
                        prop_assert!(index.is_subclass_of(c, open[0]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn subsumption_is_reflexive_and_transitive((_, axioms) in mixed_axioms()) {
        let index = classify(&model_of(&axioms));
        for c in index.classes() {
            prop_assert!(index.is_subclass_of(c, c).unwrap());
            for b in index.ancestors(c).unwrap() {
                for a in index.ancestors(b).unwrap() {
                    prop_assert!(index.is_subclass_of(c, a).unwrap());
                }
            }
        }
    }

    #[test]
    fn disjointness_is_symmetric_and_irreflexive_for_satisfiable((_, axioms) in mixed_axioms()) {
        let index = classify(&model_of(&axioms));
        for a in index.classes() {
            if !index.is_unsatisfiable(a).unwrap() {
                prop_assert!(!index.are_disjoint(a, a).unwrap());
            }
            for b in index.classes() {
                prop_assert_eq!(index.are_disjoint(a, b).unwrap(), index.are_disjoint(b, a).unwrap());
            }
        }
    }

    #[test]
    fn explanations_suffice((_, axioms) in mixed_axioms()) {
        let model = model_of(&axioms);
        let index = classify(&model);
        let mut facts: Vec<Fact> = index.unsatisfiable_classes().into_iter().map(Fact::Unsatisfiable).collect();
        facts.extend(
            index.subsumptions().filter(|(a, b)| a != b).take(6).map(|(a, b)| Fact::Subsumption(a.clone(), b.clone())),
        );
        for fact in facts {
            let e = index.explain(&fact).unwrap();
            let kinds: Vec<AxiomKind> = e.axioms.iter().map(|&a| model.axiom(a).unwrap().kind.clone()).collect();
            let alone = classify(&model_of(&kinds));
            match &fact {
                Fact::Subsumption(a, b) => prop_assert!(alone.is_subclass_of(a, b).unwrap()),
                Fact::Unsatisfiable(c) => prop_assert!(alone.is_unsatisfiable(c).unwrap()),
            }
        }
    }
}
