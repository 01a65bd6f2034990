use super::context::Context;
use super::sociocultural::lexicon;
use super::{BiasType, ConsequenceClass, Finding, LexiconBias, Pattern, RuleConfig};
use crate::owl::{AxiomKind, ClassExpression, EntityKind, Iri, OntologyModel};
use crate::reasoner::{Fact, TaxonomyIndex};

/// Politically loaded terms, disputed entities and misclassified regions
/// placed under a container class.
pub fn detect_political(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = lexicon(&cx, LexiconBias::PoliticalReligious);
    for entry in &config.disputed_entities {
        for (member, container, axioms) in placements(&cx, &entry.name, &entry.container) {
            out.push(cx.finding(
                BiasType::PoliticalReligious,
                format!("disputed.{}", entry.id),
                ConsequenceClass::IncorrectAttribution,
                vec![member.clone(), container.clone()],
                axioms,
                format!("{} is placed under {}. {}", cx.display(member), cx.display(container), entry.note),
            ));
        }
    }
    for entry in &config.misclassifications {
        for (member, container, axioms) in placements(&cx, &entry.member, &entry.container) {
            out.push(cx.finding(
                BiasType::PoliticalReligious,
                format!("misclassified.{}", entry.id),
                ConsequenceClass::IncorrectAttribution,
                vec![member.clone(), container.clone()],
                axioms,
                format!("{} is classified as {}. {}", cx.display(member), cx.display(container), entry.note),
            ));
        }
    }
    out
}

/// Entities named like `member` that are subclasses (strictly) or asserted
/// instances of a class named like `container`, with supporting axioms.
fn placements<'c>(cx: &'c Context, member: &str, container: &str) -> Vec<(&'c Iri, &'c Iri, Vec<usize>)> {
    let containers = cx.classes_matching(container);
    let container_pattern = Pattern::new(container);
    let mut out = Vec::new();
    for (m, _) in cx.matching(member, &[EntityKind::Class, EntityKind::NamedIndividual]) {
        if cx.is_named(m, &container_pattern) {
            continue;
        }
        for (c, _) in &containers {
            if cx.index.contains(m) && cx.index.is_subclass_of(m, c).unwrap_or(false) {
                if let Ok(e) = cx.index.explain(&Fact::Subsumption(m.clone(), (*c).clone())) {
                    out.push((m, *c, e.axioms));
                }
                continue;
            }
            // instance of the container or of one of its subclasses
            let typed: Vec<usize> = cx
                .model
                .axioms_about(m)
                .iter()
                .copied()
                .filter(|&i| match &cx.model.axioms()[i].kind {
                    AxiomKind::ClassAssertion { class: ClassExpression::Named(k), .. } => {
                        cx.index.is_subclass_of(k, c).unwrap_or(false)
                    }
                    _ => false,
                })
                .collect();
            if !typed.is_empty() {
                out.push((m, *c, typed));
            }
        }
    }
    out
}
