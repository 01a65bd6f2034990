use super::context::{join, Context};
use super::matching::contains_phrase;
use super::{BiasType, ConsequenceClass, Finding, LexiconBias, RuleConfig};
use crate::owl::{AxiomKind, ClassExpression, EntityKind, Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

/// Closed or single-member sets on sensitive dimensions, and loaded terms.
pub fn detect_sociocultural(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = Vec::new();
    for dim in &config.sensitive_dimensions {
        for (class, _) in cx.classes_matching(&dim.class) {
            if let Some(finding) = dimension(&cx, dim, class) {
                out.push(finding);
            }
        }
    }
    out.extend(lexicon(&cx, LexiconBias::SocioCultural));
    out
}

fn dimension(cx: &Context, dim: &super::SensitiveDimension, class: &Iri) -> Option<Finding> {
    let rule = format!("dimension.{}", dim.id);
    let missing = |members: &[&Iri]| -> Vec<String> {
        dim.known_members
            .iter()
            .filter(|k| !members.iter().any(|m| cx.names(m).iter().any(|n| contains_phrase(&n.text, k))))
            .cloned()
            .collect()
    };
    // closed: an equivalence to an enumeration or a union of named classes
    for &ax in cx.model.axioms_about(class) {
        let members: Vec<&Iri> = match &cx.model.axioms()[ax].kind {
            AxiomKind::EquivalentClasses(ops) => ops
                .iter()
                .find_map(|op| match op {
                    ClassExpression::OneOf(individuals) => Some(individuals.iter().collect()),
                    ClassExpression::UnionOf(parts) => parts.iter().map(ClassExpression::as_named).collect(),
                    _ => None,
                })
                .unwrap_or_default(),
            AxiomKind::DisjointUnion { class: c, disjuncts } if c == class => {
                disjuncts.iter().filter_map(ClassExpression::as_named).collect()
            }
            _ => continue,
        };
        if members.is_empty() {
            continue;
        }
        let absent = missing(&members);
        let names: Vec<String> = members.iter().map(|m| cx.display(m)).collect();
        let mut finding = cx.finding(
            BiasType::SocioCultural,
            rule,
            ConsequenceClass::Omission,
            vec![class.clone()],
            [ax],
            format!(
                "{} is closed to {{{}}}{}. {}",
                cx.display(class),
                names.join(", "),
                if absent.is_empty() { String::new() } else { format!("; excluded: {}", join(&absent)) },
                dim.note
            ),
        );
        finding.suggestions = absent;
        return Some(finding);
    }
    // open: exactly one subclass or asserted instance
    let mut members: Vec<&Iri> = cx.index.direct_subclasses(class).unwrap_or_default();
    let mut evidence: Vec<usize> = members.iter().flat_map(|m| cx.asserted_edges(m, class)).collect();
    for (i, axiom) in cx.model.axioms().iter().enumerate() {
        if let AxiomKind::ClassAssertion { class: ClassExpression::Named(c), individual } = &axiom.kind {
            if c == class && cx.model.kind_of(individual) == Some(EntityKind::NamedIndividual) {
                members.push(individual);
                evidence.push(i);
            }
        }
    }
    if members.len() != 1 {
        return None;
    }
    let absent = missing(&members);
    let mut finding = cx.finding(
        BiasType::SocioCultural,
        rule,
        ConsequenceClass::Omission,
        vec![class.clone(), members[0].clone()],
        evidence,
        format!(
            "{} has a single member, {}; missing: {}. {}",
            cx.display(class),
            cx.display(members[0]),
            join(&absent),
            dim.note
        ),
    );
    finding.suggestions = absent;
    Some(finding)
}

/// Loaded-term hits of one lexicon bias type; shared with the political
/// detector.
pub(super) fn lexicon(cx: &Context, bias: LexiconBias) -> Vec<Finding> {
    let mut out = Vec::new();
    let kinds = [EntityKind::Class, EntityKind::NamedIndividual, EntityKind::ObjectProperty, EntityKind::DataProperty];
    for entry in cx.config.loaded_term_lexicon.iter().filter(|e| e.bias_type == bias) {
        for (iri, name) in cx.matching(&entry.term, &kinds) {
            let mut finding = cx.finding(
                bias.into(),
                format!("lexicon.{}", entry.id),
                ConsequenceClass::Terminology,
                vec![iri.clone()],
                cx.name_evidence(iri, name),
                {
                    let display = cx.display(iri);
                    if display == name.text {
                        format!("\"{}\" is a loaded term. {}", name.text, entry.note)
                    } else {
                        format!("\"{}\" names {} and is a loaded term. {}", name.text, display, entry.note)
                    }
                },
            );
            finding.suggestions = entry.suggestions.clone();
            out.push(finding);
        }
    }
    out
}
