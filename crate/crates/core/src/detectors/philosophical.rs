use super::context::{join, Context};
use super::{BiasType, ConsequenceClass, Finding, RuleConfig};
use crate::owl::{AxiomKind, EntityKind, Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

const CAP: usize = 5;

/// Foundational-ontology commitments: imports of, or entities inside, a
/// registered namespace, and top-level marker categories.
pub fn detect_philosophical(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = Vec::new();
    for ns in &config.foundational_namespaces {
        let inside = |iri: &Iri| ns.prefixes.iter().any(|p| iri.starts_with(p));
        let imports: Vec<(usize, &Iri)> = model
            .axioms()
            .iter()
            .enumerate()
            .filter_map(|(i, a)| match &a.kind {
                AxiomKind::Import(iri) if inside(iri) => Some((i, iri)),
                _ => None,
            })
            .collect();
        let entities: Vec<Iri> = model.entities().map(|e| e.iri).filter(|iri| inside(iri)).collect();
        if imports.is_empty() && entities.is_empty() {
            continue;
        }
        let mut evidence: Vec<usize> = imports.iter().map(|(i, _)| *i).collect();
        evidence.extend(entities.iter().take(CAP).flat_map(|e| cx.anchor(e)));
        let mut subjects: Vec<Iri> = imports.iter().map(|(_, iri)| (*iri).clone()).collect();
        subjects.extend(entities.iter().cloned());
        let mut parts = Vec::new();
        if !imports.is_empty() {
            parts.push(format!("imports {}", join(&imports.iter().map(|(_, i)| i.to_string()).collect::<Vec<_>>())));
        }
        if !entities.is_empty() {
            parts.push(format!(
                "uses {} {} entit{}",
                entities.len(),
                ns.name,
                if entities.len() == 1 { "y" } else { "ies" }
            ));
        }
        out.push(cx.finding(
            BiasType::Philosophical,
            format!("namespace.{}", ns.id),
            ConsequenceClass::IncorrectAttribution,
            subjects,
            evidence,
            format!("Commits to {}: {}. {}", ns.name, parts.join("; "), ns.note),
        ));
    }
    for marker in &config.top_level_markers {
        let uses = |prefixes: &[String]| model.entities().any(|e| prefixes.iter().any(|p| e.iri.starts_with(p)));
        let found = cx.classes_matching(&marker.term);
        let rule = format!("marker.{}", marker.id);
        if !found.is_empty() {
            let conflict = if uses(&marker.conflicts_with) {
                " The ontology also aligns with a foundational ontology that has no such category."
            } else {
                ""
            };
            let names: Vec<String> = found.iter().map(|(iri, _)| cx.display(iri)).collect();
            let evidence: Vec<usize> = found.iter().flat_map(|(iri, n)| cx.name_evidence(iri, n)).collect();
            out.push(cx.finding(
                BiasType::Philosophical,
                rule,
                ConsequenceClass::IncorrectAttribution,
                found.iter().map(|(iri, _)| (*iri).clone()).collect(),
                evidence,
                format!(
                    "{} is a {}-style top-level category.{} {}",
                    join(&names),
                    marker.commitment,
                    conflict,
                    marker.note
                ),
            ));
        } else if uses(&marker.expected_with) {
            let aligned: Vec<Iri> = model
                .entities()
                .filter(|e| e.kind == EntityKind::Class && marker.expected_with.iter().any(|p| e.iri.starts_with(p)))
                .map(|e| e.iri)
                .collect();
            let evidence: Vec<usize> = aligned.iter().take(CAP).flat_map(|e| cx.anchor(e)).collect();
            out.push(cx.finding(
                BiasType::Philosophical,
                rule,
                ConsequenceClass::Omission,
                model.ontology_iri().cloned().into_iter().collect(),
                evidence,
                format!("Aligned with {} but has no `{}` category. {}", marker.commitment, marker.term, marker.note),
            ));
        }
    }
    out
}
