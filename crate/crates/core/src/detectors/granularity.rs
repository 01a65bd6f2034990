use super::context::{join, Context};
use super::matching::contains_phrase;
use super::{BiasType, ConsequenceClass, Finding, RuleConfig};
use crate::owl::OntologyModel;
use crate::reasoner::TaxonomyIndex;

/// Classes with fewer direct subclasses than registered, and classes whose
/// only subclass stands in for a wider set of known members.
pub fn detect_granularity(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = Vec::new();
    for entry in &config.expected_minimums {
        for (class, _) in cx.classes_matching(&entry.class) {
            let Ok(direct) = index.direct_subclasses(class) else { continue };
            let present: Vec<String> = direct.iter().map(|d| cx.display(d)).collect();
            let missing: Vec<String> = entry
                .known_members
                .iter()
                .filter(|m| !direct.iter().any(|d| cx.names(d).iter().any(|n| contains_phrase(&n.text, m))))
                .cloned()
                .collect();
            let message = if direct.len() == 1 && !entry.known_members.is_empty() {
                format!(
                    "{} has a single subclass, {}; not represented: {}. {}",
                    cx.display(class),
                    present[0],
                    join(&missing),
                    entry.note
                )
            } else if direct.len() < entry.minimum {
                let listing = if present.is_empty() { "none".to_owned() } else { join(&present) };
                format!(
                    "{} has {} direct subclass{} ({}), fewer than the expected {}. {}",
                    cx.display(class),
                    direct.len(),
                    if direct.len() == 1 { "" } else { "es" },
                    listing,
                    entry.minimum,
                    entry.note
                )
            } else {
                continue;
            };
            let mut evidence = cx.anchor(class);
            evidence.extend(direct.iter().flat_map(|d| cx.asserted_edges(d, class)));
            let mut finding = cx.finding(
                BiasType::Granularity,
                format!("minimum.{}", entry.id),
                ConsequenceClass::Omission,
                vec![class.clone()],
                evidence,
                message,
            );
            finding.severity = Some(entry.severity);
            finding.suggestions = missing;
            out.push(finding);
        }
    }
    out
}
