use super::context::Context;
use super::{BiasType, ConsequenceClass, Finding, RuleConfig, SubsumptionCategory};
use crate::owl::OntologyModel;
use crate::reasoner::{Fact, TaxonomyIndex};

/// Registered contested subsumptions of the science category that hold,
/// asserted or derived.
pub fn detect_science(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    contested(&Context::new(model, index, config), SubsumptionCategory::Science)
}

/// Registered contested subsumptions of the economic category. Most economic
/// bias cannot be read off the artefact; reports add a manual checklist.
pub fn detect_economic(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    contested(&Context::new(model, index, config), SubsumptionCategory::Economic)
}

fn contested(cx: &Context, category: SubsumptionCategory) -> Vec<Finding> {
    let bias = match category {
        SubsumptionCategory::Science => BiasType::Science,
        SubsumptionCategory::Economic => BiasType::Economic,
    };
    let mut out = Vec::new();
    for entry in cx.config.contested_subsumptions.iter().filter(|e| e.category == category) {
        let subs = cx.classes_matching(&entry.sub);
        let sups = cx.classes_matching(&entry.sup);
        for (sub, _) in &subs {
            for (sup, _) in &sups {
                if sub == sup || !cx.index.is_subclass_of(sub, sup).unwrap_or(false) {
                    continue;
                }
                let Ok(explanation) = cx.index.explain(&Fact::Subsumption((*sub).clone(), (*sup).clone())) else {
                    continue;
                };
                let asserted = explanation.axioms.len() == 1;
                out.push(cx.finding(
                    bias,
                    format!("contested.{}", entry.id),
                    ConsequenceClass::IncorrectAttribution,
                    vec![(*sub).clone(), (*sup).clone()],
                    explanation.axioms,
                    format!(
                        "{} ⊑ {} ({}). {}",
                        cx.display(sub),
                        cx.display(sup),
                        if asserted { "asserted" } else { "derived" },
                        entry.note
                    ),
                ));
            }
        }
    }
    out
}
