use std::collections::BTreeSet;

use super::context::{count, join, Context};
use super::matching::contains_phrase;
use super::{BiasType, ConsequenceClass, Finding, RuleConfig};
use crate::owl::{EntityKind, Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

const SAMPLE: usize = 10;

/// Regional spelling or wording variants without an alternative label, and
/// ontologies whose labels are all in one language.
pub fn detect_linguistic(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = Vec::new();
    for entry in &config.region_variant_lexicon {
        for entity in model.entities() {
            let names = cx.names(&entity.iri);
            let Some(hit) = names.iter().find(|n| contains_phrase(&n.text, &entry.variant)) else { continue };
            let covered =
                names.iter().any(|n| n.axiom.is_some() && entry.preferred.iter().any(|p| contains_phrase(&n.text, p)));
            if covered {
                continue;
            }
            let locales =
                if entry.locales.is_empty() { String::new() } else { format!(" ({})", entry.locales.join(", ")) };
            let mut finding = cx.finding(
                BiasType::Linguistic,
                format!("variant.{}", entry.id),
                ConsequenceClass::Terminology,
                vec![entity.iri.clone()],
                cx.name_evidence(&entity.iri, hit),
                format!(
                    "\"{}\" uses the regional form \"{}\"{} with no alternative label {}. {}",
                    hit.text,
                    entry.variant,
                    locales,
                    join(&entry.preferred.iter().map(|p| format!("\"{p}\"")).collect::<Vec<_>>()),
                    entry.note
                ),
            );
            finding.suggestions = entry.preferred.clone();
            out.push(finding);
        }
    }
    out.extend(monolingual(&cx));
    out
}

/// Primary language subtag census over label literals; untagged labels do
/// not count as a language.
fn monolingual(cx: &Context) -> Option<Finding> {
    let settings = &cx.config.settings;
    let classes = cx.model.entities_of_kind(EntityKind::Class).len();
    if classes < settings.monolingual_min_classes {
        return None;
    }
    let props: Vec<Iri> = settings.label_properties.iter().filter_map(|p| Iri::new(p.as_str())).collect();
    let labels: Vec<(usize, Option<String>)> = props
        .iter()
        .flat_map(|p| cx.model.axioms_with_annotation_property(p).iter().copied())
        .filter_map(|i| {
            let crate::owl::AxiomKind::AnnotationAssertion { value, .. } = &cx.model.axioms()[i].kind else {
                return None;
            };
            let literal = value.as_literal()?;
            let primary = literal.language.as_deref().map(|l| l.split('-').next().unwrap_or(l).to_lowercase());
            Some((i, primary))
        })
        .collect();
    let languages: BTreeSet<&str> = labels.iter().filter_map(|(_, l)| l.as_deref()).collect();
    if labels.is_empty() || languages.len() > 1 {
        return None;
    }
    let language = languages.iter().next().map_or("no language tag".to_owned(), |l| format!("@{l}"));
    let mut sample: Vec<usize> = labels.iter().map(|(i, _)| *i).collect();
    sample.sort_unstable();
    sample.truncate(SAMPLE);
    Some(cx.finding(
        BiasType::Linguistic,
        "linguistic.monolingual",
        ConsequenceClass::Terminology,
        cx.model.ontology_iri().cloned().into_iter().collect(),
        sample,
        format!(
            "{} across {} {} {}: terms and distinctions from other languages are absent.",
            count(labels.len(), "label", "labels"),
            count(classes, "class", "classes"),
            if labels.len() == 1 { "is" } else { "are all" },
            if languages.is_empty() { "untagged".to_owned() } else { format!("in {language}") }
        ),
    ))
}
