use super::context::{count, Context};
use super::{BiasType, ConsequenceClass, Finding, Pattern, RuleConfig};
use crate::owl::{AxiomKind, ClassExpression, EntityKind, Iri, OntologyModel};
use crate::reasoner::TaxonomyIndex;

/// Encoding patterns that reveal what the ontology is for: participation in
/// processes (A), data-recording constructs (B), thesaurus-style entries (C).
pub fn detect_purpose(model: &OntologyModel, index: &TaxonomyIndex, config: &RuleConfig) -> Vec<Finding> {
    let cx = Context::new(model, index, config);
    let mut out = pattern_a(&cx);
    out.extend(pattern_b(&cx));
    out.extend(pattern_c(&cx));
    out
}

fn existentials(expr: &ClassExpression) -> Vec<&ClassExpression> {
    match expr {
        ClassExpression::SomeValuesFrom(..)
        | ClassExpression::DataSomeValuesFrom(..)
        | ClassExpression::DataAllValuesFrom(..) => vec![expr],
        ClassExpression::IntersectionOf(ops) => ops.iter().flat_map(existentials).collect(),
        _ => Vec::new(),
    }
}

/// (axiom, subject, restriction) for restrictions on named classes.
fn restrictions(model: &OntologyModel) -> Vec<(usize, &Iri, &ClassExpression)> {
    let mut out = Vec::new();
    for (i, axiom) in model.axioms().iter().enumerate() {
        match &axiom.kind {
            AxiomKind::SubClassOf { sub: ClassExpression::Named(c), sup } => {
                out.extend(existentials(sup).into_iter().map(|r| (i, c, r)));
            }
            AxiomKind::EquivalentClasses(ops) => {
                for c in ops.iter().filter_map(ClassExpression::as_named) {
                    for op in ops.iter().filter(|o| o.as_named().is_none()) {
                        out.extend(existentials(op).into_iter().map(|r| (i, c, r)));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

fn pattern_a(cx: &Context) -> Vec<Finding> {
    let settings = &cx.config.settings;
    let participation: Vec<Pattern> = settings.participation_properties.iter().map(|p| Pattern::new(p)).collect();
    let process: Vec<Pattern> = settings.process_terms.iter().map(|p| Pattern::new(p)).collect();
    let is_process = |filler: &Iri| {
        let ancestors = cx.index.ancestors(filler).unwrap_or_else(|_| vec![filler]);
        ancestors.into_iter().any(|a| process.iter().any(|p| cx.is_named(a, p)))
    };
    restrictions(cx.model)
        .into_iter()
        .filter_map(|(ax, class, r)| {
            let ClassExpression::SomeValuesFrom(property, filler) = r else { return None };
            let filler = filler.as_named()?;
            (participation.iter().any(|p| cx.is_named(property, p)) && is_process(filler)).then(|| {
                cx.finding(
                    BiasType::Purpose,
                    "purpose.pattern-a",
                    ConsequenceClass::IncorrectAttribution,
                    vec![class.clone(), property.clone(), filler.clone()],
                    [ax],
                    format!(
                        "{} is related by participation ({}) to the process {}: a precise, reuse-oriented encoding that takes a perdurantist view.",
                        cx.display(class),
                        cx.display(property),
                        cx.display(filler)
                    ),
                )
            })
        })
        .collect()
}

fn pattern_b(cx: &Context) -> Vec<Finding> {
    let settings = &cx.config.settings;
    let mut out: Vec<Finding> = restrictions(cx.model)
        .into_iter()
        .filter_map(|(ax, class, r)| match r {
            ClassExpression::DataSomeValuesFrom(p, dt) | ClassExpression::DataAllValuesFrom(p, dt)
                if settings.boolean_datatypes.iter().any(|b| b == dt.as_str()) =>
            {
                Some(cx.finding(
                    BiasType::Purpose,
                    "purpose.pattern-b.boolean",
                    ConsequenceClass::IncorrectAttribution,
                    vec![class.clone(), p.clone()],
                    [ax],
                    format!(
                        "{} is recorded as a boolean flag {}: a compact encoding geared to data processing.",
                        cx.display(class),
                        cx.display(p)
                    ),
                ))
            }
            _ => None,
        })
        .collect();
    let census = cx.model.profile_stats();
    if census.data_properties > 0
        && census.data_properties as f64 >= settings.pattern_b_fraction * census.classes as f64
    {
        let props = cx.model.entities_of_kind(EntityKind::DataProperty);
        let evidence: Vec<usize> = props.iter().flat_map(|p| cx.anchor(p)).collect();
        out.push(cx.finding(
            BiasType::Purpose,
            "purpose.pattern-b.ratio",
            ConsequenceClass::IncorrectAttribution,
            props.into_iter().collect(),
            evidence,
            format!(
                "{} for {} (threshold {} per class): the ontology reads as a model for recording data.",
                count(census.data_properties, "data property", "data properties"),
                count(census.classes, "class", "classes"),
                settings.pattern_b_fraction
            ),
        ));
    }
    out
}

fn pattern_c(cx: &Context) -> Vec<Finding> {
    let settings = &cx.config.settings;
    let thesaurus: Vec<Iri> =
        settings.thesaurus_annotation_properties.iter().filter_map(|p| Iri::new(p.as_str())).collect();
    let uses: Vec<usize> =
        thesaurus.iter().flat_map(|p| cx.model.axioms_with_annotation_property(p).iter().copied()).collect();
    let mut out = Vec::new();
    if uses.is_empty() {
        return out;
    }
    let logical = cx.model.profile_stats().logical_axioms;
    let ratio = uses.len() as f64 / logical.max(1) as f64;
    if logical == 0 || ratio > settings.pattern_c_ratio {
        let subjects = subjects_of(cx, &uses);
        out.push(cx.finding(
            BiasType::Purpose,
            "purpose.pattern-c.ratio",
            ConsequenceClass::IncorrectAttribution,
            subjects,
            uses.iter().copied(),
            format!(
                "{} against {} (ratio {:.2}, threshold {}): terminology coverage is favoured over axiomatisation.",
                count(uses.len(), "thesaurus annotation", "thesaurus annotations"),
                count(logical, "logical axiom", "logical axioms"),
                ratio,
                settings.pattern_c_ratio
            ),
        ));
    }
    let classes = cx.model.entities_of_kind(EntityKind::Class);
    let bare: Vec<&Iri> = classes
        .iter()
        .filter(|c| {
            let labelled = cx
                .model
                .annotations_of(c, None)
                .iter()
                .any(|a| thesaurus.contains(a.property) && a.lexical().is_some());
            let logical: Vec<&AxiomKind> = cx
                .model
                .axioms_about(c)
                .iter()
                .map(|&i| &cx.model.axioms()[i].kind)
                .filter(|k| k.is_logical())
                .collect();
            labelled && matches!(logical.as_slice(), [] | [AxiomKind::SubClassOf { .. }])
        })
        .collect();
    if !bare.is_empty() && bare.len() as f64 >= settings.thesaurus_class_fraction * classes.len() as f64 {
        let evidence: Vec<usize> = bare
            .iter()
            .flat_map(|c| {
                cx.model
                    .annotations_of(c, None)
                    .into_iter()
                    .filter(|a| thesaurus.contains(a.property))
                    .map(|a| a.axiom)
                    .take(1)
            })
            .collect();
        out.push(cx.finding(
            BiasType::Purpose,
            "purpose.pattern-c.thesaurus-class",
            ConsequenceClass::IncorrectAttribution,
            bare.iter().map(|c| (*c).clone()).collect(),
            evidence,
            format!(
                "{} of {} classes are thesaurus entries (preferred/alternative labels with at most one subsumption): a vocabulary for annotation rather than a logical theory.",
                bare.len(),
                classes.len()
            ),
        ));
    }
    out
}

fn subjects_of(cx: &Context, axioms: &[usize]) -> Vec<Iri> {
    let mut subjects: Vec<Iri> = axioms.iter().flat_map(|&i| cx.model.axioms()[i].kind.subjects()).cloned().collect();
    subjects.sort();
    subjects.dedup();
    subjects
}
