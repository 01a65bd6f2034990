//! Audit assembly and rendering.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::detectors::{self, BiasType, Finding, RuleConfig, Severity};
use crate::ofn::{self, LoadError, ParseDiagnostic, ParserOptions};
use crate::owl::{EntityCensus, Iri, OntologyModel};
use crate::reasoner;

/// Shown for economic bias when no rule fired; the detector cannot settle it.
pub const ECONOMIC_CHECKLIST: [&str; 4] = [
    "Are classes that matter to funders or vendors modelled in more detail than comparable ones?",
    "Does any subsumption encode a cost, market or insurance view as if it were a fact of the domain?",
    "Are commercial products or services named where a generic class would do?",
    "Were scope decisions driven by the data a sponsor holds rather than by the domain?",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Present,
    Partial,
    Absent,
}

impl Cell {
    pub fn of(findings: &[Finding], bias: BiasType) -> Cell {
        let mut of_type = findings.iter().filter(|f| f.bias_type == bias).peekable();
        if of_type.peek().is_none() {
            return Cell::Absent;
        }
        if of_type.all(|f| f.severity == Some(Severity::Partial)) {
            Cell::Partial
        } else {
            Cell::Present
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Cell::Present => "+",
            Cell::Partial => "±",
            Cell::Absent => "−",
        }
    }
}

/// One cell per bias type, in [`BiasType::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix(pub [Cell; 8]);

impl Matrix {
    pub fn from_findings(findings: &[Finding]) -> Self {
        Matrix(BiasType::ALL.map(|b| Cell::of(findings, b)))
    }

    pub fn get(&self, bias: BiasType) -> Cell {
        self.0[bias as usize]
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(8))?;
        for (bias, cell) in BiasType::ALL.iter().zip(&self.0) {
            map.serialize_entry(bias.name(), cell)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OntologyReport {
    pub iri: Option<Iri>,
    pub file: Option<String>,
    pub census: EntityCensus,
    pub matrix: Matrix,
    pub findings: Vec<Finding>,
    pub unsatisfiable: Vec<Iri>,
    pub diagnostics: Vec<ParseDiagnostic>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub manual_review: Vec<String>,
}

impl OntologyReport {
    pub fn new(model: &OntologyModel, diagnostics: Vec<ParseDiagnostic>, config: &RuleConfig) -> Self {
        let index = reasoner::classify(model);
        let findings = detectors::run_all(model, &index, config);
        let manual_review = if findings.iter().any(|f| f.bias_type == BiasType::Economic) {
            Vec::new()
        } else {
            ECONOMIC_CHECKLIST.iter().map(|s| s.to_string()).collect()
        };
        OntologyReport {
            iri: model.ontology_iri().cloned(),
            file: model.source_name().map(str::to_owned),
            census: model.profile_stats(),
            matrix: Matrix::from_findings(&findings),
            unsatisfiable: index.unsatisfiable_classes().into_iter().collect(),
            findings,
            diagnostics,
            manual_review,
        }
    }

    /// Column heading: file name, else ontology IRI.
    pub fn label(&self) -> String {
        match (&self.file, &self.iri) {
            (Some(file), _) => file.clone(),
            (None, Some(iri)) => iri.to_string(),
            (None, None) => "(anonymous)".to_owned(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub version: &'static str,
    pub config_fingerprint: String,
    pub ontologies: Vec<OntologyReport>,
}

impl AuditReport {
    pub fn new(config: &RuleConfig, ontologies: Vec<OntologyReport>) -> Self {
        AuditReport { version: env!("CARGO_PKG_VERSION"), config_fingerprint: config.fingerprint(), ontologies }
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.ontologies.iter().flat_map(|o| o.findings.iter())
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Bias audit\n\n");
        let labels: Vec<String> = self.ontologies.iter().map(OntologyReport::label).collect();
        let _ = writeln!(out, "| Bias type | Explicit/Either | {} |", labels.join(" | "));
        let _ = writeln!(out, "|---|---|{}", "---|".repeat(labels.len()));
        for bias in BiasType::ALL {
            let cells: Vec<&str> = self.ontologies.iter().map(|o| o.matrix.get(bias).symbol()).collect();
            let explicitness = match bias.explicitness() {
                detectors::Explicitness::Explicit => "explicit",
                detectors::Explicitness::Either => "either",
            };
            let _ = writeln!(out, "| {} | {explicitness} | {} |", bias.title(), cells.join(" | "));
        }
        let _ = writeln!(out, "\nConfig fingerprint `{}`, version {}.", self.config_fingerprint, self.version);

        for onto in &self.ontologies {
            let _ = writeln!(out, "\n## {}\n", onto.label());
            if let Some(iri) = &onto.iri {
                let _ = writeln!(out, "Ontology `{iri}`.");
            }
            let c = &onto.census;
            let _ = writeln!(
                out,
                "{} classes, {} object properties, {} data properties, {} individuals, {} logical axioms.",
                c.classes, c.object_properties, c.data_properties, c.individuals, c.logical_axioms
            );
            if !onto.unsatisfiable.is_empty() {
                let names: Vec<&str> = onto.unsatisfiable.iter().map(Iri::local_name).collect();
                let _ = writeln!(out, "\nUnsatisfiable: {}.", names.join(", "));
            }
            if !onto.diagnostics.is_empty() {
                out.push_str("\nParser diagnostics:\n\n");
                for d in &onto.diagnostics {
                    let _ = writeln!(out, "- {d}");
                }
            }
            for bias in BiasType::ALL {
                let of_type: Vec<&Finding> = onto.findings.iter().filter(|f| f.bias_type == bias).collect();
                if of_type.is_empty() {
                    continue;
                }
                let _ = writeln!(out, "\n### {} ({})\n", bias.title(), onto.matrix.get(bias).symbol());
                for f in of_type {
                    write_finding(&mut out, f);
                }
            }
            if !onto.manual_review.is_empty() {
                out.push_str("\n### Economic: manual review\n\n");
                for item in &onto.manual_review {
                    let _ = writeln!(out, "- [ ] {item}");
                }
            }
        }
        out
    }
}

fn write_finding(out: &mut String, f: &Finding) {
    let severity = match f.severity {
        Some(Severity::Partial) => ", partial",
        _ => "",
    };
    let consequence = serde_json::to_value(f.consequence_class).ok();
    let consequence = consequence.as_ref().and_then(|v| v.as_str()).unwrap_or_default();
    let _ = writeln!(out, "- **{}** ({consequence}{severity}): {}", f.rule_id, f.message);
    for e in &f.evidence {
        match (&e.file, e.line) {
            (Some(file), Some(line)) => {
                let _ = writeln!(out, "  - `{}` ({file}:{line})", e.axiom);
            }
            (_, Some(line)) => {
                let _ = writeln!(out, "  - `{}` (line {line})", e.axiom);
            }
            _ => {
                let _ = writeln!(out, "  - `{}`", e.axiom);
            }
        }
    }
    if !f.suggestions.is_empty() {
        let _ = writeln!(out, "  - consider: {}", f.suggestions.join("; "));
    }
}

/// Parses one file and audits it. Warnings from lenient parsing are kept in
/// the report.
pub fn audit_file(path: &Path, options: &ParserOptions, config: &RuleConfig) -> Result<OntologyReport, LoadError> {
    let parsed = ofn::parse_file(path, options)?;
    Ok(OntologyReport::new(&parsed.model, parsed.diagnostics, config))
}

/// Audits the files concurrently; the report keeps argument order. The first
/// failing file (in argument order) is returned as the error.
pub fn audit(paths: &[PathBuf], options: &ParserOptions, config: &RuleConfig) -> Result<AuditReport, LoadError> {
    let reports: Vec<_> = paths.par_iter().map(|p| audit_file(p, options, config)).collect();
    let ontologies = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(AuditReport::new(config, ontologies))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::{ConsequenceClass, Explicitness};

    fn finding(bias: BiasType, severity: Option<Severity>) -> Finding {
        Finding {
            bias_type: bias,
            rule_id: "x.y".into(),
            explicitness: Explicitness::Either,
            severity,
            subjects: vec![],
            evidence: vec![],
            message: String::new(),
            suggestions: vec![],
            consequence_class: ConsequenceClass::Omission,
        }
    }

    #[test]
    fn cells() {
        let partial = finding(BiasType::Granularity, Some(Severity::Partial));
        let full = finding(BiasType::Granularity, Some(Severity::Full));
        assert_eq!(Cell::of(&[], BiasType::Granularity), Cell::Absent);
        assert_eq!(Cell::of(std::slice::from_ref(&partial), BiasType::Granularity), Cell::Partial);
        assert_eq!(Cell::of(&[partial, full], BiasType::Granularity), Cell::Present);
        assert_eq!(Cell::of(&[finding(BiasType::Science, None)], BiasType::Science), Cell::Present);
    }

    #[test]
    fn matrix_serializes_in_type_order() {
        let m = Matrix::from_findings(&[finding(BiasType::Economic, None)]);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.starts_with(r#"{"Philosophical":"absent""#));
        assert!(json.ends_with(r#""Economic":"present"}"#));
    }

    #[test]
    fn empty_model_checklist() {
        let report = OntologyReport::new(&OntologyModel::empty(), vec![], &RuleConfig::default());
        assert!(report.matrix.0.iter().all(|c| *c == Cell::Absent));
        assert_eq!(report.manual_review.len(), ECONOMIC_CHECKLIST.len());
        let md = AuditReport::new(&RuleConfig::default(), vec![report]).to_markdown();
        assert!(md.find("| Philosophical").unwrap() < md.find("manual review").unwrap());
    }
}
