use std::fmt::Write;

use crate::owl::{AnnotationValue, AxiomKind, ClassExpression, Iri, Literal, OntologyModel, PrefixTable};

/// Renders a model as functional-style text: prefixes first, then one axiom
/// per line with imports leading.
pub fn serialize(model: &OntologyModel) -> String {
    let prefixes = model.prefixes();
    let mut out = String::new();
    for (prefix, expansion) in prefixes.iter() {
        writeln!(out, "Prefix({prefix}:=<{expansion}>)").unwrap();
    }
    if !prefixes.is_empty() {
        out.push('\n');
    }
    out.push_str("Ontology(");
    if let Some(iri) = model.ontology_iri() {
        out.push_str(&render_iri(iri, prefixes));
    }
    out.push('\n');
    let (imports, rest): (Vec<_>, Vec<_>) = model.axioms().iter().partition(|a| matches!(a.kind, AxiomKind::Import(_)));
    for axiom in imports.into_iter().chain(rest) {
        out.push_str(&render_axiom(&axiom.kind, prefixes));
        out.push('\n');
    }
    out.push_str(")\n");
    out
}

pub(crate) fn render_iri(iri: &Iri, prefixes: &PrefixTable) -> String {
    prefixes.abbreviate(iri).unwrap_or_else(|| format!("<{}>", iri.as_str()))
}

fn render_literal(lit: &Literal, prefixes: &PrefixTable) -> String {
    let mut out = String::with_capacity(lit.lexical.len() + 2);
    out.push('"');
    for c in lit.lexical.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    if let Some(lang) = &lit.language {
        out.push('@');
        out.push_str(lang);
    } else if let Some(dt) = &lit.datatype {
        out.push_str("^^");
        out.push_str(&render_iri(dt, prefixes));
    }
    out
}

fn render_list(name: &str, ops: &[ClassExpression], prefixes: &PrefixTable) -> String {
    let parts: Vec<_> = ops.iter().map(|op| render_expression(op, prefixes)).collect();
    format!("{name}({})", parts.join(" "))
}

pub fn render_expression(expr: &ClassExpression, prefixes: &PrefixTable) -> String {
    let iri = |i: &Iri| render_iri(i, prefixes);
    match expr {
        ClassExpression::Named(i) => iri(i),
        ClassExpression::IntersectionOf(ops) => render_list("ObjectIntersectionOf", ops, prefixes),
        ClassExpression::UnionOf(ops) => render_list("ObjectUnionOf", ops, prefixes),
        ClassExpression::ComplementOf(inner) => {
            format!("ObjectComplementOf({})", render_expression(inner, prefixes))
        }
        ClassExpression::OneOf(members) => {
            let parts: Vec<_> = members.iter().map(iri).collect();
            format!("ObjectOneOf({})", parts.join(" "))
        }
        ClassExpression::SomeValuesFrom(p, filler) => {
            format!("ObjectSomeValuesFrom({} {})", iri(p), render_expression(filler, prefixes))
        }
        ClassExpression::AllValuesFrom(p, filler) => {
            format!("ObjectAllValuesFrom({} {})", iri(p), render_expression(filler, prefixes))
        }
        ClassExpression::MaxCardinality(n, p, filler) => match filler {
            Some(filler) => {
                format!("ObjectMaxCardinality({n} {} {})", iri(p), render_expression(filler, prefixes))
            }
            None => format!("ObjectMaxCardinality({n} {})", iri(p)),
        },
        ClassExpression::DataSomeValuesFrom(p, dt) => format!("DataSomeValuesFrom({} {})", iri(p), iri(dt)),
        ClassExpression::DataAllValuesFrom(p, dt) => format!("DataAllValuesFrom({} {})", iri(p), iri(dt)),
    }
}

/// One axiom in functional syntax, abbreviated with `prefixes`.
pub fn render_axiom(axiom: &AxiomKind, prefixes: &PrefixTable) -> String {
    let iri = |i: &Iri| render_iri(i, prefixes);
    let expr = |e: &ClassExpression| render_expression(e, prefixes);
    match axiom {
        AxiomKind::SubClassOf { sub, sup } => format!("SubClassOf({} {})", expr(sub), expr(sup)),
        AxiomKind::EquivalentClasses(ops) => render_list("EquivalentClasses", ops, prefixes),
        AxiomKind::DisjointClasses(ops) => render_list("DisjointClasses", ops, prefixes),
        AxiomKind::DisjointUnion { class, disjuncts } => {
            let parts: Vec<_> = disjuncts.iter().map(expr).collect();
            format!("DisjointUnion({} {})", iri(class), parts.join(" "))
        }
        AxiomKind::SubObjectPropertyOf { sub, sup } => {
            format!("SubObjectPropertyOf({} {})", iri(sub), iri(sup))
        }
        AxiomKind::InverseObjectProperties(p, q) => {
            format!("InverseObjectProperties({} {})", iri(p), iri(q))
        }
        AxiomKind::ClassAssertion { class, individual } => {
            format!("ClassAssertion({} {})", expr(class), iri(individual))
        }
        AxiomKind::AnnotationAssertion { subject, property, value } => {
            let value = match value {
                AnnotationValue::Literal(lit) => render_literal(lit, prefixes),
                AnnotationValue::Iri(i) => iri(i),
            };
            format!("AnnotationAssertion({} {} {value})", iri(property), iri(subject))
        }
        AxiomKind::Declaration(entity) => {
            format!("Declaration({}({}))", entity.kind.keyword(), iri(&entity.iri))
        }
        AxiomKind::Import(i) => format!("Import({})", iri(i)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::owl::EntityKind;

    #[test]
    fn empty_model_is_header_only() {
        assert_eq!(serialize(&OntologyModel::empty()), "Ontology(\n)\n");
    }

    #[test]
    fn one_of_lists_both_individuals() {
        let ex = |s: &str| Iri::new(format!("http://ex.org/codo#{s}")).unwrap();
        let mut b = OntologyModel::builder();
        b.prefix("", "http://ex.org/codo#");
        for i in ["Female", "Male"] {
            b.declare_axiom(EntityKind::NamedIndividual, ex(i)).unwrap();
        }
        b.declare_axiom(EntityKind::Class, ex("GenderType")).unwrap();
        b.add_axiom(AxiomKind::EquivalentClasses(vec![
            ClassExpression::Named(ex("GenderType")),
            ClassExpression::OneOf(vec![ex("Female"), ex("Male")]),
        ]))
        .unwrap();
        let text = serialize(&b.build());
        assert!(text.contains("EquivalentClasses(:GenderType ObjectOneOf(:Female :Male))"), "{text}");
    }

    #[test]
    fn literals_are_escaped() {
        let lit = Literal::plain("say \"hi\" \\o/");
        assert_eq!(render_literal(&lit, &PrefixTable::new()), r#""say \"hi\" \\o/""#);
    }
}
