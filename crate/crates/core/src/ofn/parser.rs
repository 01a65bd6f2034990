use std::collections::BTreeSet;

use super::diagnostics::{ParseDiagnostic, Position};
use super::lexer::{tokenize, Token, TokenKind};
use crate::owl::{
    ns, AnnotationValue, Axiom, AxiomKind, ClassExpression, Entity, EntityKind, Iri, Literal, OntologyModel,
    PrefixTable,
};

/// How undeclared entities and punning are treated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DeclarationMode {
    /// Undeclared entities and punning are errors.
    Strict,
    /// Undeclared entities are declared from their usage and punned
    /// declarations are skipped, each with a warning.
    #[default]
    Lenient,
}

/// What to do with syntax outside the supported subset.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum UnknownConstructPolicy {
    Fail,
    #[default]
    SkipWithWarning,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParserOptions {
    pub mode: DeclarationMode,
    pub unknown_construct_policy: UnknownConstructPolicy,
}

impl ParserOptions {
    pub fn strict() -> Self {
        ParserOptions { mode: DeclarationMode::Strict, unknown_construct_policy: UnknownConstructPolicy::Fail }
    }
}

/// A successfully parsed document and its warnings.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub model: OntologyModel,
    pub diagnostics: Vec<ParseDiagnostic>,
}

/// Parsing stopped at `error`; `warnings` were collected before it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{error}")]
pub struct ParseError {
    pub error: ParseDiagnostic,
    pub warnings: Vec<ParseDiagnostic>,
}

const BUILTIN_PREFIXES: [(&str, &str); 4] = [("owl", ns::OWL), ("rdf", ns::RDF), ("rdfs", ns::RDFS), ("xsd", ns::XSD)];

fn is_builtin(iri: &Iri, kind: EntityKind) -> bool {
    let s = iri.as_str();
    let owl = |local: &str| s.strip_prefix(ns::OWL) == Some(local);
    let rdfs = |local: &str| s.strip_prefix(ns::RDFS) == Some(local);
    match kind {
        EntityKind::Class => owl("Thing") || owl("Nothing"),
        EntityKind::ObjectProperty => owl("topObjectProperty") || owl("bottomObjectProperty"),
        EntityKind::DataProperty => owl("topDataProperty") || owl("bottomDataProperty"),
        EntityKind::AnnotationProperty => {
            ["label", "comment", "seeAlso", "isDefinedBy"].into_iter().any(rdfs)
                || ["deprecated", "versionInfo", "priorVersion", "backwardCompatibleWith", "incompatibleWith"]
                    .into_iter()
                    .any(owl)
        }
        EntityKind::NamedIndividual => false,
    }
}

enum Fault {
    Syntax(ParseDiagnostic),
    Unsupported { construct: String, pos: Position },
}

impl From<ParseDiagnostic> for Fault {
    fn from(d: ParseDiagnostic) -> Self {
        Fault::Syntax(d)
    }
}

struct Usage {
    iri: Iri,
    kind: EntityKind,
    pos: Position,
    text: String,
}

struct RawAxiom {
    kind: AxiomKind,
    pos: Position,
    usages: Vec<Usage>,
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    prefixes: PrefixTable,
    options: ParserOptions,
    warnings: Vec<ParseDiagnostic>,
    usages: Vec<Usage>,
    last_pos: Position,
}

/// Parses OWL 2 functional-style text restricted to the supported subset.
pub fn parse(text: &str, options: &ParserOptions) -> Result<Parsed, ParseError> {
    let tokens = tokenize(text).map_err(|error| ParseError { error, warnings: Vec::new() })?;
    let last_pos = last_position(text);
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        prefixes: PrefixTable::new(),
        options: *options,
        warnings: Vec::new(),
        usages: Vec::new(),
        last_pos,
    };
    let document = parser.document();
    let mut warnings = std::mem::take(&mut parser.warnings);
    let (ontology_iri, raws) = match document {
        Ok(doc) => doc,
        Err(error) => {
            sort(&mut warnings);
            return Err(ParseError { error, warnings });
        }
    };
    let result = assemble(parser.prefixes, ontology_iri, raws, options, &mut warnings);
    sort(&mut warnings);
    match result {
        Ok(model) => Ok(Parsed { model, diagnostics: warnings }),
        Err(error) => Err(ParseError { error, warnings }),
    }
}

fn sort(diagnostics: &mut [ParseDiagnostic]) {
    diagnostics.sort_by_key(|d| (d.line, d.column));
}

/// Position of the last character, or 1:1 for empty input.
fn last_position(text: &str) -> Position {
    let mut pos = Position { line: 1, column: 1 };
    let mut last = pos;
    for c in text.chars() {
        last = pos;
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    }
    last
}

fn assemble(
    prefixes: PrefixTable,
    ontology_iri: Option<Iri>,
    raws: Vec<RawAxiom>,
    options: &ParserOptions,
    warnings: &mut Vec<ParseDiagnostic>,
) -> Result<OntologyModel, ParseDiagnostic> {
    let strict = options.mode == DeclarationMode::Strict;
    let mut builder = OntologyModel::builder();
    for (prefix, expansion) in prefixes.iter() {
        builder.prefix(prefix, expansion);
    }
    builder.set_ontology_iri(ontology_iri);

    let mut dropped = vec![false; raws.len()];
    for (i, raw) in raws.iter().enumerate() {
        if let AxiomKind::Declaration(entity) = &raw.kind {
            if let Err(err) = builder.declare(entity.clone()) {
                let usage = &raw.usages[0];
                let message = format!("punning: {err}");
                if strict {
                    return Err(ParseDiagnostic::error(message, usage.pos, usage.text.clone()));
                }
                warnings.push(ParseDiagnostic::warning(
                    format!("{message}; second declaration skipped"),
                    usage.pos,
                    usage.text.clone(),
                ));
                dropped[i] = true;
            }
        }
    }

    let mut auto_declared = BTreeSet::new();
    for (raw, dropped) in raws.into_iter().zip(dropped) {
        if dropped {
            continue;
        }
        let mut keep = true;
        if !matches!(raw.kind, AxiomKind::Declaration(_)) {
            for usage in &raw.usages {
                if is_builtin(&usage.iri, usage.kind) {
                    continue;
                }
                match builder.kind_of(&usage.iri) {
                    Some(kind) if kind == usage.kind => {}
                    Some(kind) => {
                        let message =
                            format!("punning: {} is declared as {kind} but used as {}", usage.iri, usage.kind);
                        if strict {
                            return Err(ParseDiagnostic::error(message, usage.pos, usage.text.clone()));
                        }
                        warnings.push(ParseDiagnostic::warning(
                            format!("{message}; axiom skipped"),
                            usage.pos,
                            usage.text.clone(),
                        ));
                        keep = false;
                        break;
                    }
                    None => {
                        if strict {
                            return Err(ParseDiagnostic::error(
                                format!("undeclared {} {}", usage.kind, usage.iri),
                                usage.pos,
                                usage.text.clone(),
                            ));
                        }
                        builder.declare(Entity::new(usage.kind, usage.iri.clone())).expect("undeclared IRI cannot pun");
                        if auto_declared.insert(usage.iri.clone()) {
                            warnings.push(ParseDiagnostic::warning(
                                format!("undeclared {} {} declared implicitly", usage.kind, usage.iri),
                                usage.pos,
                                usage.text.clone(),
                            ));
                        }
                    }
                }
            }
        }
        if keep {
            builder
                .add_axiom(Axiom::at(raw.kind, raw.pos.line, raw.pos.column))
                .expect("declarations were registered above");
        }
    }
    Ok(builder.build())
}

const CLASS_CONSTRUCTORS: [&str; 9] = [
    "ObjectIntersectionOf",
    "ObjectUnionOf",
    "ObjectComplementOf",
    "ObjectOneOf",
    "ObjectSomeValuesFrom",
    "ObjectAllValuesFrom",
    "ObjectMaxCardinality",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
];

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<&'t Token, ParseDiagnostic> {
        let tok = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| ParseDiagnostic::error("unexpected end of input", self.last_pos, ""))?;
        self.pos += 1;
        Ok(tok)
    }

    fn expect(&mut self, want: TokenKind, what: &str) -> Result<&'t Token, ParseDiagnostic> {
        let tok = self.next()?;
        if tok.kind == want {
            Ok(tok)
        } else {
            Err(ParseDiagnostic::error(format!("expected {what}"), tok.pos, tok.text.clone()))
        }
    }

    fn keyword_is(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Token { kind: TokenKind::Keyword(k), .. }) if k == word)
    }

    /// Index of the `)` matching the `(` at `open`.
    fn matching_close(&self, open: usize) -> Result<usize, ParseDiagnostic> {
        let mut depth = 0usize;
        for (i, tok) in self.tokens.iter().enumerate().skip(open) {
            match tok.kind {
                TokenKind::LParen => depth += 1,
                TokenKind::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(i);
                    }
                }
                _ => {}
            }
        }
        let tok = &self.tokens[open];
        Err(ParseDiagnostic::error("unbalanced parentheses", tok.pos, tok.text.clone()))
    }

    fn document(&mut self) -> Result<(Option<Iri>, Vec<RawAxiom>), ParseDiagnostic> {
        while self.keyword_is("Prefix") {
            self.prefix_declaration()?;
        }
        let tok = self.next()?;
        if tok.kind != TokenKind::Keyword("Ontology".into()) {
            return Err(ParseDiagnostic::error("expected `Ontology(`", tok.pos, tok.text.clone()));
        }
        let open = self.pos;
        self.expect(TokenKind::LParen, "`(` after Ontology")?;
        let close = self.matching_close(open)?;

        let mut ontology_iri = None;
        if self.is_iri_token() {
            ontology_iri = Some(self.header_iri()?.0);
            if self.is_iri_token() {
                let tok = self.peek().expect("checked above");
                let (_, pos) = self.header_iri()?;
                self.warnings.push(ParseDiagnostic::warning("version IRI is not retained", pos, tok.text.clone()));
            }
        }

        let mut raws = Vec::new();
        while self.pos < close {
            let start = self.pos;
            let tok = self.next()?;
            let TokenKind::Keyword(keyword) = &tok.kind else {
                return Err(ParseDiagnostic::error("expected an axiom", tok.pos, tok.text.clone()));
            };
            if self.peek().map(|t| &t.kind) != Some(&TokenKind::LParen) {
                return Err(ParseDiagnostic::error(format!("expected `(` after {keyword}"), tok.pos, tok.text.clone()));
            }
            let end = self.matching_close(self.pos)?;
            self.pos += 1;
            self.usages.clear();
            match self.axiom(keyword, tok.pos, end) {
                Ok(Some(kind)) => {
                    if self.pos != end {
                        let extra = &self.tokens[self.pos];
                        return Err(ParseDiagnostic::error(
                            format!("unexpected token in {keyword}"),
                            extra.pos,
                            extra.text.clone(),
                        ));
                    }
                    let usages = std::mem::take(&mut self.usages);
                    raws.push(RawAxiom { kind, pos: tok.pos, usages });
                }
                Ok(None) => {}
                Err(Fault::Syntax(d)) => return Err(d),
                Err(Fault::Unsupported { construct, pos }) => {
                    self.unsupported(&construct, pos, &self.tokens[start].text.clone())?;
                }
            }
            self.pos = end + 1;
        }
        self.pos = close + 1;
        if let Some(tok) = self.peek() {
            return Err(ParseDiagnostic::error("unexpected content after ontology", tok.pos, tok.text.clone()));
        }
        Ok((ontology_iri, raws))
    }

    fn unsupported(&mut self, construct: &str, pos: Position, axiom: &str) -> Result<(), ParseDiagnostic> {
        match self.options.unknown_construct_policy {
            UnknownConstructPolicy::Fail => {
                Err(ParseDiagnostic::error(format!("unsupported construct {construct}"), pos, construct.to_owned()))
            }
            UnknownConstructPolicy::SkipWithWarning => {
                let message = if construct == axiom {
                    format!("unsupported construct {construct} skipped")
                } else {
                    format!("unsupported construct {construct} inside {axiom}; axiom skipped")
                };
                self.warnings.push(ParseDiagnostic::warning(message, pos, construct.to_owned()));
                Ok(())
            }
        }
    }

    fn prefix_declaration(&mut self) -> Result<(), ParseDiagnostic> {
        self.next()?;
        self.expect(TokenKind::LParen, "`(` after Prefix")?;
        let tok = self.next()?;
        let TokenKind::PrefixedName(name) = &tok.kind else {
            return Err(ParseDiagnostic::error("expected prefix name", tok.pos, tok.text.clone()));
        };
        let Some(prefix) = name.strip_suffix(':').filter(|p| !p.contains(':')) else {
            return Err(ParseDiagnostic::error("malformed prefix name", tok.pos, tok.text.clone()));
        };
        self.expect(TokenKind::Equals, "`=` in Prefix")?;
        let iri_tok = self.next()?;
        let TokenKind::FullIri(expansion) = &iri_tok.kind else {
            return Err(ParseDiagnostic::error("expected <IRI> in Prefix", iri_tok.pos, iri_tok.text.clone()));
        };
        if Iri::new(expansion.as_str()).is_none() {
            return Err(ParseDiagnostic::error("malformed IRI: not absolute", iri_tok.pos, iri_tok.text.clone()));
        }
        self.expect(TokenKind::RParen, "`)` closing Prefix")?;
        self.prefixes.insert(prefix, expansion.as_str());
        Ok(())
    }

    fn is_iri_token(&self) -> bool {
        matches!(self.peek().map(|t| &t.kind), Some(TokenKind::FullIri(_) | TokenKind::PrefixedName(_)))
    }

    fn iri(&mut self) -> Result<(Iri, Position), Fault> {
        let tok = self.next()?;
        let iri = match &tok.kind {
            TokenKind::FullIri(value) => Iri::new(value.as_str())
                .ok_or_else(|| ParseDiagnostic::error("malformed IRI: not absolute", tok.pos, tok.text.clone()))?,
            TokenKind::PrefixedName(name) if name.starts_with("_:") => {
                return Err(Fault::Unsupported { construct: "anonymous individual".into(), pos: tok.pos })
            }
            TokenKind::PrefixedName(name) => {
                let (prefix, _) = name.split_once(':').expect("prefixed names contain a colon");
                match self.prefixes.expand(name) {
                    Some(iri) => iri,
                    None => BUILTIN_PREFIXES
                        .iter()
                        .find(|(p, _)| *p == prefix)
                        .and_then(|(_, base)| {
                            let mut table = PrefixTable::new();
                            table.insert(prefix, *base);
                            table.expand(name)
                        })
                        .ok_or_else(|| {
                            ParseDiagnostic::error(format!("unknown prefix `{prefix}:`"), tok.pos, tok.text.clone())
                        })?,
                }
            }
            _ => return Err(ParseDiagnostic::error("expected an IRI", tok.pos, tok.text.clone()).into()),
        };
        Ok((iri, tok.pos))
    }

    fn header_iri(&mut self) -> Result<(Iri, Position), ParseDiagnostic> {
        self.iri().map_err(|fault| match fault {
            Fault::Syntax(d) => d,
            Fault::Unsupported { construct, pos } => {
                ParseDiagnostic::error(format!("{construct} not allowed here"), pos, construct)
            }
        })
    }

    fn entity(&mut self, kind: EntityKind) -> Result<Iri, Fault> {
        let text = self.peek().map(|t| t.text.clone()).unwrap_or_default();
        let (iri, pos) = self.iri()?;
        self.usages.push(Usage { iri: iri.clone(), kind, pos, text });
        Ok(iri)
    }

    fn close(&mut self, what: &str) -> Result<(), Fault> {
        self.expect(TokenKind::RParen, &format!("`)` closing {what}"))?;
        Ok(())
    }

    /// Skips axiom annotations, which the model does not retain.
    fn axiom_annotations(&mut self) -> Result<(), Fault> {
        while self.keyword_is("Annotation") {
            let tok = self.peek().expect("checked above");
            match self.options.unknown_construct_policy {
                UnknownConstructPolicy::Fail => {
                    return Err(Fault::Unsupported { construct: "Annotation".into(), pos: tok.pos })
                }
                UnknownConstructPolicy::SkipWithWarning => {
                    self.warnings.push(ParseDiagnostic::warning("axiom annotation ignored", tok.pos, "Annotation"));
                    let close = self.matching_close(self.pos + 1)?;
                    self.pos = close + 1;
                }
            }
        }
        Ok(())
    }

    fn axiom(&mut self, keyword: &str, pos: Position, end: usize) -> Result<Option<AxiomKind>, Fault> {
        let kind = match keyword {
            "Import" => {
                let (iri, _) = self.iri()?;
                AxiomKind::Import(iri)
            }
            "Declaration" => {
                self.axiom_annotations()?;
                let tok = self.next()?;
                let TokenKind::Keyword(word) = &tok.kind else {
                    return Err(ParseDiagnostic::error("expected entity kind", tok.pos, tok.text.clone()).into());
                };
                let Some(kind) = EntityKind::from_keyword(word) else {
                    if word == "Datatype" {
                        return Err(Fault::Unsupported { construct: "Declaration(Datatype)".into(), pos: tok.pos });
                    }
                    return Err(ParseDiagnostic::error("unknown entity kind", tok.pos, tok.text.clone()).into());
                };
                self.expect(TokenKind::LParen, "`(` after entity kind")?;
                let iri = self.entity(kind)?;
                self.close(word)?;
                AxiomKind::Declaration(Entity::new(kind, iri))
            }
            "SubClassOf" => {
                self.axiom_annotations()?;
                let sub = self.class_expression()?;
                let sup = self.class_expression()?;
                AxiomKind::SubClassOf { sub, sup }
            }
            "EquivalentClasses" | "DisjointClasses" => {
                self.axiom_annotations()?;
                let ops = self.expression_list(end)?;
                self.min_operands(keyword, 2, ops.len(), pos)?;
                if keyword == "EquivalentClasses" {
                    AxiomKind::EquivalentClasses(ops)
                } else {
                    AxiomKind::DisjointClasses(ops)
                }
            }
            "DisjointUnion" => {
                self.axiom_annotations()?;
                let class = self.entity(EntityKind::Class)?;
                let disjuncts = self.expression_list(end)?;
                self.min_operands(keyword, 2, disjuncts.len(), pos)?;
                AxiomKind::DisjointUnion { class, disjuncts }
            }
            "SubObjectPropertyOf" | "InverseObjectProperties" => {
                self.axiom_annotations()?;
                let first = self.object_property()?;
                let second = self.object_property()?;
                if keyword == "SubObjectPropertyOf" {
                    AxiomKind::SubObjectPropertyOf { sub: first, sup: second }
                } else {
                    AxiomKind::InverseObjectProperties(first, second)
                }
            }
            "ClassAssertion" => {
                self.axiom_annotations()?;
                let class = self.class_expression()?;
                let individual = self.entity(EntityKind::NamedIndividual)?;
                AxiomKind::ClassAssertion { class, individual }
            }
            "AnnotationAssertion" => {
                self.axiom_annotations()?;
                let property = self.entity(EntityKind::AnnotationProperty)?;
                let (subject, _) = self.iri()?;
                let value = self.annotation_value()?;
                AxiomKind::AnnotationAssertion { subject, property, value }
            }
            other => {
                return Err(Fault::Unsupported { construct: other.to_owned(), pos });
            }
        };
        Ok(Some(kind))
    }

    fn min_operands(&self, what: &str, min: usize, found: usize, pos: Position) -> Result<(), Fault> {
        if found < min {
            Err(ParseDiagnostic::error(
                format!("{what} needs at least {min} operand(s), found {found}"),
                pos,
                what.to_owned(),
            )
            .into())
        } else {
            Ok(())
        }
    }

    fn expression_list(&mut self, end: usize) -> Result<Vec<ClassExpression>, Fault> {
        let mut ops = Vec::new();
        while self.pos < end && self.peek().map(|t| &t.kind) != Some(&TokenKind::RParen) {
            ops.push(self.class_expression()?);
        }
        Ok(ops)
    }

    fn object_property(&mut self) -> Result<Iri, Fault> {
        if let Some(Token { kind: TokenKind::Keyword(k), pos, .. }) = self.peek() {
            return Err(Fault::Unsupported { construct: k.clone(), pos: *pos });
        }
        self.entity(EntityKind::ObjectProperty)
    }

    fn class_expression(&mut self) -> Result<ClassExpression, Fault> {
        if self.is_iri_token() {
            return Ok(ClassExpression::Named(self.entity(EntityKind::Class)?));
        }
        let tok = self.next()?;
        let TokenKind::Keyword(keyword) = &tok.kind else {
            return Err(ParseDiagnostic::error("expected a class expression", tok.pos, tok.text.clone()).into());
        };
        if !CLASS_CONSTRUCTORS.contains(&keyword.as_str()) {
            return Err(Fault::Unsupported { construct: keyword.clone(), pos: tok.pos });
        }
        let open = self.pos;
        self.expect(TokenKind::LParen, &format!("`(` after {keyword}"))?;
        let end = self.matching_close(open)?;
        let expr = match keyword.as_str() {
            "ObjectIntersectionOf" | "ObjectUnionOf" => {
                let ops = self.expression_list(end)?;
                self.min_operands(keyword, 2, ops.len(), tok.pos)?;
                if keyword == "ObjectUnionOf" {
                    ClassExpression::UnionOf(ops)
                } else {
                    ClassExpression::IntersectionOf(ops)
                }
            }
            "ObjectComplementOf" => ClassExpression::ComplementOf(Box::new(self.class_expression()?)),
            "ObjectOneOf" => {
                let mut members = Vec::new();
                while self.pos < end {
                    members.push(self.entity(EntityKind::NamedIndividual)?);
                }
                self.min_operands(keyword, 1, members.len(), tok.pos)?;
                ClassExpression::OneOf(members)
            }
            "ObjectSomeValuesFrom" | "ObjectAllValuesFrom" => {
                let property = self.object_property()?;
                let filler = Box::new(self.class_expression()?);
                if keyword == "ObjectSomeValuesFrom" {
                    ClassExpression::SomeValuesFrom(property, filler)
                } else {
                    ClassExpression::AllValuesFrom(property, filler)
                }
            }
            "ObjectMaxCardinality" => {
                let n_tok = self.next()?;
                let n = match &n_tok.kind {
                    TokenKind::Integer(digits) => digits.parse::<u32>().map_err(|_| {
                        ParseDiagnostic::error("cardinality out of range", n_tok.pos, n_tok.text.clone())
                    })?,
                    _ => {
                        return Err(ParseDiagnostic::error(
                            "expected a non-negative integer cardinality",
                            n_tok.pos,
                            n_tok.text.clone(),
                        )
                        .into())
                    }
                };
                let property = self.object_property()?;
                let filler = if self.pos < end { Some(Box::new(self.class_expression()?)) } else { None };
                ClassExpression::MaxCardinality(n, property, filler)
            }
            _ => {
                // DataSomeValuesFrom / DataAllValuesFrom over one property and a named datatype
                let property = self.entity(EntityKind::DataProperty)?;
                if !self.is_iri_token() {
                    let t = self.peek().expect("inside balanced parentheses");
                    let construct = match &t.kind {
                        TokenKind::Keyword(k) => k.clone(),
                        _ => "data range".into(),
                    };
                    return Err(Fault::Unsupported { construct, pos: t.pos });
                }
                let (datatype, dt_pos) = self.iri()?;
                if self.pos < end {
                    return Err(Fault::Unsupported {
                        construct: format!("{keyword} with several properties"),
                        pos: dt_pos,
                    });
                }
                if keyword == "DataSomeValuesFrom" {
                    ClassExpression::DataSomeValuesFrom(property, datatype)
                } else {
                    ClassExpression::DataAllValuesFrom(property, datatype)
                }
            }
        };
        self.close(keyword)?;
        Ok(expr)
    }

    fn annotation_value(&mut self) -> Result<AnnotationValue, Fault> {
        if self.is_iri_token() {
            return Ok(AnnotationValue::Iri(self.iri()?.0));
        }
        let tok = self.next()?;
        let TokenKind::Str(lexical) = &tok.kind else {
            return Err(ParseDiagnostic::error("expected a literal or IRI", tok.pos, tok.text.clone()).into());
        };
        let mut literal = Literal::plain(lexical.clone());
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::LangTag(tag)) => {
                literal.language = Some(tag.clone());
                self.pos += 1;
            }
            Some(TokenKind::DoubleCaret) => {
                self.pos += 1;
                literal.datatype = Some(self.iri()?.0);
            }
            _ => {}
        }
        Ok(AnnotationValue::Literal(literal))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::owl::AxiomVariant;

    fn lenient(text: &str) -> Parsed {
        parse(text, &ParserOptions::default()).unwrap()
    }

    #[test]
    fn bare_ontology() {
        let parsed = lenient("Ontology(<http://ex.org/o>)");
        assert_eq!(parsed.model.ontology_iri().unwrap().as_str(), "http://ex.org/o");
        assert!(parsed.diagnostics.is_empty());
        assert!(parsed.model.axioms().is_empty());
    }

    #[test]
    fn robot_axioms_by_variant() {
        let text = "Prefix(:=<http://ex.org/genet#>)
Ontology(<http://ex.org/genet>
Declaration(Class(:Robot))
Declaration(Class(:PatientKind))
Declaration(Class(:Human))
SubClassOf(:Robot :PatientKind)
DisjointClasses(:Robot :Human)
)";
        let model = lenient(text).model;
        assert_eq!(model.axioms_of_variant(AxiomVariant::SubClassOf).len(), 1);
        let disj = model.axioms_of_variant(AxiomVariant::DisjointClasses);
        assert_eq!(disj.len(), 1);
        assert_eq!(model.axiom(disj[0]).unwrap().line(), Some(7));
    }

    #[test]
    fn haskey_is_skipped_with_one_warning() {
        let text = "Prefix(:=<http://ex.org/o#>)
Ontology(
Declaration(Class(:A))
HasKey(:A () (:p))
)";
        let parsed = lenient(text);
        assert_eq!(parsed.model.axioms().len(), 1);
        assert_eq!(parsed.diagnostics.len(), 1);
        assert!(parsed.diagnostics[0].message.contains("HasKey"));
        assert_eq!(parsed.diagnostics[0].line, 4);

        let err = parse(
            text,
            &ParserOptions { unknown_construct_policy: UnknownConstructPolicy::Fail, ..Default::default() },
        )
        .unwrap_err();
        assert!(err.error.message.contains("HasKey"));
    }

    #[test]
    fn unsupported_nested_constructor_drops_axiom() {
        let text = "Prefix(:=<http://ex.org/o#>)
Ontology(
Declaration(Class(:A))
Declaration(ObjectProperty(:p))
SubClassOf(:A ObjectMinCardinality(1 :p))
)";
        let parsed = lenient(text);
        assert_eq!(parsed.model.axioms().len(), 2);
        assert!(parsed.diagnostics[0].message.contains("ObjectMinCardinality inside SubClassOf"));
    }

    #[test]
    fn strict_mode_rejects_undeclared() {
        let text = "Prefix(:=<http://ex.org/o#>)\nOntology(\nSubClassOf(:A :B)\n)";
        let err = parse(text, &ParserOptions::strict()).unwrap_err();
        assert!(err.error.message.starts_with("undeclared Class"));
        assert_eq!((err.error.line, err.error.column), (3, 12));

        let parsed = lenient(text);
        assert_eq!(parsed.diagnostics.len(), 2);
        assert!(parsed.model.is_declared(&Iri::new("http://ex.org/o#B").unwrap(), EntityKind::Class));
    }

    #[test]
    fn punning_strict_and_lenient() {
        let text = "Prefix(:=<http://ex.org/o#>)
Ontology(
Declaration(Class(:X))
Declaration(NamedIndividual(:X))
)";
        assert!(parse(text, &ParserOptions::strict()).unwrap_err().error.message.contains("punning"));
        let parsed = lenient(text);
        assert_eq!(parsed.model.axioms().len(), 1);
        assert_eq!(parsed.diagnostics.len(), 1);
        assert_eq!(parsed.model.kind_of(&Iri::new("http://ex.org/o#X").unwrap()), Some(EntityKind::Class));
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let cases = [
            ("Ontology(\nSubClassOf(:A :B\n", (1, 9)),
            ("Ontology(<relative>)", (1, 10)),
            ("Prefix(:=<http://e.org/#>)\nOntology(\nSubClassOf(:A ObjectMaxCardinality(x :p))\n)", (3, 36)),
            ("Ontology(\nSubClassOf(nope:A :B)\n)", (2, 12)),
        ];
        for (text, (line, column)) in cases {
            let err = parse(text, &ParserOptions::default()).unwrap_err();
            assert_eq!((err.error.line, err.error.column), (line, column), "{text}: {}", err.error);
        }
    }

    #[test]
    fn language_tags_and_builtin_annotation_properties() {
        let text = r#"Prefix(:=<http://ex.org/o#>)
Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)
Ontology(
Declaration(Class(:Facility))
AnnotationAssertion(rdfs:label :Facility "drive-thru"@en-us)
)"#;
        let parsed = lenient(text);
        assert!(parsed.diagnostics.is_empty(), "{:?}", parsed.diagnostics);
        let anns = parsed.model.annotations_of(&Iri::new("http://ex.org/o#Facility").unwrap(), None);
        assert_eq!(anns[0].lexical(), Some("drive-thru"));
        assert_eq!(anns[0].language(), Some("en-us"));
    }
}
