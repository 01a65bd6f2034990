use super::diagnostics::{ParseDiagnostic, Position};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    LParen,
    RParen,
    Equals,
    DoubleCaret,
    /// `<...>` without the brackets.
    FullIri(String),
    /// Anything containing a colon: `owl:Thing`, `:Robot`, `owl:`.
    PrefixedName(String),
    Keyword(String),
    Integer(String),
    /// Unescaped lexical form.
    Str(String),
    /// Language tag following a string, without the `@`.
    LangTag(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: Position,
    /// Source text of the token, for diagnostics.
    pub text: String,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn pos(&self) -> Position {
        Position { line: self.line, column: self.column }
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')
}

/// Splits functional-syntax text into tokens; `#` starts a comment running to
/// the end of the line.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseDiagnostic> {
    let mut cur = Cursor { chars: text.chars().peekable(), line: 1, column: 1 };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let start = cur.pos();
        match c {
            c if c.is_whitespace() => {
                cur.bump();
            }
            '#' => {
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
            }
            '(' | ')' | '=' => {
                cur.bump();
                let kind = match c {
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    _ => TokenKind::Equals,
                };
                tokens.push(Token { kind, pos: start, text: c.to_string() });
            }
            '^' => {
                cur.bump();
                if cur.peek() != Some('^') {
                    return Err(ParseDiagnostic::error("expected `^^` before datatype", start, "^"));
                }
                cur.bump();
                tokens.push(Token { kind: TokenKind::DoubleCaret, pos: start, text: "^^".into() });
            }
            '<' => {
                cur.bump();
                let mut iri = String::new();
                loop {
                    match cur.bump() {
                        Some('>') => break,
                        Some(c) if c.is_whitespace() || c == '<' || c == '"' => {
                            return Err(ParseDiagnostic::error(
                                "malformed IRI: illegal character inside <...>",
                                start,
                                format!("<{iri}"),
                            ));
                        }
                        Some(c) => iri.push(c),
                        None => return Err(ParseDiagnostic::error("unterminated IRI", start, format!("<{iri}"))),
                    }
                }
                let text = format!("<{iri}>");
                tokens.push(Token { kind: TokenKind::FullIri(iri), pos: start, text });
            }
            '"' => {
                cur.bump();
                let mut lexical = String::new();
                loop {
                    match cur.bump() {
                        Some('"') => break,
                        Some('\\') => match cur.bump() {
                            Some(c @ ('"' | '\\')) => lexical.push(c),
                            other => {
                                let shown = other.map(String::from).unwrap_or_default();
                                return Err(ParseDiagnostic::error(
                                    "invalid escape in string literal",
                                    start,
                                    format!("\\{shown}"),
                                ));
                            }
                        },
                        Some(c) => lexical.push(c),
                        None => return Err(ParseDiagnostic::error("unterminated string literal", start, "\"")),
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Str(lexical.clone()),
                    pos: start,
                    text: format!("\"{lexical}\""),
                });
                if cur.peek() == Some('@') {
                    let tag_pos = cur.pos();
                    cur.bump();
                    let mut tag = String::new();
                    while let Some(c) = cur.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '-') {
                        tag.push(c);
                        cur.bump();
                    }
                    if tag.is_empty() || tag.starts_with('-') || tag.ends_with('-') {
                        return Err(ParseDiagnostic::error("malformed language tag", tag_pos, format!("@{tag}")));
                    }
                    tokens.push(Token { text: format!("@{tag}"), kind: TokenKind::LangTag(tag), pos: tag_pos });
                }
            }
            c if is_name_char(c) => {
                let mut name = String::new();
                while let Some(c) = cur.peek().filter(|c| is_name_char(*c)) {
                    name.push(c);
                    cur.bump();
                }
                let kind = if name.contains(':') {
                    TokenKind::PrefixedName(name.clone())
                } else if name.chars().all(|c| c.is_ascii_digit()) {
                    TokenKind::Integer(name.clone())
                } else {
                    TokenKind::Keyword(name.clone())
                };
                tokens.push(Token { kind, pos: start, text: name });
            }
            other => {
                return Err(ParseDiagnostic::error(format!("unexpected character `{other}`"), start, other.to_string()))
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn prefix_declaration() {
        assert_eq!(
            kinds("Prefix(:=<http://ex.org/o#>)"),
            vec![
                TokenKind::Keyword("Prefix".into()),
                TokenKind::LParen,
                TokenKind::PrefixedName(":".into()),
                TokenKind::Equals,
                TokenKind::FullIri("http://ex.org/o#".into()),
                TokenKind::RParen,
            ]
        );
    }

    #[test]
    fn literals_and_comments() {
        let toks = kinds("\"drive-thru\"@en-us # trailing comment\n\"a \\\"q\\\"\"^^xsd:string 42");
        assert_eq!(
            toks,
            vec![
                TokenKind::Str("drive-thru".into()),
                TokenKind::LangTag("en-us".into()),
                TokenKind::Str("a \"q\"".into()),
                TokenKind::DoubleCaret,
                TokenKind::PrefixedName("xsd:string".into()),
                TokenKind::Integer("42".into()),
            ]
        );
    }

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("Ontology(\n  :A)").unwrap();
        assert_eq!(toks[2].pos, Position { line: 2, column: 3 });
    }

    #[test]
    fn unterminated_string_reports_start() {
        let err = tokenize("x \"abc").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
    }
}
