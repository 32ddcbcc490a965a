//! Parsing and serialization: a small polynomial expression grammar and the
//! line-oriented set-description document format.
//!
//! Document format (UTF-8, LF):
//!
//! ```text
//! var t
//! kind strict
//! set
//! ineq t^2*(t-1)
//! end
//! ```
//!
//! A document holds a union of elementary sets; each `set` ... `end` block
//! lists `ineq` (strict `> 0`, or `>= 0` for `kind closed`) and `eq` (`= 0`)
//! polynomial expressions.
//!
//! Expression grammar, rationals only:
//!
//! ```text
//! expr    := '-'? term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := base ('^' nonneg-integer)?
//! base    := rational | variable | '(' expr ')'
//! rational:= integer ('/' positive-integer)?
//! ```

use crate::poly::{Rat, UPoly};
use crate::semialg::{ClosedElementarySet, ClosedSetUnion, ElementarySet, SetUnion};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column in the expression source.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for DocError {}

// -------------------------------------------------------------------------
// expression lexer and parser
// -------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>, // (1-based column, token)
    end_col: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push((col, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((col, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((col, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((col, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((col, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((col, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((col, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    return Err(ParseError {
                        column: i + 1,
                        message: "decimal literals are not supported; write an exact fraction \
                                  such as 3/2"
                            .to_string(),
                    });
                }
                let text: String = chars[start..i].iter().collect();
                toks.push((col, Tok::Number(text.parse().unwrap())));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((col, Tok::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(Lexer {
        toks,
        end_col: chars.len() + 1,
    })
}

struct Parser<'a> {
    lexer: Lexer,
    pos: usize,
    variable: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lexer.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.lexer
            .toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.lexer.end_col)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.lexer.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.col(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<UPoly, ParseError> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UPoly, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.next();
        match self.next() {
            Some(Tok::Number(n)) => {
                if n.is_negative() {
                    return self.err("exponent must be a nonnegative integer");
                }
                let e: u32 = n
                    .try_into()
                    .map_err(|_| ParseError {
                        column: self.col(),
                        message: "exponent too large".to_string(),
                    })?;
                if e > 4096 {
                    return self.err("exponent too large");
                }
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => {
                self.pos -= 1;
                self.err("exponent must be a nonnegative integer")
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected a nonnegative integer exponent after `^`")
            }
        }
    }

    fn base(&mut self) -> Result<UPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Number(n)) => {
                self.next();
                // optional '/ positive-integer' completes a rational literal
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    match self.next() {
                        Some(Tok::Number(d)) if d.is_positive() => {
                            Ok(UPoly::constant(Rat::new(n, d)))
                        }
                        Some(Tok::Number(_)) => {
                            self.pos -= 1;
                            self.err("denominator must be a positive integer")
                        }
                        _ => {
                            self.pos = self.pos.saturating_sub(1);
                            self.err("expected a positive integer denominator after `/`")
                        }
                    }
                } else {
                    Ok(UPoly::constant(Rat::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                if name != self.variable {
                    return self.err(format!(
                        "unknown identifier `{name}`, expected `{}`",
                        self.variable
                    ));
                }
                self.next();
                Ok(UPoly::var())
            }
            Some(Tok::LParen) => {
                self.next();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.next();
                Ok(inner)
            }
            Some(Tok::Minus) => self.err("unary minus is only allowed at the start of an \
                                          expression or after `(`"),
            Some(other) => self.err(format!("unexpected token `{other:?}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parses an expression into a canonical polynomial in the given variable.
pub fn parse_poly(src: &str, variable: &str) -> Result<UPoly, ParseError> {
    let lexer = lex(src)?;
    let mut parser = Parser {
        lexer,
        pos: 0,
        variable,
    };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input");
    }
    Ok(poly)
}

// -------------------------------------------------------------------------
// documents
// -------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Strict,
    Closed,
}

impl DocKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DocKind::Strict => "strict",
            DocKind::Closed => "closed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DocPart {
    pub ineqs: Vec<String>,
    pub eqs: Vec<String>,
}

/// Parsed set-description document. Expressions are kept as source strings;
/// they are validated against the grammar at parse time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDocument {
    pub variable: String,
    pub kind: DocKind,
    pub parts: Vec<DocPart>,
}

pub fn parse_document(src: &str) -> Result<SetDocument, DocError> {
    let mut variable: Option<String> = None;
    let mut kind: Option<DocKind> = None;
    let mut parts: Vec<DocPart> = Vec::new();
    let mut current: Option<DocPart> = None;

    let fail = |line: usize, message: String| DocError { line, message };

    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (word, rest) = match line.split_once(char::is_whitespace) {
            Some((w, r)) => (w, r.trim()),
            None => (line, ""),
        };
        match word {
            "var" => {
                if variable.is_some() {
                    return Err(fail(lineno, "duplicate `var` line".into()));
                }
                if rest.is_empty() || !rest.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(fail(lineno, "expected `var <identifier>`".into()));
                }
                variable = Some(rest.to_string());
            }
            "kind" => {
                if variable.is_none() {
                    return Err(fail(lineno, "`kind` before `var`".into()));
                }
                if kind.is_some() {
                    return Err(fail(lineno, "duplicate `kind` line".into()));
                }
                kind = Some(match rest {
                    "strict" => DocKind::Strict,
                    "closed" => DocKind::Closed,
                    other => {
                        return Err(fail(
                            lineno,
                            format!("unknown kind `{other}`, expected `strict` or `closed`"),
                        ))
                    }
                });
            }
            "set" => {
                if kind.is_none() {
                    return Err(fail(lineno, "`set` before `var`/`kind` header".into()));
                }
                if current.is_some() {
                    return Err(fail(lineno, "nested `set` (missing `end`?)".into()));
                }
                if !rest.is_empty() {
                    return Err(fail(lineno, "unexpected text after `set`".into()));
                }
                current = Some(DocPart::default());
            }
            "ineq" | "eq" => {
                let Some(part) = current.as_mut() else {
                    return Err(fail(lineno, format!("`{word}` outside a `set` block")));
                };
                let var = variable.as_deref().unwrap();
                parse_poly(rest, var)
                    .map_err(|e| fail(lineno, format!("bad expression: {e}")))?;
                if word == "ineq" {
                    part.ineqs.push(rest.to_string());
                } else {
                    part.eqs.push(rest.to_string());
                }
            }
            "end" => {
                let Some(part) = current.take() else {
                    return Err(fail(lineno, "`end` without `set`".into()));
                };
                parts.push(part);
            }
            other => {
                return Err(fail(lineno, format!("unknown directive `{other}`")));
            }
        }
    }
    if current.is_some() {
        return Err(fail(src.lines().count(), "unterminated `set` block".into()));
    }
    let variable = variable.ok_or_else(|| fail(1, "missing `var` line".into()))?;
    let kind = kind.ok_or_else(|| fail(1, "missing `kind` line".into()))?;
    Ok(SetDocument {
        variable,
        kind,
        parts,
    })
}

pub fn render_document(doc: &SetDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("var {}\n", doc.variable));
    out.push_str(&format!("kind {}\n", doc.kind.as_str()));
    for part in &doc.parts {
        out.push_str("set\n");
        for e in &part.ineqs {
            out.push_str(&format!("ineq {e}\n"));
        }
        for e in &part.eqs {
            out.push_str(&format!("eq {e}\n"));
        }
        out.push_str("end\n");
    }
    out
}

fn parse_part_polys(part: &DocPart, var: &str) -> Result<(Vec<UPoly>, Vec<UPoly>), DocError> {
    let conv = |exprs: &[String]| -> Result<Vec<UPoly>, DocError> {
        exprs
            .iter()
            .map(|e| {
                parse_poly(e, var).map_err(|err| DocError {
                    line: 0,
                    message: format!("bad expression `{e}`: {err}"),
                })
            })
            .collect()
    };
    Ok((conv(&part.ineqs)?, conv(&part.eqs)?))
}

/// Interprets a strict-kind document as a strict union.
pub fn document_strict_union(doc: &SetDocument) -> Result<SetUnion, DocError> {
    if doc.kind != DocKind::Strict {
        return Err(DocError {
            line: 2,
            message: "expected a `kind strict` document".into(),
        });
    }
    let mut parts = Vec::with_capacity(doc.parts.len());
    for part in &doc.parts {
        let (ineqs, eqs) = parse_part_polys(part, &doc.variable)?;
        parts.push(ElementarySet::new(ineqs, eqs));
    }
    Ok(SetUnion::new(parts))
}

/// Interprets a closed-kind document as a closed union.
pub fn document_closed_union(doc: &SetDocument) -> Result<ClosedSetUnion, DocError> {
    if doc.kind != DocKind::Closed {
        return Err(DocError {
            line: 2,
            message: "expected a `kind closed` document".into(),
        });
    }
    let mut parts = Vec::with_capacity(doc.parts.len());
    for part in &doc.parts {
        let (ineqs, eqs) = parse_part_polys(part, &doc.variable)?;
        parts.push(ClosedElementarySet { ineqs, eqs });
    }
    Ok(ClosedSetUnion { parts })
}

/// Canonical document for a strict union.
pub fn document_from_strict(u: &SetUnion, variable: &str) -> SetDocument {
    SetDocument {
        variable: variable.to_string(),
        kind: DocKind::Strict,
        parts: u
            .parts
            .iter()
            .map(|p| DocPart {
                ineqs: p.ineqs.iter().map(|q| q.to_string()).collect(),
                eqs: p.eqs.iter().map(|q| q.to_string()).collect(),
            })
            .collect(),
    }
}

/// Canonical document for a closed union.
pub fn document_from_closed(u: &ClosedSetUnion, variable: &str) -> SetDocument {
    SetDocument {
        variable: variable.to_string(),
        kind: DocKind::Closed,
        parts: u
            .parts
            .iter()
            .map(|p| DocPart {
                ineqs: p.ineqs.iter().map(|q| q.to_string()).collect(),
                eqs: p.eqs.iter().map(|q| q.to_string()).collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn parse_poly_examples() {
        // t^2 * (t - 1) = t^3 - t^2
        assert_eq!(
            parse_poly("t^2*(t-1)", "t").unwrap(),
            UPoly::from_ints(&[0, 0, -1, 1])
        );
        assert_eq!(
            parse_poly("-1/2*t + 3", "t").unwrap(),
            UPoly::new(vec![rat(3), ratio(-1, 2)])
        );
        assert_eq!(parse_poly("t^0", "t").unwrap(), UPoly::one());
        assert_eq!(parse_poly("(t+1)*(t-1)", "t").unwrap(), UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn parse_poly_errors() {
        let e = parse_poly("1.5*t", "t").unwrap_err();
        assert!(e.message.contains("decimal"));
        assert_eq!(e.column, 2);

        let e = parse_poly("x + 1", "t").unwrap_err();
        assert!(e.message.contains("unknown identifier `x`"));
        assert_eq!(e.column, 1);

        let e = parse_poly("t^-1", "t").unwrap_err();
        assert!(e.message.contains("nonnegative"));

        assert!(parse_poly("t^(2)", "t").is_err());
        assert!(parse_poly("3*-2", "t").is_err());
        assert!(parse_poly("t t", "t").is_err());
        assert!(parse_poly("", "t").is_err());
        // unary minus after '(' is fine
        assert_eq!(parse_poly("(-t)", "t").unwrap(), UPoly::var().neg());
    }

    #[test]
    fn document_round_trip() {
        let src = "var t\nkind strict\nset\nineq t^2*(t-1)\nend\n";
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.variable, "t");
        assert_eq!(doc.kind, DocKind::Strict);
        assert_eq!(doc.parts.len(), 1);
        assert_eq!(doc.parts[0].ineqs, vec!["t^2*(t-1)".to_string()]);
        assert_eq!(render_document(&doc), src);
        // render . parse is idempotent
        assert_eq!(parse_document(&render_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn document_empty_union_and_two_parts() {
        let doc = parse_document("var t\nkind strict\n").unwrap();
        assert!(doc.parts.is_empty());
        assert!(document_strict_union(&doc).unwrap().parts.is_empty());

        let src = "var t\nkind strict\nset\nineq -t*(t-1)\nend\nset\nineq -t*(t+1)\nend\n";
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.parts.len(), 2);
        let u = document_strict_union(&doc).unwrap();
        assert_eq!(u.parts.len(), 2);
        assert_eq!(u.parts[0].ineqs[0], UPoly::from_ints(&[0, 1, -1]));
    }

    #[test]
    fn document_errors_carry_line_numbers() {
        let e = parse_document("var t\nkind strict\nset\nineq 1.5\nend\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_document("var t\nkind sharp\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_document("var t\nkind strict\nineq t\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_document("var t\nkind strict\nset\nineq t\n").unwrap_err();
        assert!(e.message.contains("unterminated"));
        let e = parse_document("kind strict\n").unwrap_err();
        assert!(e.message.contains("`kind` before `var`"));
    }

    #[test]
    fn canonical_rendering_parses_back() {
        let polys = [
            UPoly::from_ints(&[0, 0, -1, 1]),
            UPoly::new(vec![ratio(1, 2), rat(0), rat(-3)]),
            UPoly::var().neg(),
            UPoly::zero(),
            UPoly::from_ints(&[7]),
        ];
        for p in &polys {
            assert_eq!(&parse_poly(&p.to_string(), "t").unwrap(), p);
        }
    }
}
