//! Polynomial text format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | integer '/' integer | identifier | '(' expr ')'
//! ```
//!
//! A `/` is only accepted inside a rational literal such as `3/4`.
//! Corpus files hold a `ring x,y,z;` header followed by `name = expr;`
//! statements; `#` starts a comment.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::{Ring, RingContext};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    end: usize,
}

/// 1-based line and column of a byte offset.
fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.chars().count(), |i| before[i + 1..].chars().count()) + 1;
    (line, col)
}

fn parse_err(src: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = line_col(src, offset);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, start: usize, end: usize) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: start,
            end,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.end && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> &'a str {
        let s = self.pos;
        while self.pos < self.end && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[s..self.pos]
    }

    /// Next token together with its starting offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.end {
            return Ok((Tok::End, at));
        }
        let c = self.bytes[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let num = self.digits();
                if self.pos < self.end && self.bytes[self.pos] == b'/' {
                    self.pos += 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(parse_err(self.src, self.pos, "expected a denominator after `/`"));
                    }
                    let r: Rational = format!("{num}/{den}")
                        .parse()
                        .map_err(|e: String| parse_err(self.src, at, e))?;
                    return Ok((Tok::Num(r), at));
                }
                return Ok((Tok::Num(num.parse().expect("digits")), at));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let s = self.pos;
                while self.pos < self.end
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                return Ok((Tok::Ident(self.src[s..self.pos].to_string()), at));
            }
            b'/' => return Err(parse_err(self.src, at, "`/` is only allowed inside rational literals")),
            _ => {
                let ch = self.src[self.pos..].chars().next().unwrap();
                return Err(parse_err(self.src, at, format!("unexpected character `{ch}`")));
            }
        };
        self.pos += 1;
        Ok((tok, at))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    ring: &'a Ring,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, start: usize, end: usize, ring: &'a Ring) -> Result<Self> {
        let mut lexer = Lexer::new(src, start, end);
        let (tok, at) = lexer.next()?;
        Ok(Parser { lexer, ring, tok, at })
    }

    fn bump(&mut self) -> Result<()> {
        let (tok, at) = self.lexer.next()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.lexer.src, self.at, msg)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.bump()?;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.tok {
            Tok::Minus => {
                self.bump()?;
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.bump()?;
            let e = match &self.tok {
                Tok::Num(r) if r.is_integer() => r
                    .to_i64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| self.err("exponent too large"))?,
                _ => return Err(self.err("expected a non-negative integer exponent")),
            };
            self.bump()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.tok.clone() {
            Tok::Num(r) => {
                self.bump()?;
                Ok(Polynomial::constant(self.ring, r))
            }
            Tok::Ident(name) => {
                let i = self
                    .ring
                    .index_of(&name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                self.bump()?;
                Polynomial::var(self.ring, i)
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.err("expected `)`"));
                }
                self.bump()?;
                Ok(e)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            t => Err(self.err(format!("unexpected token {t:?}"))),
        }
    }
}

fn parse_span(src: &str, start: usize, end: usize, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser::new(src, start, end, ring)?;
    let f = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

/// Parse a polynomial in the variables of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    parse_span(text, 0, text.len(), ring)
}

/// Identifiers in order of first appearance; used to infer a ring for
/// inline expressions.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut lexer = Lexer::new(text, 0, text.len());
    while let Ok((tok, _)) = lexer.next() {
        match tok {
            Tok::End => break,
            Tok::Ident(s) if !out.contains(&s) => out.push(s),
            _ => {}
        }
    }
    out
}

fn format_monomial(m: &Monomial, ring: &RingContext) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    parts.join("*")
}

/// Render with terms in decreasing degree reverse lexicographic order.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms_by(&MonomialOrder::DegRevLex).into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&format_monomial(m, f.ring()));
        }
    }
    out
}

/// A parsed corpus file.
#[derive(Clone, Debug)]
pub struct Document {
    pub ring: Ring,
    /// Named polynomials in file order.
    pub polynomials: Vec<(String, Polynomial)>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.polynomials.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// Parse `ring x,y,z;` followed by `name = expr;` statements.
pub fn parse_document(src: &str) -> Result<Document> {
    // Blank out comments, keeping offsets intact for error positions.
    let mut clean = String::with_capacity(src.len());
    for line in src.split_inclusive('\n') {
        match line.find('#') {
            Some(i) => {
                clean.push_str(&line[..i]);
                clean.extend(line[i..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
            }
            None => clean.push_str(line),
        }
    }
    let mut ring: Option<Ring> = None;
    let mut polys: Vec<(String, Polynomial)> = Vec::new();
    let mut start = 0;
    while start < clean.len() {
        let end = clean[start..].find(';').map_or(clean.len(), |i| start + i);
        let stmt = &clean[start..end];
        let lead = stmt.len() - stmt.trim_start().len();
        let s0 = start + lead;
        let body = stmt.trim();
        if !body.is_empty() {
            if let Some(rest) = body.strip_prefix("ring").filter(|r| r.starts_with(|c: char| c.is_whitespace())) {
                if ring.is_some() {
                    return Err(parse_err(&clean, s0, "ring declared twice"));
                }
                let names: Vec<&str> = rest.split(',').map(str::trim).collect();
                ring = Some(RingContext::new(names).map_err(|e| parse_err(&clean, s0, e.to_string()))?);
            } else {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| parse_err(&clean, s0, "expected `ring ...;` before polynomials"))?;
                let eq = stmt
                    .find('=')
                    .ok_or_else(|| parse_err(&clean, s0, "expected `name = polynomial`"))?;
                let name = stmt[..eq].trim();
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(parse_err(&clean, s0, format!("bad polynomial name `{name}`")));
                }
                if polys.iter().any(|(n, _)| n == name) {
                    return Err(parse_err(&clean, s0, format!("`{name}` defined twice")));
                }
                let f = parse_span(&clean, start + eq + 1, end, r)?;
                polys.push((name.to_string(), f));
            }
        }
        start = end + 1;
    }
    let ring = ring.ok_or_else(|| parse_err(&clean, clean.len(), "missing `ring` declaration"))?;
    Ok(Document {
        ring,
        polynomials: polys,
    })
}

/// Render a document back to text.
pub fn format_document(doc: &Document) -> String {
    let mut s = format!("ring {};\n", doc.ring.names().join(","));
    for (n, p) in &doc.polynomials {
        s.push_str(&format!("{n} = {p};\n"));
    }
    s
}

/// Coefficients keyed by printed monomial, for reports.
pub fn coefficient_map(f: &Polynomial) -> BTreeMap<String, String> {
    f.terms()
        .map(|(m, c)| (format_monomial(m, f.ring()), c.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        RingContext::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn parses_normal_forms() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("y^2*x - x^3", &r).unwrap();
        assert_eq!(f.to_string(), "-x^3 + x*y^2");
        assert_eq!(parse_polynomial("2x y", &r).unwrap(), parse_polynomial("2*x*y", &r).unwrap());
        assert_eq!(parse_polynomial("-3/6*x^2", &r).unwrap().to_string(), "-1/2*x^2");
    }

    #[test]
    fn sextic_parses() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_polynomial("(x^2-y^2)^3 - x^2*y^2*z^2", &r).unwrap();
        assert_eq!(f.num_terms(), 5);
        assert_eq!(f.total_degree(), Some(6));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let r = ring(&["x"]);
        match parse_polynomial("x^", &r) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("x/2", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x+1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("q+1", &r), Err(Error::UnknownVariable(v)) if v == "q"));
    }

    #[test]
    fn documents() {
        let src = "# demo\nring x,y,z;\nf = (x^2-y^2)^3\n  - x^2*y^2*z^2;\ng = x*y;\n";
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.ring.nvars(), 3);
        assert_eq!(doc.polynomials.len(), 2);
        let again = parse_document(&format_document(&doc)).unwrap();
        assert_eq!(again.get("f"), doc.get("f"));
        match parse_document("ring x;\nf = x^;\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_document("f = x;").is_err());
    }

    #[test]
    fn identifiers_in_order() {
        assert_eq!(identifiers("x^4 - x*y*w^2 + z"), vec!["x", "y", "w", "z"]);
    }
}
