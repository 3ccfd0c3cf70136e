//! Text form of multivectors.
//!
//! ```text
//! expr    := [sign] product { ('+' | '-') product }
//! product := factor { ['*' | '^'] factor }
//! factor  := number | blade | '(' expr ')'
//! blade   := 'e' digits | 'e{' digits { ',' digits } '}'
//! ```
//!
//! `*` (or juxtaposition, as in `2e12`) is the geometric product and `^` the
//! outer product. In the short blade form every digit is one index, so `e13`
//! is `e1 ^ e3`; the braced form is needed for indices above 9. Indices are
//! 1-based and may appear in any order; `e21` parses as `-e12`. Numbers are
//! plain decimals without exponents, so `2e12` is unambiguous.

use std::fmt;

use thiserror::Error;

use crate::algebra::{blade, Multivector, Signature};

const MAX_NESTING: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("malformed number")]
    BadNumber,
    #[error("blade needs at least one index")]
    EmptyBlade,
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("basis index {0} repeated within one blade")]
    RepeatedIndex(usize),
    #[error("parentheses nested too deeply")]
    TooDeep,
}

/// The merged `(coefficient, blade mask)` terms of a parsed expression, in
/// ascending mask order with zero terms dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedExpression {
    pub terms: Vec<(f64, u32)>,
    pub sig: Signature,
}

impl ParsedExpression {
    pub fn to_multivector(&self) -> Multivector {
        let mut mv = Multivector::zero(self.sig);
        for &(c, mask) in &self.terms {
            mv.set_coeff(mask, mv.coeff(mask) + c);
        }
        mv
    }
}

pub fn parse_expression(text: &str, sig: Signature) -> Result<ParsedExpression, ParseError> {
    let mv = parse(text, sig)?;
    let terms = mv.terms().map(|(m, c)| (c, m)).collect();
    Ok(ParsedExpression { terms, sig })
}

/// Parses a multivector expression in the given signature.
pub fn parse(text: &str, sig: Signature) -> Result<Multivector, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
        depth: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.unexpected());
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: Signature,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some(_) => {
                // report the whole (possibly multi-byte) character
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or(char::REPLACEMENT_CHARACTER);
                self.err(ParseErrorKind::UnexpectedChar(ch))
            }
        }
    }

    fn expr(&mut self) -> Result<Multivector, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.product()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Multivector, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'^') => {
                    self.pos += 1;
                    acc = acc.wedge(&self.factor()?);
                }
                Some(c) if starts_factor(c) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Multivector, ParseError> {
        match self.peek() {
            Some(b'(') => {
                if self.depth >= MAX_NESTING {
                    return Err(self.err(ParseErrorKind::TooDeep));
                }
                self.pos += 1;
                self.depth += 1;
                let inner = self.expr()?;
                self.depth -= 1;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'e') => self.blade(),
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            _ => Err(self.unexpected()),
        }
    }

    fn number(&mut self) -> Result<Multivector, ParseError> {
        let start = self.pos;
        let mut digits = 0;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
            digits += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::BadNumber,
            });
        }
        // the slice is ASCII digits and at most one dot
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let value: f64 = text.parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::BadNumber,
        })?;
        if !value.is_finite() {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::BadNumber,
            });
        }
        Ok(Multivector::scalar(self.sig, value))
    }

    fn blade(&mut self) -> Result<Multivector, ParseError> {
        let start = self.pos;
        self.pos += 1; // 'e'
        let mut indices: Vec<(usize, usize)> = Vec::new(); // (index, offset)
        if self.src.get(self.pos) == Some(&b'{') {
            self.pos += 1;
            loop {
                self.skip_ws();
                let at = self.pos;
                let mut value: usize = 0;
                let mut seen = false;
                while let Some(&c) = self.src.get(self.pos) {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    seen = true;
                    value = value.saturating_mul(10).saturating_add((c - b'0') as usize);
                    self.pos += 1;
                }
                if !seen {
                    return Err(self.unexpected());
                }
                indices.push((value, at));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b'}') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.unexpected()),
                }
            }
        } else {
            while let Some(&c) = self.src.get(self.pos) {
                if !c.is_ascii_digit() {
                    break;
                }
                indices.push(((c - b'0') as usize, self.pos));
                self.pos += 1;
            }
        }
        if indices.is_empty() {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::EmptyBlade,
            });
        }
        let dim = self.sig.dim();
        let mut mask = 0u32;
        let mut sign = 1.0;
        for &(index, at) in &indices {
            if index == 0 || index > dim {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::IndexOutOfRange { index, dim },
                });
            }
            let bit = 1u32 << (index - 1);
            if mask & bit != 0 {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::RepeatedIndex(index),
                });
            }
            sign *= blade::reorder_sign(mask, bit);
            mask |= bit;
        }
        Ok(Multivector::blade(self.sig, mask, sign))
    }
}

fn starts_factor(c: u8) -> bool {
    c == b'(' || c == b'e' || c == b'.' || c.is_ascii_digit()
}

fn write_blade(out: &mut String, mask: u32) {
    let idx = blade::indices(mask);
    out.push('e');
    if idx.iter().all(|&i| i <= 9) {
        for i in idx {
            out.push(char::from(b'0' + i as u8));
        }
    } else {
        out.push('{');
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        out.push_str(&parts.join(","));
        out.push('}');
    }
}

/// Canonical text: terms in ascending mask order, zero coefficients omitted,
/// `0` for the zero multivector. `parse(serialize(a)) == a` for finite `a`.
pub fn serialize(a: &Multivector) -> String {
    let mut out = String::new();
    for (mask, c) in a.terms() {
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        let mag = c.abs();
        if mask == 0 {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1.0 {
                out.push_str(&mag.to_string());
            }
            write_blade(&mut out, mask);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}
