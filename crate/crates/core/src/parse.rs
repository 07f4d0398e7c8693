//! Polynomial text format.
//!
//! Grammar: signed integers or `num/den` rationals, variables by table name
//! or single-letter alias, operators `+ - * ^`, optional parentheses.
//! Implicit multiplication is rejected; whitespace is insignificant.

use num_bigint::BigInt;
use std::sync::Arc;
use thiserror::Error;

use crate::coeff::CoefficientDomain;
use crate::poly::Polynomial;
use crate::vars::VariableTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {name:?} at byte {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("coefficient {0} is not valid in the target field")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((start, Tok::Num(text.parse().unwrap()))));
            }
            c if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((start, Tok::Ident(text.to_string()))));
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character {:?}", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    domain: CoefficientDomain,
    table: Arc<VariableTable>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        // Leading sign.
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    negate = !negate;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same ring");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same ring");
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f).expect("same ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(e)) => {
                    let e: u32 = e.try_into().map_err(|_| ParseError::Syntax {
                        pos,
                        msg: "exponent out of range".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(ParseError::Syntax { pos, msg: "expected integer exponent".into() })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                // Rational literal `num/den`.
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Num(d)) => {
                            let c = self
                                .domain
                                .from_ratio(n.clone(), d.clone())
                                .ok_or_else(|| ParseError::BadCoefficient(format!("{n}/{d}")))?;
                            Ok(Polynomial::constant(c, self.domain.clone(), self.table.clone()))
                        }
                        _ => Err(ParseError::Syntax { pos: dpos, msg: "expected denominator".into() }),
                    }
                } else {
                    let c = self
                        .domain
                        .from_ratio(n.clone(), BigInt::from(1))
                        .ok_or_else(|| ParseError::BadCoefficient(n.to_string()))?;
                    Ok(Polynomial::constant(c, self.domain.clone(), self.table.clone()))
                }
            }
            Some(Tok::Ident(name)) => match self.table.index_of(&name) {
                Some(idx) => Ok(Polynomial::variable(idx, self.domain.clone(), self.table.clone())),
                None => Err(ParseError::UnknownVariable { pos, name }),
            },
            Some(Tok::Minus) => {
                // Unary minus inside a product or parentheses.
                Ok(self.factor()?.neg())
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax { pos, msg: "unclosed parenthesis".into() }),
                }
            }
            other => Err(ParseError::Syntax {
                pos,
                msg: format!("expected a number, variable or parenthesis, found {other:?}"),
            }),
        }
    }
}

pub fn parse_poly(
    text: &str,
    domain: &CoefficientDomain,
    table: &Arc<VariableTable>,
) -> Result<Polynomial, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next()? {
        toks.push(t);
    }
    if toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty input".into() });
    }
    let mut parser = Parser { toks, idx: 0, domain: domain.clone(), table: table.clone() };
    let poly = parser.expr()?;
    if parser.idx != parser.toks.len() {
        return Err(ParseError::Syntax {
            pos: parser.pos(),
            msg: "trailing tokens after expression".into(),
        });
    }
    Ok(poly)
}

/// Canonical text form: terms in descending lex order, `*` between factors,
/// `^` for powers, unit coefficients elided. Round-trips through
/// `parse_poly` bit-exactly.
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let table = f.table();
    let mut out = String::new();
    for (i, (c, m)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = if neg {
            f.domain().neg(c)
        } else {
            c.clone()
        };
        let mut factors: Vec<String> = Vec::new();
        if !f.domain().is_one(&mag) || m.is_one() {
            factors.push(mag.to_string());
        }
        for (idx, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(table.name(idx).to_string());
            } else {
                factors.push(format!("{}^{}", table.name(idx), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
