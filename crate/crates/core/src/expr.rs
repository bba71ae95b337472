//! Parser and printer for noncommutative expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" nat)?
//! atom   := scalar | symbol | "(" expr ")"
//! ```
//!
//! Scalars are `n` or `n/d`. Symbols are `x`, `y`, `z` for the super Jordan
//! plane and `X`, `Y` for the abstract Jordan plane. Multiplication must be
//! written with `*`; juxtaposition is a syntax error.

use std::fmt;

use thiserror::Error;

use crate::balgebra::Element;
use crate::field::{FieldElement, FieldSpec};
use crate::jordan::AbstractJordan;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(char),
    #[error("symbol '{0}' is not valid for this target")]
    WrongTarget(char),
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentOverflow,
    #[error("bad scalar {0:?}: {1}")]
    BadScalar(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// The super Jordan plane, symbols `x`, `y`, `z`.
    B,
    /// The abstract Jordan plane, symbols `X`, `Y`.
    Jordan,
}

/// Syntax tree. Products keep their factor order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    Product(Vec<ExprAst>),
    Power(Box<ExprAst>, u32),
    Neg(Box<ExprAst>),
    Scalar(String),
    Symbol(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    B(Element),
    Jordan(AbstractJordan),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Sym(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number {s}"),
            Tok::Sym(c) => write!(f, "symbol '{c}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        let tok = match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                out.push((Tok::Num(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => Tok::Sym(c),
            _ => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::Unexpected(format!("character '{c}'")),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        ParseError {
            position: self.offset(),
            kind: ParseErrorKind::Unexpected(self.peek().to_string()),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(ExprAst::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ExprAst::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ExprAst::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.factor()?)));
        }
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Num(s) if !s.contains('/') => {
                let exp = s.parse::<u32>().ok().filter(|e| *e <= MAX_EXPONENT).ok_or(ParseError {
                    position: at,
                    kind: ParseErrorKind::ExponentOverflow,
                })?;
                Ok(ExprAst::Power(Box::new(atom), exp))
            }
            other => Err(ParseError {
                position: at,
                kind: ParseErrorKind::Unexpected(other.to_string()),
            }),
        }
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().clone() {
            Tok::Num(s) => {
                self.bump();
                Ok(ExprAst::Scalar(s))
            }
            Tok::Sym(c) => {
                let at = self.offset();
                if !matches!(c, 'x' | 'y' | 'z' | 'X' | 'Y') {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::UnknownSymbol(c),
                    });
                }
                self.bump();
                Ok(ExprAst::Symbol(c))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parse to a syntax tree without evaluating.
pub fn parse_ast(text: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(ast)
}

trait Algebra: Sized + Clone {
    fn scalar(c: FieldElement) -> Self;
    fn generator(spec: FieldSpec, sym: char) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;
}

impl Algebra for Element {
    fn scalar(c: FieldElement) -> Self {
        Element::scalar(c)
    }
    fn generator(spec: FieldSpec, sym: char) -> Option<Self> {
        match sym {
            'x' => Some(Element::x(spec)),
            'y' => Some(Element::y(spec)),
            'z' => Some(Element::z(spec)),
            _ => None,
        }
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, e: u32) -> Self {
        Element::pow(self, e)
    }
}

impl Algebra for AbstractJordan {
    fn scalar(c: FieldElement) -> Self {
        AbstractJordan::scalar(c)
    }
    fn generator(spec: FieldSpec, sym: char) -> Option<Self> {
        match sym {
            'X' => Some(AbstractJordan::gen_x(spec)),
            'Y' => Some(AbstractJordan::gen_y(spec)),
            _ => None,
        }
    }
    fn add(&self, other: &Self) -> Self {
        AbstractJordan::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        AbstractJordan::mul(self, other)
    }
    fn neg(&self) -> Self {
        AbstractJordan::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        AbstractJordan::pow(self, e)
    }
}

fn eval<A: Algebra>(ast: &ExprAst, spec: FieldSpec) -> Result<A, String> {
    Ok(match ast {
        ExprAst::Sum(ts) => {
            let mut acc = eval::<A>(&ts[0], spec)?;
            for t in &ts[1..] {
                acc = acc.add(&eval(t, spec)?);
            }
            acc
        }
        ExprAst::Product(fs) => {
            let mut acc = eval::<A>(&fs[0], spec)?;
            for f in &fs[1..] {
                acc = acc.mul(&eval(f, spec)?);
            }
            acc
        }
        ExprAst::Power(base, e) => eval::<A>(base, spec)?.pow(*e),
        ExprAst::Neg(inner) => eval::<A>(inner, spec)?.neg(),
        ExprAst::Scalar(s) => A::scalar(spec.parse_scalar(s).map_err(|e| format!("{s}\u{0}{e}"))?),
        ExprAst::Symbol(c) => A::generator(spec, *c).ok_or_else(|| format!("\u{1}{c}"))?,
    })
}

fn symbols(ast: &ExprAst, out: &mut Vec<char>) {
    match ast {
        ExprAst::Sum(v) | ExprAst::Product(v) => v.iter().for_each(|a| symbols(a, out)),
        ExprAst::Power(b, _) | ExprAst::Neg(b) => symbols(b, out),
        ExprAst::Scalar(_) => {}
        ExprAst::Symbol(c) => out.push(*c),
    }
}

/// Parse and evaluate `text` into normal form for the chosen target.
pub fn parse(text: &str, spec: FieldSpec, target: Target) -> Result<Parsed, ParseError> {
    let ast = parse_ast(text)?;
    let mut syms = Vec::new();
    symbols(&ast, &mut syms);
    let allowed: &[char] = match target {
        Target::B => &['x', 'y', 'z'],
        Target::Jordan => &['X', 'Y'],
    };
    if let Some(bad) = syms.iter().find(|c| !allowed.contains(c)) {
        let position = text.find(*bad).unwrap_or(0);
        return Err(ParseError {
            position,
            kind: ParseErrorKind::WrongTarget(*bad),
        });
    }
    let result = match target {
        Target::B => eval::<Element>(&ast, spec).map(Parsed::B),
        Target::Jordan => eval::<AbstractJordan>(&ast, spec).map(Parsed::Jordan),
    };
    result.map_err(|msg| {
        let (lit, why) = msg.split_once('\u{0}').unwrap_or((&msg, ""));
        ParseError {
            position: text.find(lit).unwrap_or(0),
            kind: ParseErrorKind::BadScalar(lit.to_string(), why.to_string()),
        }
    })
}

/// Parse an element of the super Jordan plane.
pub fn parse_element(text: &str, spec: FieldSpec) -> Result<Element, ParseError> {
    match parse(text, spec, Target::B)? {
        Parsed::B(e) => Ok(e),
        Parsed::Jordan(_) => unreachable!(),
    }
}

/// Parse an element of the abstract Jordan plane (symbols `X`, `Y`).
pub fn parse_jordan(text: &str, spec: FieldSpec) -> Result<AbstractJordan, ParseError> {
    match parse(text, spec, Target::Jordan)? {
        Parsed::Jordan(j) => Ok(j),
        Parsed::B(_) => unreachable!(),
    }
}

/// Canonical text form; `parse(print(u)) == u`.
pub fn print(u: &Element) -> String {
    u.to_string()
}

/// Join `(coefficient, monomial text)` pairs into `a + b - c` form.
/// An empty monomial text stands for the unit.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (FieldElement, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        let mag = if negative { -&c } else { c };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&format_term(&mag, &mono));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_term(mag: &FieldElement, mono: &str) -> String {
    if mono.is_empty() {
        return mag.to_string();
    }
    if mag.is_one() {
        return mono.to_string();
    }
    if mag.is_integral() {
        format!("{mag}*{mono}")
    } else {
        format!("({mag})*{mono}")
    }
}
