//! Text syntax for scalars and algebra elements.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := power (('*'|'/')? power)*
//! power  := atom ('^' ('+'|'-')? INT)?
//! atom   := INT | 'z' | 'q'INT | 'x'INT | 'X' | '(' expr ')'
//! ```
//!
//! `z` is the root of unity, `q1..qt` the formal parameters, `x1..xn` the
//! generators. `X` is accepted only when the caller binds it to an
//! exponent vector (the class generator of a skew-Laurent presentation).
//! Juxtaposition multiplies; whitespace is ignored.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::element::{Exponent, TorusElement};
use super::spec::PairingSpec;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarField};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Zeta,
    Q(usize),
    Gen(usize),
    Class,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| -> (usize, String) {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        (j, chars[start..j].iter().collect())
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let (j, s) = digits(i);
                i = j;
                Tok::Int(s.parse().unwrap())
            }
            'x' | 'q' => {
                let (j, s) = digits(i + 1);
                if s.is_empty() {
                    return Err(syntax(pos, format!("expected an index after `{c}`")));
                }
                i = j;
                let k: usize = s
                    .parse()
                    .map_err(|_| syntax(pos, "generator index too large"))?;
                if c == 'x' {
                    Tok::Gen(k)
                } else {
                    Tok::Q(k)
                }
            }
            'z' => {
                i += 1;
                Tok::Zeta
            }
            'X' => {
                i += 1;
                Tok::Class
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                i += 1;
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            '\u{2212}' => {
                i += 1;
                Tok::Minus
            }
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

/// Evaluation context: where generators live and what `X` means.
struct Ctx<'a> {
    spec: &'a Arc<PairingSpec>,
    class: Option<&'a [i64]>,
    allow_generators: bool,
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: Ctx<'a>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<TorusElement> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                neg = true;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Zeta | Tok::Q(_) | Tok::Gen(_) | Tok::Class | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<TorusElement> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.here();
                    let rhs = self.power()?;
                    if rhs.is_zero() {
                        return Err(syntax(at, "division by zero"));
                    }
                    acc = acc.mul(&rhs.inverse()?)?;
                }
                _ if self.starts_atom() => {
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<TorusElement> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.here();
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let k = match self.bump() {
            Some(Tok::Int(k)) => i64::try_from(k).map_err(|_| syntax(at, "exponent too large"))?,
            _ => return Err(syntax(at, "expected an integer exponent")),
        };
        base.pow(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<TorusElement> {
        let at = self.here();
        let spec = self.ctx.spec;
        let field = spec.field();
        match self.bump() {
            Some(Tok::Int(k)) => Ok(TorusElement::constant(
                spec,
                Scalar::from_rational(field, BigRational::from_integer(k)),
            )),
            Some(Tok::Zeta) => Ok(TorusElement::constant(spec, Scalar::zeta(field))),
            Some(Tok::Q(k)) => {
                if k == 0 || k > field.generic_count() {
                    return Err(Error::UnknownGenerator(format!("q{k}")));
                }
                Ok(TorusElement::constant(spec, Scalar::q(field, k)))
            }
            Some(Tok::Gen(k)) => {
                if !self.ctx.allow_generators || k == 0 || k > spec.rank() {
                    return Err(Error::UnknownGenerator(format!("x{k}")));
                }
                Ok(TorusElement::generator(spec, k))
            }
            Some(Tok::Class) => match self.ctx.class {
                Some(a) => Ok(TorusElement::basis(spec, a.to_vec())),
                None => Err(Error::UnknownGenerator("X".into())),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(self.here().min(self.end), "expected `)`")),
                }
            }
            Some(t) => Err(syntax(at, format!("unexpected token {t:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

fn run(text: &str, ctx: Ctx<'_>) -> Result<TorusElement> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        ctx,
    };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.here(), "trailing input"));
    }
    Ok(out)
}

/// Parses an algebra element.
pub fn parse_element(spec: &Arc<PairingSpec>, text: &str) -> Result<TorusElement> {
    run(
        text,
        Ctx {
            spec,
            class: None,
            allow_generators: true,
        },
    )
}

/// Parses an element in which `X` stands for `x̄^{class}`.
pub fn parse_element_with_class(
    spec: &Arc<PairingSpec>,
    class: &[i64],
    text: &str,
) -> Result<TorusElement> {
    run(
        text,
        Ctx {
            spec,
            class: Some(class),
            allow_generators: true,
        },
    )
}

/// Parses a scalar such as `(2/3)*z^2*q1^-1`.
pub fn parse_scalar(field: &Arc<ScalarField>, text: &str) -> Result<Scalar> {
    let spec =
        PairingSpec::with_field(field.clone(), 0, &[], &vec![vec![]; field.generic_count()])?;
    let e = run(
        text,
        Ctx {
            spec: &spec,
            class: None,
            allow_generators: false,
        },
    )?;
    Ok(e.as_constant().expect("rank-zero elements are constants"))
}

fn monomial_factors(a: &Exponent) -> Vec<String> {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect()
}

/// Canonical text form; `parse_element(format_element(f)) == f`.
pub fn format_element(f: &TorusElement) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (a, c)) in f.terms().iter().enumerate() {
        let (neg, factor) = c.signed_factor();
        let mut parts = Vec::new();
        if !factor.is_empty() {
            parts.push(factor);
        }
        parts.extend(monomial_factors(a));
        let body = if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Exponent vector as a JSON integer array.
pub fn format_exponent(a: &[i64]) -> String {
    let inner: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}
