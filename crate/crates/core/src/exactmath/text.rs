//! Polynomial text grammar: `+ - * / ^`, parentheses, integer and rational
//! constants, named variables and the extension generator `t`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::field::{FieldDesc, FieldElem, Q};
use super::poly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Name of the quadratic extension generator in polynomial text.
pub const GENERATOR: &str = "t";

pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

pub fn format_poly(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let mono = format_monomial(m, names);
        let first = out.is_empty();
        match c.as_rational() {
            Some(r) => {
                let neg = r.is_negative();
                let mag = r.abs();
                if neg {
                    out.push('-');
                } else if !first {
                    out.push('+');
                }
                if mono.is_empty() {
                    out.push_str(&mag.to_string());
                } else if mag.is_one() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&format!("{mag}*{mono}"));
                }
            }
            None => {
                if !first {
                    out.push('+');
                }
                if mono.is_empty() {
                    out.push_str(&format!("({c})"));
                } else {
                    out.push_str(&format!("({c})*{mono}"));
                }
            }
        }
    }
    out
}

/// Formats `c0 + c1 v + c2 v^2 + ...` (coefficients lowest first).
pub fn format_univariate(coeffs: &[Q], var: &str) -> String {
    let p = MultiPoly::from_univariate(1, 0, &coeffs.iter().cloned().map(FieldElem::rational).collect::<Vec<_>>());
    format_poly(&p, &[var.to_string()])
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[start..i].iter().collect();
            out.push(Tok::Num(txt.parse().map_err(|_| Error::Parse(format!("bad number {txt}")))?));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if ch == '*' && chars.get(i + 1) == Some(&'*') {
            out.push(Tok::Op('^'));
            i += 2;
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    field: &'a FieldDesc,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(op @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                let c = rhs
                    .constant_value()
                    .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                let inv = c.inv().map_err(|_| Error::Parse("division by zero".into()))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => Ok(MultiPoly::constant(self.nvars(), FieldElem::rational(Q::from_integer(n)))),
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.names.iter().position(|v| *v == name) {
                    Ok(MultiPoly::var(self.nvars(), i))
                } else if name == GENERATOR {
                    let t = self.field.generator().map_err(|_| {
                        Error::Parse("generator t used but no minimal polynomial given".into())
                    })?;
                    Ok(MultiPoly::constant(self.nvars(), t))
                } else {
                    Err(Error::Parse(format!("unknown variable {name}")))
                }
            }
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a polynomial in the given variables over `field`.
pub fn parse_poly(s: &str, names: &[String], field: &FieldDesc) -> Result<MultiPoly> {
    if names.iter().any(|n| n == GENERATOR) {
        return Err(Error::Parse(format!("{GENERATOR} is reserved for the field generator")));
    }
    parse_in(s, names, field)
}

fn parse_in(s: &str, names: &[String], field: &FieldDesc) -> Result<MultiPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, names, field };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a field element, e.g. `t-1` or `-3/2`.
pub fn parse_elem(s: &str, field: &FieldDesc) -> Result<FieldElem> {
    let p = parse_poly(s, &[], field)?;
    p.constant_value().ok_or_else(|| Error::Parse(format!("not a constant: {s}")))
}

/// Parses a monic quadratic minimal polynomial in `t`, e.g. `t^2-t+1`.
pub fn parse_minpoly(s: &str) -> Result<super::QuadField> {
    let p = parse_in(s, &[GENERATOR.to_string()], &FieldDesc::Rationals)?;
    let coeffs = p.to_univariate(0).ok_or_else(|| Error::Parse("bad minimal polynomial".into()))?;
    if coeffs.len() != 3 || !coeffs[2].is_one() {
        return Err(Error::Parse(format!("minimal polynomial must be monic quadratic: {s}")));
    }
    super::QuadField::new(coeffs[1].a0().clone(), coeffs[0].a0().clone())
}
