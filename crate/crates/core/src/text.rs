//! Canonical printing and parsing of polynomials and rational functions.
//!
//! Grammar:
//! expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
//! factor := atom ('^' int)?; atom := integer | name | '(' expr ')' | '-' factor.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::{BiPoly, MultiPoly, UniPoly};
use crate::ratfunc::{BiRat, UniRat};

/// Sign and magnitude text of a coefficient.
fn split_sign<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

/// Joins (coefficient, monomial) pairs, highest term first.
fn join_terms<F: Field>(terms: impl Iterator<Item = (F, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (neg, abs) = split_sign(&c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs);
        } else if abs == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&abs);
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

pub fn format_uni<F: Field>(p: &UniPoly<F>, var: &str) -> String {
    join_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), power(var, k as u32))),
    )
}

pub fn format_bi<F: Field>(p: &BiPoly<F>) -> String {
    join_terms(p.grlex_terms().into_iter().map(|((e1, e2), c)| {
        let mono: Vec<String> = [power("x1", e1), power("x2", e2)].into_iter().filter(|s| !s.is_empty()).collect();
        (c, mono.join("*"))
    }))
}

fn needs_parens(s: &str) -> bool {
    s.contains(' ') || s.contains('/') || s.starts_with('-')
}

fn fraction(num: String, den: String) -> String {
    if den == "1" {
        return num;
    }
    let wrap = |s: String| if needs_parens(&s) || s.contains('*') { format!("({s})") } else { s };
    let num = if needs_parens(&num) { format!("({num})") } else { num };
    format!("{num}/{}", wrap(den))
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_uni(self, "x"))
    }
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bi(self))
    }
}

impl<F: Field> UniRat<F> {
    /// Text in the variable `var`.
    pub fn format_in(&self, var: &str) -> String {
        fraction(format_uni(self.num(), var), format_uni(self.den(), var))
    }
}

impl<F: Field> fmt::Display for UniRat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("x"))
    }
}

impl<F: Field> fmt::Display for BiRat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fraction(format_bi(self.num()), format_bi(self.den())))
    }
}

/// Parse tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Num(Rat),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let Ok(k) = digits.parse::<i32>() else {
                self.pos = start;
                return self.err("expected integer exponent");
            };
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(Expr::Num(Rat::from_integer(d.parse().expect("digits"))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Var(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Variable names in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn to_birat(&self) -> Result<BiRat<Rat>> {
        Ok(match self {
            Expr::Num(r) => BiRat::constant(r.clone()),
            Expr::Var(v) => match v.as_str() {
                "x" | "x1" => BiRat::x1(),
                "x2" => BiRat::x2(),
                _ => return Err(Error::Invalid(format!("unknown variable {v}"))),
            },
            Expr::Neg(a) => a.to_birat()?.neg(),
            Expr::Add(a, b) => a.to_birat()?.add(&b.to_birat()?),
            Expr::Sub(a, b) => a.to_birat()?.sub(&b.to_birat()?),
            Expr::Mul(a, b) => a.to_birat()?.mul(&b.to_birat()?),
            Expr::Div(a, b) => a.to_birat()?.div(&b.to_birat()?)?,
            Expr::Pow(a, k) => a.to_birat()?.pow(*k)?,
        })
    }

    /// Univariate reading; the variable may be written x or x1.
    pub fn to_unirat(&self) -> Result<UniRat<Rat>> {
        Ok(match self {
            Expr::Num(r) => UniRat::constant(r.clone()),
            Expr::Var(v) => match v.as_str() {
                "x" | "x1" => UniRat::x(),
                _ => return Err(Error::Invalid(format!("unknown variable {v} in a univariate function"))),
            },
            Expr::Neg(a) => a.to_unirat()?.neg(),
            Expr::Add(a, b) => a.to_unirat()?.add(&b.to_unirat()?),
            Expr::Sub(a, b) => a.to_unirat()?.sub(&b.to_unirat()?),
            Expr::Mul(a, b) => a.to_unirat()?.mul(&b.to_unirat()?),
            Expr::Div(a, b) => a.to_unirat()?.div(&b.to_unirat()?)?,
            Expr::Pow(a, k) => {
                let base = a.to_unirat()?;
                let mut acc = UniRat::constant(Rat::one());
                for _ in 0..k.unsigned_abs() {
                    acc = acc.mul(&base);
                }
                if *k < 0 {
                    UniRat::constant(Rat::one()).div(&acc)?
                } else {
                    acc
                }
            }
        })
    }

    /// Polynomial in the named variables; division only by nonzero constants.
    pub fn to_multipoly(&self, vars: &Arc<Vec<String>>) -> Result<MultiPoly> {
        Ok(match self {
            Expr::Num(r) => MultiPoly::constant(vars, r.clone()),
            Expr::Var(v) => match vars.iter().position(|n| n == v) {
                Some(i) => MultiPoly::var(vars, i),
                None => return Err(Error::Invalid(format!("unknown variable {v}"))),
            },
            Expr::Neg(a) => a.to_multipoly(vars)?.scale(&Rat::from_i64(-1)),
            Expr::Add(a, b) => &a.to_multipoly(vars)? + &b.to_multipoly(vars)?,
            Expr::Sub(a, b) => &a.to_multipoly(vars)? - &b.to_multipoly(vars)?,
            Expr::Mul(a, b) => &a.to_multipoly(vars)? * &b.to_multipoly(vars)?,
            Expr::Div(a, b) => {
                let d = b.to_multipoly(vars)?;
                if d.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                if !d.is_constant() {
                    return Err(Error::Invalid("division by a nonconstant polynomial".into()));
                }
                let c = d.terms().values().next().expect("nonzero constant").clone();
                a.to_multipoly(vars)?.scale(&c.inv())
            }
            Expr::Pow(a, k) => {
                if *k < 0 {
                    return Err(Error::Invalid("negative exponent in a polynomial".into()));
                }
                a.to_multipoly(vars)?.pow(*k as u32)
            }
        })
    }
}

pub fn parse_birat(text: &str) -> Result<BiRat<Rat>> {
    parse_expr(text)?.to_birat()
}

pub fn parse_unirat(text: &str) -> Result<UniRat<Rat>> {
    parse_expr(text)?.to_unirat()
}

pub fn parse_multipoly(text: &str, vars: &Arc<Vec<String>>) -> Result<MultiPoly> {
    parse_expr(text)?.to_multipoly(vars)
}
