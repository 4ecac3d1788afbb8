//! Canonical text rendering, expression parsing and JSON interchange.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, Vars};
use crate::algebra::{Field, FieldElem, Rational};
use crate::error::{Error, Result};

/// Serialized polynomial: coefficients as strings in the field's own
/// rendering, exponent vectors aligned with `vars`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

pub(super) fn to_json(p: &MultiPoly) -> PolyJson {
    PolyJson {
        field: Some(p.field.name()),
        vars: p.vars.names().to_vec(),
        terms: p
            .terms
            .iter()
            .map(|(m, c)| TermJson { coef: c.to_string(), exps: m.exps.to_vec() })
            .collect(),
    }
}

pub(super) fn from_json(field: Field, json: &PolyJson) -> Result<MultiPoly> {
    if let Some(name) = &json.field {
        let declared: Field = name.parse()?;
        if declared != field {
            return Err(Error::FieldMismatch(declared.name(), field.name()));
        }
    }
    let vars = Vars::new(&json.vars);
    let mut terms = Vec::with_capacity(json.terms.len());
    for t in &json.terms {
        if t.exps.len() != vars.len() {
            return Err(Error::ArityMismatch { expected: vars.len(), got: t.exps.len() });
        }
        terms.push((Monomial::from_exps(&t.exps)?, field.parse_elem(&t.coef)?));
    }
    Ok(MultiPoly::from_terms(field, &vars, terms))
}

fn monomial_text(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{e}", vars.name(i))),
        }
    }
    parts.join("*")
}

pub(super) fn render(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms.iter().enumerate() {
        let negative = c.is_negative_rational();
        let abs = if negative { -c } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = monomial_text(&p.vars, m);
        if mono.is_empty() {
            out.push_str(&abs.bare());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.bare());
                out.push('*');
            }
            out.push_str(&mono);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            toks.push(Tok::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            toks.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

/// Values an expression can be evaluated into.
pub(crate) trait ExprValue: Sized {
    fn constant(field: Field, vars: &Vars, c: FieldElem) -> Self;
    fn variable(field: Field, vars: &Vars, i: usize) -> Self;
    fn add(&self, o: &Self) -> Result<Self>;
    fn sub(&self, o: &Self) -> Result<Self>;
    fn mul(&self, o: &Self) -> Result<Self>;
    fn div(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Result<Self>;
}

impl ExprValue for MultiPoly {
    fn constant(field: Field, vars: &Vars, c: FieldElem) -> Self {
        MultiPoly::constant(field, vars, c)
    }
    fn variable(field: Field, vars: &Vars, i: usize) -> Self {
        MultiPoly::var_at(field, vars, i)
    }
    fn add(&self, o: &Self) -> Result<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        let c = o
            .constant_value()
            .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
        Ok(self.scale(&c.inv()?))
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Result<Self> {
        MultiPoly::pow(self, e)
    }
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: Field,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<T: ExprValue>(&mut self) -> Result<T> {
        let mut acc = if self.eat('-') {
            self.term::<T>()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: ExprValue>(&mut self) -> Result<T> {
        let mut acc = self.unary::<T>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<T: ExprValue>(&mut self) -> Result<T> {
        if self.eat('-') {
            return Ok(self.unary::<T>()?.neg());
        }
        let base = self.atom::<T>()?;
        if self.eat('^') {
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.parse::<u32>().map_err(|_| Error::ExponentOverflow)?,
                _ => return Err(Error::Parse("expected exponent after `^`".into())),
            };
            self.pos += 1;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom<T: ExprValue>(&mut self) -> Result<T> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let v: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad number `{n}`")))?;
                let c = self.field.from_rational(&Rational::from_bigint(v))?;
                Ok(T::constant(self.field, self.vars, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.vars.index_of(&name) {
                    Ok(T::variable(self.field, self.vars, i))
                } else if name == "z3" || name == "zeta" {
                    Ok(T::constant(self.field, self.vars, self.field.zeta()?))
                } else {
                    Err(Error::UnknownVariable(name))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_expr<T: ExprValue>(field: Field, vars: &Vars, s: &str) -> Result<T> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, field, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}
