//! Rational functions `num / den` kept in lowest terms with a monic
//! denominator, so structural equality is equality of functions.

mod jacobian;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldElem, Scalars};
use crate::error::{Error, Result};
use crate::permgrp::Perm;
use crate::polyring::{parse_expr, ExprValue, MultiPoly, PolyJson, Vars};

pub use jacobian::{jacobian_at, jacobian_rank_at, random_regular_point, rank};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl RatFunc {
    /// Normalize `num / den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
        if num.vars() != den.vars() {
            return Err(Error::AmbientMismatch);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch(num.field().name(), den.field().name()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(num.field(), num.vars()));
        }
        if den.is_constant() {
            let c = den.constant_value().expect("constant");
            return Ok(RatFunc { num: num.scale(&c.inv()?), den: MultiPoly::one(den.field(), den.vars()) });
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return Ok(Self::from_coprime(num, den));
        }
        let n = num.try_div_exact(&g).expect("gcd divides numerator");
        let d = den.try_div_exact(&g).expect("gcd divides denominator");
        Ok(Self::from_coprime(n, d))
    }

    /// Coprime parts; only rescales so the denominator is monic.
    fn from_coprime(num: MultiPoly, den: MultiPoly) -> RatFunc {
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inv().expect("nonzero");
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        let den = MultiPoly::one(p.field(), p.vars());
        RatFunc { num: p, den }
    }

    pub fn zero(field: Field, vars: &Vars) -> RatFunc {
        Self::from_poly(MultiPoly::zero(field, vars))
    }

    pub fn one(field: Field, vars: &Vars) -> RatFunc {
        Self::from_poly(MultiPoly::one(field, vars))
    }

    pub fn constant(field: Field, vars: &Vars, c: FieldElem) -> RatFunc {
        Self::from_poly(MultiPoly::constant(field, vars, c))
    }

    pub fn from_int(field: Field, vars: &Vars, n: i64) -> RatFunc {
        Self::from_poly(MultiPoly::from_int(field, vars, n))
    }

    pub fn var(field: Field, vars: &Vars, name: &str) -> Result<RatFunc> {
        Ok(Self::from_poly(MultiPoly::var(field, vars, name)?))
    }

    pub fn var_at(field: Field, vars: &Vars, i: usize) -> RatFunc {
        Self::from_poly(MultiPoly::var_at(field, vars, i))
    }

    /// All variables of an ambient as rational functions.
    pub fn vars_of(field: Field, vars: &Vars) -> Vec<RatFunc> {
        (0..vars.len()).map(|i| Self::var_at(field, vars, i)).collect()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn field(&self) -> Field {
        self.num.field()
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<FieldElem> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn check(&self, o: &RatFunc) -> Result<()> {
        if self.vars() != o.vars() {
            return Err(Error::AmbientMismatch);
        }
        if self.field() != o.field() {
            return Err(Error::FieldMismatch(self.field().name(), o.field().name()));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &RatFunc) -> Result<RatFunc> {
        self.check(o)?;
        Ok(self.add_impl(o, false))
    }

    pub fn checked_sub(&self, o: &RatFunc) -> Result<RatFunc> {
        self.check(o)?;
        Ok(self.add_impl(o, true))
    }

    fn add_impl(&self, o: &RatFunc, negate: bool) -> RatFunc {
        let combine = |a: &MultiPoly, b: &MultiPoly| if negate { a - b } else { a + b };
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(combine(&self.num, &o.num));
            }
            let n = combine(&self.num, &o.num);
            return RatFunc::new(n, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the gcd of the denominators can cancel
        let g = self.den.gcd(&o.den);
        let b1 = self.den.try_div_exact(&g).expect("gcd divides");
        let d1 = o.den.try_div_exact(&g).expect("gcd divides");
        let n = combine(&(&self.num * &d1), &(&o.num * &b1));
        let den = &b1 * &o.den;
        if g.is_one() || n.is_zero() {
            return if n.is_zero() {
                RatFunc::zero(self.field(), self.vars())
            } else {
                RatFunc::from_coprime(n, den)
            };
        }
        let h = n.gcd(&g);
        if h.is_one() {
            RatFunc::from_coprime(n, den)
        } else {
            RatFunc::from_coprime(
                n.try_div_exact(&h).expect("gcd divides"),
                den.try_div_exact(&h).expect("gcd divides"),
            )
        }
    }

    pub fn checked_mul(&self, o: &RatFunc) -> Result<RatFunc> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(RatFunc::zero(self.field(), self.vars()));
        }
        if self.den.is_one() && o.den.is_one() {
            return Ok(RatFunc::from_poly(&self.num * &o.num));
        }
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        Ok(RatFunc::from_coprime(&a * &c, &b * &d))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc> {
        self.checked_mul(&o.inv()?)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &FieldElem) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.field(), self.vars());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        // coprime parts stay coprime under powers
        Ok(RatFunc { num: base.num.pow(k)?, den: base.den.pow(k)? })
    }

    /// Action of a permutation: `x_i ↦ x_{σ(i)}`.
    pub fn apply_perm(&self, sigma: &Perm) -> Result<RatFunc> {
        if sigma.degree() != self.vars().len() {
            return Err(Error::ArityMismatch { expected: self.vars().len(), got: sigma.degree() });
        }
        let target = sigma.images();
        let vars = self.vars().clone();
        let n = self.num.remap(&vars, target)?;
        let d = self.den.remap(&vars, target)?;
        Ok(RatFunc::from_coprime(n, d))
    }

    /// Substitute `images[i]` for variable `i`. All images share one ambient,
    /// which becomes the ambient of the result.
    pub fn compose(&self, images: &[RatFunc]) -> Result<RatFunc> {
        if images.len() != self.vars().len() {
            return Err(Error::ArityMismatch { expected: self.vars().len(), got: images.len() });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        for im in images {
            first.check(im)?;
        }
        if first.field() != self.field() {
            return Err(Error::FieldMismatch(self.field().name(), first.field().name()));
        }
        let mut sub = Substitution::new(images);
        let (hn, degs_n) = sub.homogenize(&self.num)?;
        let (hd, degs_d) = sub.homogenize(&self.den)?;
        if hd.is_zero() {
            return Err(Error::SubstitutionPole);
        }
        // f(r) = H(N) · Π δ_k^{deg_k D − deg_k N} / H(D)
        let mut num = hn;
        let mut den = hd;
        for (k, (dn, dd)) in degs_n.iter().zip(&degs_d).enumerate() {
            if dd > dn {
                num = &num * &sub.den_pow(k, dd - dn)?;
            } else if dn > dd {
                den = &den * &sub.den_pow(k, dn - dd)?;
            }
        }
        RatFunc::new(num, den)
    }

    /// Exact value at a point of the coefficient field.
    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval(point)?.div(&d)
    }

    /// Value in another field; a vanishing denominator (including a
    /// coefficient that has no image) is reported as a pole.
    pub fn eval_in<S: Scalars>(&self, s: &S, point: &[S::E]) -> Result<S::E> {
        if point.len() != self.vars().len() {
            return Err(Error::ArityMismatch { expected: self.vars().len(), got: point.len() });
        }
        let d = self.den.eval_in(s, point).ok_or(Error::PoleAtPoint)?;
        let dinv = s.inv(&d).ok_or(Error::PoleAtPoint)?;
        let n = self.num.eval_in(s, point).ok_or(Error::PoleAtPoint)?;
        Ok(s.mul(&n, &dinv))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative_at(&self, i: usize) -> RatFunc {
        let dn = self.num.derivative_at(i);
        let dd = self.den.derivative_at(i);
        if dd.is_zero() {
            return RatFunc::new(dn, self.den.clone()).expect("nonzero denominator");
        }
        let n = &(&dn * &self.den) - &(&self.num * &dd);
        RatFunc::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn derivative(&self, name: &str) -> Result<RatFunc> {
        let i = self.vars().index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.derivative_at(i))
    }

    pub fn embed_in(&self, vars: &Vars) -> Result<RatFunc> {
        Ok(RatFunc { num: self.num.embed_in(vars)?, den: self.den.embed_in(vars)? })
    }

    pub fn change_field(&self, field: Field) -> Result<RatFunc> {
        Ok(RatFunc { num: self.num.change_field(field)?, den: self.den.change_field(field)? })
    }

    /// Apply ζ ↦ ζ² to every coefficient.
    pub fn cyclo_conjugate(&self) -> RatFunc {
        RatFunc::from_coprime(self.num.cyclo_conjugate(), self.den.cyclo_conjugate())
    }

    /// True when every coefficient lies in the base field (no ζ3 needed).
    pub fn is_defined_over_base(&self) -> bool {
        self.num.terms().iter().chain(self.den.terms()).all(|(_, c)| c.is_base())
    }

    /// Parse text such as `(x1 + x2) / (x3 - 1)`; arbitrary expressions in
    /// `+ - * / ^` with parentheses are accepted.
    pub fn parse(field: Field, vars: &Vars, s: &str) -> Result<RatFunc> {
        parse_expr(field, vars, s)
    }

    pub fn to_json(&self) -> RatFuncJson {
        RatFuncJson { num: self.num.to_json(), den: self.den.to_json() }
    }

    pub fn from_json(field: Field, json: &RatFuncJson) -> Result<RatFunc> {
        RatFunc::new(MultiPoly::from_json(field, &json.num)?, MultiPoly::from_json(field, &json.den)?)
    }
}

/// `(a / g, b / g)` with `g = gcd(a, b)`.
fn cancel(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if b.is_one() || a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.try_div_exact(&g).expect("gcd divides"), b.try_div_exact(&g).expect("gcd divides"))
    }
}

/// Cached powers used while substituting rational images into polynomials.
/// Images sharing a denominator are grouped so that the denominator is
/// raised to the combined degree only once.
struct Substitution<'a> {
    images: &'a [RatFunc],
    group_of: Vec<Option<usize>>,
    dens: Vec<MultiPoly>,
    num_pows: Vec<Vec<MultiPoly>>,
    den_pows: Vec<Vec<MultiPoly>>,
}

impl<'a> Substitution<'a> {
    fn new(images: &'a [RatFunc]) -> Self {
        let mut dens: Vec<MultiPoly> = Vec::new();
        let mut index: HashMap<&MultiPoly, usize> = HashMap::new();
        let group_of = images
            .iter()
            .map(|im| {
                if im.den.is_one() {
                    return None;
                }
                Some(*index.entry(&im.den).or_insert_with(|| {
                    dens.push(im.den.clone());
                    dens.len() - 1
                }))
            })
            .collect();
        let one = MultiPoly::one(images[0].field(), images[0].vars());
        Substitution {
            images,
            group_of,
            num_pows: images.iter().map(|_| vec![one.clone()]).collect(),
            den_pows: dens.iter().map(|_| vec![one.clone()]).collect(),
            dens,
        }
    }

    fn num_pow(&mut self, j: usize, e: u32) -> Result<MultiPoly> {
        let row = &mut self.num_pows[j];
        while row.len() <= e as usize {
            let next = row.last().expect("starts with 1").checked_mul(&self.images[j].num)?;
            row.push(next);
        }
        Ok(row[e as usize].clone())
    }

    fn den_pow(&mut self, k: usize, e: u32) -> Result<MultiPoly> {
        let row = &mut self.den_pows[k];
        while row.len() <= e as usize {
            let next = row.last().expect("starts with 1").checked_mul(&self.dens[k])?;
            row.push(next);
        }
        Ok(row[e as usize].clone())
    }

    /// Returns `H` and per-group degrees `deg_k` with
    /// `P(images) = H / Π δ_k^{deg_k}`.
    fn homogenize(&mut self, p: &MultiPoly) -> Result<(MultiPoly, Vec<u32>)> {
        let ngroups = self.dens.len();
        let group_deg = |exps: &[u32], group_of: &[Option<usize>]| {
            let mut d = vec![0u32; ngroups];
            for (j, &e) in exps.iter().enumerate() {
                if let Some(k) = group_of[j] {
                    d[k] += e;
                }
            }
            d
        };
        let mut degs = vec![0u32; ngroups];
        for (m, _) in p.terms() {
            for (k, d) in group_deg(m.exps(), &self.group_of).into_iter().enumerate() {
                degs[k] = degs[k].max(d);
            }
        }
        let target = &self.images[0];
        let mut acc = MultiPoly::zero(target.field(), target.vars());
        for (m, c) in p.terms() {
            let mut t = MultiPoly::constant(target.field(), target.vars(), c.clone());
            for (j, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&self.num_pow(j, e)?)?;
                }
            }
            let gd = group_deg(m.exps(), &self.group_of);
            for k in 0..ngroups {
                if degs[k] > gd[k] {
                    t = t.checked_mul(&self.den_pow(k, degs[k] - gd[k])?)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok((acc, degs))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> std::ops::$trait<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$checked(rhs).unwrap_or_else(|e| panic!("rational function {}: {e}", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl ExprValue for RatFunc {
    fn constant(field: Field, vars: &Vars, c: FieldElem) -> Self {
        RatFunc::constant(field, vars, c)
    }
    fn variable(field: Field, vars: &Vars, i: usize) -> Self {
        RatFunc::var_at(field, vars, i)
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
        self.checked_div(o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn pow(&self, e: u32) -> Result<Self> {
        RatFunc::pow(self, i32::try_from(e).map_err(|_| Error::ExponentOverflow)?)
    }
}

fn wrapped(p: &MultiPoly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", wrapped(&self.num), wrapped(&self.den))
        }
    }
}

#[cfg(test)]
mod tests;
