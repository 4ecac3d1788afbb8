//! Sparse multivariate polynomials over an exact [`Field`].
//!
//! Terms are kept strictly sorted in descending graded-lexicographic order
//! with respect to the ambient variable list, with no zero coefficients, so
//! structural equality is mathematical equality.

mod gcd;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::algebra::{Field, FieldElem, Scalars};
use crate::error::{Error, Result};

pub use gcd::{gcd_many, is_certainly_coprime};
pub(crate) use text::{parse_expr, ExprValue};
pub use text::{PolyJson, TermJson};

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Clone, Debug, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Vars(Arc::new((1..=n).map(|i| format!("{prefix}{i}")).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for Vars {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Exponent vector, compared in graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, n) }
    }

    pub fn from_exps(exps: &[u32]) -> Result<Self> {
        let deg = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { deg, exps: SmallVec::from_slice(exps) })
    }

    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = e;
        m.deg = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&o.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let deg = self.deg.checked_add(o.deg).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { deg, exps })
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&o.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { deg: self.deg - o.deg, exps })
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum (monomial gcd).
    pub fn gcd_with(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 8]> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { deg: exps.iter().sum(), exps }
    }

    fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.deg = m.deg - m.exps[i] + e;
        m.exps[i] = e;
        m
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.exps.cmp(&other.exps))
    }
}

pub type Term = (Monomial, FieldElem);

/// Sparse multivariate polynomial. See the module docs for invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: Field,
    vars: Vars,
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn zero(field: Field, vars: &Vars) -> Self {
        MultiPoly { field, vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(field: Field, vars: &Vars, c: FieldElem) -> Self {
        assert!(field.contains(&c), "constant {c} is not in {field}");
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(vars.len()), c)] };
        MultiPoly { field, vars: vars.clone(), terms }
    }

    pub fn one(field: Field, vars: &Vars) -> Self {
        Self::constant(field, vars, field.one())
    }

    pub fn from_int(field: Field, vars: &Vars, n: i64) -> Self {
        Self::constant(field, vars, field.from_int(n))
    }

    pub fn var(field: Field, vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(field, vars, i))
    }

    pub fn var_at(field: Field, vars: &Vars, i: usize) -> Self {
        MultiPoly {
            field,
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), i, 1), field.one())],
        }
    }

    pub fn monomial(field: Field, vars: &Vars, m: Monomial, c: FieldElem) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly { field, vars: vars.clone(), terms }
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(field: Field, vars: &Vars, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exps.len(), vars.len());
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(field, vars, acc)
    }

    fn from_map(field: Field, vars: &Vars, acc: HashMap<Monomial, FieldElem>) -> Self {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { field, vars: vars.clone(), terms }
    }

    /// Terms already strictly descending and nonzero.
    fn from_sorted(field: Field, vars: &Vars, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        MultiPoly { field, vars: vars.clone(), terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn constant_value(&self) -> Option<FieldElem> {
        if self.is_zero() {
            Some(self.field.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> FieldElem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.deg)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exps[i]).max().unwrap_or(0)
    }

    pub fn degree_in_var(&self, name: &str) -> Result<u32> {
        let i = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.degree_in(i))
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.iter().any(|t| t.0.exps[i] > 0)).collect()
    }

    pub fn coeff_of(&self, m: &Monomial) -> FieldElem {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    fn check_compatible(&self, o: &MultiPoly) -> Result<()> {
        if self.vars != o.vars {
            return Err(Error::AmbientMismatch);
        }
        if self.field != o.field {
            return Err(Error::FieldMismatch(self.field.name(), o.field.name()));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(o)?;
        Ok(self.merge(o, false))
    }

    pub fn checked_sub(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(o)?;
        Ok(self.merge(o, true))
    }

    pub fn checked_mul(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(o)?;
        self.mul_impl(o)
    }

    fn merge(&self, o: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        MultiPoly::from_sorted(self.field, &self.vars, out)
    }

    fn mul_impl(&self, o: &MultiPoly) -> Result<MultiPoly> {
        if self.is_zero() || o.is_zero() {
            return Ok(MultiPoly::zero(self.field, &self.vars));
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0]);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0]);
        }
        let mut acc: HashMap<Monomial, FieldElem> =
            HashMap::with_capacity(self.terms.len() * o.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb)?;
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(MultiPoly::from_map(self.field, &self.vars, acc))
    }

    /// Multiply by a single term; preserves ordering, so no re-sort.
    pub fn mul_term(&self, (m, c): &Term) -> Result<MultiPoly> {
        if c.is_zero() {
            return Ok(MultiPoly::zero(self.field, &self.vars));
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| Ok((tm.mul(m)?, tc * c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPoly::from_sorted(self.field, &self.vars, terms))
    }

    pub fn scale(&self, c: &FieldElem) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.field, &self.vars);
        }
        let terms = self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect();
        MultiPoly::from_sorted(self.field, &self.vars, terms)
    }

    pub fn neg(&self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly::from_sorted(self.field, &self.vars, terms)
    }

    pub fn pow(&self, mut e: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(self.field, &self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base)?;
            }
        }
        Ok(acc)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> FieldElem) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly::from_sorted(self.field, &self.vars, terms)
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: point.len() });
        }
        if let Some(bad) = point.iter().find(|x| !self.field.contains(x)) {
            return Err(Error::FieldMismatch(self.field.name(), bad.field().name()));
        }
        Ok(self.eval_in(&self.field, point).expect("coefficients embed into their own field"))
    }

    /// Evaluate in another field through the coefficient embedding. Returns
    /// `None` when some coefficient has no image.
    pub fn eval_in<S: Scalars>(&self, s: &S, point: &[S::E]) -> Option<S::E> {
        assert_eq!(point.len(), self.vars.len());
        let powers = power_table(s, point, &self.terms);
        let mut acc = s.zero();
        for (m, c) in &self.terms {
            let mut t = s.embed(c)?;
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = s.mul(&t, &powers[i][e as usize]);
                }
            }
            acc = s.add(&acc, &t);
        }
        Some(acc)
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn derivative(&self, name: &str) -> Result<MultiPoly> {
        let i = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[i] > 0)
            .map(|(m, c)| {
                let e = m.exps[i];
                (m.with_exp(i, e - 1), c * &self.field.from_int(e as i64))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect::<Vec<_>>();
        // lowering one exponent keeps distinct monomials distinct and ordered
        MultiPoly::from_sorted(self.field, &self.vars, terms)
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.try_div_exact(d).ok_or(Error::NotDivisible)
    }

    /// Quotient if `d` divides `self`, else `None`.
    pub fn try_div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv().ok()?));
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.inv().ok()?;
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| Some((m.div(dm)?, c * &inv)))
                .collect::<Option<Vec<_>>>()?;
            return Some(MultiPoly::from_sorted(self.field, &self.vars, terms));
        }
        // cheap degree obstructions
        let (ld, lcd) = d.leading_term()?;
        if !ld.divides(&self.terms[0].0) {
            return None;
        }
        for i in 0..self.vars.len() {
            if d.degree_in(i) > self.degree_in(i) {
                return None;
            }
        }
        let lc_inv = lcd.inv().ok()?;
        let mut rem: BTreeMap<Monomial, FieldElem> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(ld)?;
            let qc = &c * &lc_inv;
            for (dm, dc) in d.terms.iter().skip(1) {
                let key = qm.mul(dm).ok()?;
                let sub = &qc * dc;
                match rem.get_mut(&key) {
                    Some(e) => {
                        let v = &*e - &sub;
                        if v.is_zero() {
                            rem.remove(&key);
                        } else {
                            *e = v;
                        }
                    }
                    None => {
                        rem.insert(key, -&sub);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly::from_sorted(self.field, &self.vars, quot))
    }

    /// Monic greatest common divisor; `gcd(p, 0)` is `p` made monic.
    pub fn gcd(&self, o: &MultiPoly) -> MultiPoly {
        self.check_compatible(o).expect("gcd of incompatible polynomials");
        gcd::gcd(self, o)
    }

    pub fn checked_gcd(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(o)?;
        Ok(gcd::gcd(self, o))
    }

    /// Coefficients with respect to variable `i`: entry `k` is the coefficient
    /// of `x_i^k`, as a polynomial in the same ambient not involving `x_i`.
    pub fn to_univariate(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exps[i] as usize;
            buckets[e].push((m.with_exp(i, 0), c.clone()));
        }
        // removing one variable from a descending list need not keep order
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MultiPoly::from_sorted(self.field, &self.vars, ts)
            })
            .collect()
    }

    pub fn from_univariate(coeffs: &[MultiPoly], i: usize, field: Field, vars: &Vars) -> MultiPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, cc) in &c.terms {
                debug_assert_eq!(m.exps[i], 0);
                terms.push((m.with_exp(i, k as u32), cc.clone()));
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly::from_sorted(field, vars, terms)
    }

    /// Remap variables: variable `i` of `self` becomes variable `target[i]`
    /// of `vars`. Used for permutation actions and ambient changes.
    pub fn remap(&self, vars: &Vars, target: &[usize]) -> Result<MultiPoly> {
        if target.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: target.len() });
        }
        let n = vars.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps: SmallVec<[u32; 8]> = SmallVec::from_elem(0, n);
            for (i, &e) in m.exps.iter().enumerate() {
                exps[target[i]] += e;
            }
            (Monomial { deg: m.deg, exps }, c.clone())
        });
        Ok(MultiPoly::from_terms(self.field, vars, terms))
    }

    /// Re-express in a larger (or reordered) ambient by matching names.
    pub fn embed_in(&self, vars: &Vars) -> Result<MultiPoly> {
        let target = self
            .vars
            .names()
            .iter()
            .map(|v| vars.index_of(v).ok_or_else(|| Error::UnknownVariable(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.remap(vars, &target)
    }

    /// Map every coefficient into another field of the same characteristic
    /// structure (e.g. K into K(ζ3)).
    pub fn change_field(&self, field: Field) -> Result<MultiPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), lift(field, c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPoly::from_sorted(field, &self.vars, terms))
    }

    /// Smallest monomial dividing every term and the cofactor.
    pub(crate) fn split_monomial_content(&self) -> (Monomial, MultiPoly) {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return (Monomial::one(self.vars.len()), self.clone()),
            Some(t) => t.0.clone(),
        };
        let m = it.fold(first, |acc, t| acc.gcd_with(&t.0));
        if m.is_one() {
            return (m, self.clone());
        }
        let terms = self.terms.iter().map(|(tm, c)| (tm.div(&m).expect("divides"), c.clone())).collect();
        (m, MultiPoly::from_sorted(self.field, &self.vars, terms))
    }
}

fn lift(field: Field, c: &FieldElem) -> Result<FieldElem> {
    if field.contains(c) {
        return Ok(c.clone());
    }
    if field.is_cyclo() && field.base().contains(c) {
        return field.cyclo(c.clone(), field.base().zero());
    }
    Err(Error::FieldMismatch(c.field().name(), field.name()))
}

fn power_table<S: Scalars>(s: &S, point: &[S::E], terms: &[Term]) -> Vec<Vec<S::E>> {
    let n = point.len();
    let mut maxe = vec![0u32; n];
    for (m, _) in terms {
        for (i, &e) in m.exps.iter().enumerate() {
            maxe[i] = maxe[i].max(e);
        }
    }
    (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(maxe[i] as usize + 1);
            row.push(s.one());
            for k in 1..=maxe[i] as usize {
                let next = s.mul(&row[k - 1], &point[i]);
                row.push(next);
            }
            row
        })
        .collect()
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> std::ops::$trait<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            /// Panics on ambient or field mismatch; use the `checked_` variant
            /// to get an error instead.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("polynomial {}: {e}", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl MultiPoly {
    /// Parse the canonical text form (and more general expressions built from
    /// `+ - * ^`, parentheses, integer or rational constants, and `z3`).
    pub fn parse(field: Field, vars: &Vars, s: &str) -> Result<MultiPoly> {
        text::parse_expr(field, vars, s)
    }

    pub fn to_json(&self) -> PolyJson {
        text::to_json(self)
    }

    pub fn from_json(field: Field, json: &PolyJson) -> Result<MultiPoly> {
        text::from_json(field, json)
    }
}

#[cfg(test)]
mod tests;
