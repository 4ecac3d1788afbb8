//! Frobenius cycle types of specialized sextics by distinct-degree
//! factorization, and comparison with a group's cycle-type census.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::finite::{dense, is_irreducible};
use crate::algebra::prime::primes_in_range;
use crate::algebra::{FiniteField, GfExt, PrimeCtx, Rational, Scalars};
use crate::algebra::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::genpoly::{generic_char2, SpecializedSextic};
use crate::permgrp::CycleType;

/// A monic polynomial over GF(p), coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl UniPoly {
    /// Monic normalization of `coeffs` (reduced mod p).
    pub fn new(p: u64, coeffs: &[u64]) -> Result<UniPoly> {
        let ctx = PrimeCtx::new(p);
        let c = dense::trim(&ctx, coeffs.iter().map(|c| c % p).collect());
        if c.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(UniPoly { p, coeffs: dense::monic(&ctx, &c) })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    /// A coefficient denominator vanishes mod p.
    Pole,
    NotSquarefree,
    DegreeDrop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Poly(UniPoly),
    Skip(SkipReason),
}

fn is_squarefree<S: Scalars>(s: &S, f: &[S::E]) -> bool {
    dense::gcd(s, f, &dense::derivative(s, f)).len() == 1
}

/// Reduce a sextic over Q (or over GF(p) itself) modulo `p`.
pub fn reduce_mod_p(s: &SpecializedSextic, p: u64) -> Reduction {
    let mut coeffs = Vec::with_capacity(7);
    for c in s.ascending() {
        let r = match &c {
            FieldElem::Rational(r) => r.residue_mod(p),
            FieldElem::Prime(e) if e.modulus() == p => Some(e.residue()),
            _ => None,
        };
        match r {
            Some(v) => coeffs.push(v),
            None => return Reduction::Skip(SkipReason::Pole),
        }
    }
    let ctx = PrimeCtx::new(p);
    let f = dense::trim(&ctx, coeffs);
    if f.len() != 7 {
        return Reduction::Skip(SkipReason::DegreeDrop);
    }
    if !is_squarefree(&ctx, &f) {
        return Reduction::Skip(SkipReason::NotSquarefree);
    }
    Reduction::Poly(UniPoly { p, coeffs: f })
}

/// Degrees of the irreducible factors of a monic squarefree `f` over the
/// finite field `s`, by peeling off `gcd(f, X^{q^d} − X)` for d = 1, 2, ….
pub fn distinct_degree_pattern_in<S: FiniteField>(s: &S, f: &[S::E]) -> Result<CycleType> {
    let f = dense::monic(s, &dense::trim(s, f.to_vec()));
    if f.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if !is_squarefree(s, &f) {
        return Err(Error::NotSquarefree);
    }
    let q = s.order();
    let x = vec![s.zero(), s.one()];
    let mut rest = f;
    let mut h = dense::rem(s, &x, &rest);
    let mut parts = Vec::new();
    let mut d = 1;
    while rest.len() > 1 && 2 * d < rest.len() {
        h = dense::powmod(s, &h, q, &rest);
        let g = dense::gcd(s, &rest, &dense::sub(s, &h, &x));
        let gd = g.len() - 1;
        for _ in 0..gd / d {
            parts.push(d);
        }
        if gd > 0 {
            rest = dense::divrem(s, &rest, &g).0;
            h = dense::rem(s, &h, &rest);
        }
        d += 1;
    }
    if rest.len() > 1 {
        parts.push(rest.len() - 1);
    }
    Ok(CycleType::new(parts))
}

pub fn distinct_degree_pattern(f: &UniPoly) -> Result<CycleType> {
    distinct_degree_pattern_in(&PrimeCtx::new(f.p), &f.coeffs)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrobeniusCensus {
    pub counts: BTreeMap<CycleType, usize>,
    /// Number of usable primes.
    pub total: usize,
    /// Primes (or, in the function-field check, encoded place polynomials)
    /// that were skipped, ascending.
    pub skipped: Vec<u64>,
}

impl FrobeniusCensus {
    fn from_outcomes(outcomes: Vec<(u64, Option<CycleType>)>) -> FrobeniusCensus {
        let mut c = FrobeniusCensus::default();
        for (p, ct) in outcomes {
            match ct {
                Some(ct) => {
                    *c.counts.entry(ct).or_insert(0) += 1;
                    c.total += 1;
                }
                None => c.skipped.push(p),
            }
        }
        c
    }

    pub fn frequency(&self, ct: &CycleType) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        *self.counts.get(ct).unwrap_or(&0) as f64 / self.total as f64
    }

    pub fn counts_by_name(&self) -> BTreeMap<String, usize> {
        self.counts.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }
}

/// Cycle types at every usable prime in `[lo, hi]`.
pub fn sample_census(s: &SpecializedSextic, lo: u64, hi: u64) -> Result<FrobeniusCensus> {
    let primes = if lo <= hi { primes_in_range(lo, hi) } else { Vec::new() };
    let outcomes: Vec<(u64, Option<CycleType>)> = primes
        .par_iter()
        .map(|&p| {
            let ct = match reduce_mod_p(s, p) {
                Reduction::Poly(f) => distinct_degree_pattern(&f).ok(),
                Reduction::Skip(_) => None,
            };
            (p, ct)
        })
        .collect();
    let census = FrobeniusCensus::from_outcomes(outcomes);
    if census.total == 0 {
        return Err(Error::NoUsablePrimes);
    }
    Ok(census)
}

/// Bits of `n` as a polynomial over GF(2) (bit i is the coefficient of s^i).
fn bits(n: u64) -> Vec<u64> {
    (0..64 - n.leading_zeros()).map(|i| (n >> i) & 1).collect()
}

/// Monic irreducible polynomials over GF(2) of degree `d`, encoded as bit
/// masks including the leading bit.
fn binary_irreducibles(d: u32) -> Vec<u64> {
    let two = PrimeCtx::new(2);
    (0..1u64 << d)
        .map(|low| low | (1 << d))
        .filter(|&code| is_irreducible(&two, &bits(code)))
        .collect()
}

/// Containment-style census for the characteristic-2 form over the
/// function field GF(2)(s): each integer parameter is read as a polynomial in
/// `s` through its binary digits, and the specialized sextic is reduced at
/// every place `P(s)` of degree `1..=max_degree`, giving a sextic over
/// GF(2^deg P). Skipped places are reported by their bit masks.
pub fn char2_census(params: &[u64], max_degree: u32) -> Result<FrobeniusCensus> {
    let g = generic_char2(Field::Prime(2))?;
    if params.len() != g.params.len() {
        return Err(Error::ArityMismatch { expected: g.params.len(), got: params.len() });
    }
    let places: Vec<u64> = (1..=max_degree).flat_map(binary_irreducibles).collect();
    let outcomes: Vec<(u64, Option<CycleType>)> = places
        .par_iter()
        .map(|&code| {
            let k = GfExt::with_modulus(2, bits(code));
            let values: Vec<Vec<u64>> = params.iter().map(|&v| k.from_coords(&bits(v))).collect();
            let coeffs: Option<Vec<Vec<u64>>> = g.coeffs.iter().map(|c| c.eval_in(&k, &values).ok()).collect();
            let ct = coeffs.and_then(|cs| {
                let mut f: Vec<Vec<u64>> = cs.into_iter().rev().collect();
                f.push(k.one());
                distinct_degree_pattern_in(&k, &f).ok()
            });
            (code, ct)
        })
        .collect();
    let census = FrobeniusCensus::from_outcomes(outcomes);
    if census.total == 0 {
        return Err(Error::NoUsablePrimes);
    }
    Ok(census)
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusComparison {
    /// `½ Σ |observed − theoretical|` over all cycle types.
    pub tv: f64,
    pub containment: bool,
    /// Observed types that do not occur in the group.
    pub foreign: Vec<String>,
}

pub fn compare_census(observed: &FrobeniusCensus, theoretical: &BTreeMap<CycleType, Rational>) -> CensusComparison {
    let mut tv = 0.0;
    for (ct, f) in theoretical {
        tv += (observed.frequency(ct) - f.to_f64()).abs();
    }
    let mut foreign = Vec::new();
    for ct in observed.counts.keys() {
        if !theoretical.contains_key(ct) {
            tv += observed.frequency(ct);
            foreign.push(ct.to_string());
        }
    }
    CensusComparison { tv: tv / 2.0, containment: foreign.is_empty(), foreign }
}

#[cfg(test)]
mod tests;
