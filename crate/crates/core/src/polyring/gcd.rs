//! Multivariate GCD: cheap structural reductions, a modular coprimality
//! certificate, then the recursive subresultant algorithm.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{MultiPoly, Vars};
use crate::algebra::finite::{dense, evaluation_extension, PrimeCtx, Scalars};
use crate::algebra::{Field, FieldElem};

/// Prime used for coprimality probes over Q and Q(ζ3); it is ≡ 1 mod 3, so
/// ζ3 has an image.
const PROBE_PRIME: u64 = 2_147_483_647;
const PROBE_ATTEMPTS: usize = 3;

pub(super) fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.field, &a.vars);
    }
    let (ma, a1) = a.split_monomial_content();
    let (mb, b1) = b.split_monomial_content();
    let m = ma.gcd_with(&mb);
    let g = gcd_core(&a1, &b1);
    if m.is_one() {
        g
    } else {
        g.mul_term(&(m, a.field.one())).expect("monomial gcd has no larger exponents")
    }
}

/// GCD of a list, stopping early once it becomes 1.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Option<MultiPoly> {
    let mut it = polys.into_iter();
    let mut g = it.next()?.monic();
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p);
    }
    Some(g)
}

fn gcd_core(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let one = || MultiPoly::one(a.field, &a.vars);
    if a.is_constant() || b.is_constant() {
        return one();
    }
    if a == b {
        return a.monic();
    }
    let sa = a.support();
    let sb = b.support();
    let only_a: Vec<usize> = sa.iter().copied().filter(|v| !sb.contains(v)).collect();
    if !only_a.is_empty() {
        let mut parts = coefficients_wrt(a, &only_a);
        parts.push(b.clone());
        return gcd_list_sorted(parts);
    }
    let only_b: Vec<usize> = sb.iter().copied().filter(|v| !sa.contains(v)).collect();
    if !only_b.is_empty() {
        let mut parts = coefficients_wrt(b, &only_b);
        parts.push(a.clone());
        return gcd_list_sorted(parts);
    }
    if is_certainly_coprime(a, b) {
        return one();
    }
    let (small, big) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if big.try_div_exact(small).is_some() {
        return small.monic();
    }
    let v = main_variable(a, b, &sa);
    gcd_prs(a, b, v)
}

/// gcd of several polynomials, smallest first so the cheap ones go early.
fn gcd_list_sorted(mut parts: Vec<MultiPoly>) -> MultiPoly {
    parts.sort_by_key(|p| p.num_terms());
    gcd_many(parts.iter()).expect("nonempty")
}

/// Coefficients of `p` viewed as a polynomial in the variables `sel`, each
/// expressed in the same ambient.
fn coefficients_wrt(p: &MultiPoly, sel: &[usize]) -> Vec<MultiPoly> {
    use std::collections::HashMap;
    let mut groups: HashMap<Vec<u32>, Vec<super::Term>> = HashMap::new();
    for (m, c) in &p.terms {
        let key: Vec<u32> = sel.iter().map(|&i| m.exps[i]).collect();
        let mut rest = m.clone();
        for &i in sel {
            rest = rest.with_exp(i, 0);
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    groups
        .into_values()
        .map(|ts| MultiPoly::from_terms(p.field, &p.vars, ts))
        .collect()
}

fn main_variable(a: &MultiPoly, b: &MultiPoly, support: &[usize]) -> usize {
    // the variable occurring in the most terms, ties broken by lower degree
    *support
        .iter()
        .max_by_key(|&&v| {
            let count = a.terms.iter().chain(&b.terms).filter(|t| t.0.exps[v] > 0).count();
            let deg = a.degree_in(v) + b.degree_in(v);
            (count, std::cmp::Reverse(deg), std::cmp::Reverse(v))
        })
        .expect("nonconstant polynomials have support")
}

/// Sound test for `gcd(a, b) = 1`: returns `true` only when proven.
///
/// For each shared variable `v` we specialize the others at random points of
/// a finite field where the degrees in `v` are preserved; a trivial gcd of
/// the specializations then forbids any common factor involving `v`. A
/// `false` result means "not proven".
pub fn is_certainly_coprime(a: &MultiPoly, b: &MultiPoly) -> bool {
    if a.vars != b.vars || a.field != b.field {
        return false;
    }
    match a.field {
        Field::Rational | Field::CycloRational => probe(&PrimeCtx::new(PROBE_PRIME), a, b),
        f => {
            let ext = evaluation_extension(f, 1 << 24).expect("finite characteristic");
            probe(&ext, a, b)
        }
    }
}

fn probe<S: Scalars>(s: &S, a: &MultiPoly, b: &MultiPoly) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_6cd);
    let mut vars = a.support();
    for v in b.support() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let n = a.vars.len();
    'vars: for &v in &vars {
        let (da, db) = (a.degree_in(v) as usize, b.degree_in(v) as usize);
        if da == 0 || db == 0 {
            continue;
        }
        for _ in 0..PROBE_ATTEMPTS {
            let point: Vec<S::E> = (0..n).map(|_| s.random(&mut rng)).collect();
            let (Some(ua), Some(ub)) = (specialize(s, a, v, &point), specialize(s, b, v, &point)) else {
                return false;
            };
            if ua.len() != da + 1 || ub.len() != db + 1 {
                continue;
            }
            if dense::gcd(s, &ua, &ub).len() == 1 {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

/// Univariate image in variable `v` with the other variables set from `point`.
fn specialize<S: Scalars>(s: &S, p: &MultiPoly, v: usize, point: &[S::E]) -> Option<Vec<S::E>> {
    let d = p.degree_in(v) as usize;
    let mut out = vec![s.zero(); d + 1];
    let mut pt = point.to_vec();
    pt[v] = s.one();
    let powers = super::power_table(s, &pt, &p.terms);
    for (m, c) in &p.terms {
        let mut t = s.embed(c)?;
        for (i, &e) in m.exps.iter().enumerate() {
            if i != v && e > 0 {
                t = s.mul(&t, &powers[i][e as usize]);
            }
        }
        let k = m.exps[v] as usize;
        out[k] = s.add(&out[k], &t);
    }
    Some(dense::trim(s, out))
}

type Uni = Vec<MultiPoly>;

fn gcd_prs(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let field = a.field;
    let vars = a.vars.clone();
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd(&ca, &cb);
    let pa = div_coeffs(&ua, &ca);
    let pb = div_coeffs(&ub, &cb);
    let (pa, pb) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let g = subresultant(pa, pb, field, &vars);
    let g = if g.len() <= 1 {
        MultiPoly::one(field, &vars)
    } else {
        let cg = content(&g);
        MultiPoly::from_univariate(&div_coeffs(&g, &cg), v, field, &vars)
    };
    (&g * &c).monic()
}

fn content(u: &Uni) -> MultiPoly {
    let mut nz: Vec<&MultiPoly> = u.iter().filter(|c| !c.is_zero()).collect();
    nz.sort_by_key(|p| p.num_terms());
    gcd_many(nz).expect("nonzero univariate")
}

fn div_coeffs(u: &Uni, d: &MultiPoly) -> Uni {
    if d.is_one() {
        return u.clone();
    }
    u.iter().map(|c| c.try_div_exact(d).expect("content divides every coefficient")).collect()
}

fn trim(mut u: Uni) -> Uni {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
    u
}

/// Pseudo-remainder of `a` by `b` (deg a ≥ deg b ≥ 1).
fn prem(a: &Uni, b: &Uni) -> Uni {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = (a.len() - 1) as i64 - db as i64 + 1;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Uni = r.iter().map(|c| c * lb).collect();
        for (k, bk) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(&lr * bk);
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e as u32).expect("degree fits");
        r = r.iter().map(|c| c * &f).collect();
    }
    r
}

fn subresultant(mut a: Uni, mut b: Uni, field: Field, vars: &Vars) -> Uni {
    let one = MultiPoly::one(field, vars);
    let mut g = one.clone();
    let mut h = one;
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![MultiPoly::one(field, vars)];
        }
        let divisor = &g * &h.pow(delta).expect("degree fits");
        a = b;
        b = r.iter().map(|c| c.try_div_exact(&divisor).expect("subresultant division is exact")).collect();
        g = a.last().expect("nonzero").clone();
        if delta > 0 {
            let num = g.pow(delta).expect("degree fits");
            let den = h.pow(delta - 1).expect("degree fits");
            h = num.try_div_exact(&den).expect("subresultant division is exact");
        }
    }
}

impl MultiPoly {
    /// Conjugate coefficients under ζ ↦ ζ² (identity outside cyclotomic fields).
    pub fn cyclo_conjugate(&self) -> MultiPoly {
        self.map_coeffs(FieldElem::cyclo_conjugate)
    }
}
