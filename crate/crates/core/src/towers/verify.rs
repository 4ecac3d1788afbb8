//! Symbolic verification of towers and generator sets.
//!
//! Every step is checked in the variables of the level just below it, which
//! keeps expressions small. Actions of group elements on a level are
//! themselves certified inductively: the images at level 0 come from the
//! permutation, and each claimed table at level k is checked against the
//! table at level k−1 through the step's generators.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::builder::MINPOLY_VAR;
use super::{DescentStep, GeneratorSet, Tower};
use crate::algebra::{evaluation_extension, Field, Scalars};
use crate::error::{Error, Result};
use crate::permgrp::{catalog, Group, Perm};
use crate::polyring::{MultiPoly, Monomial, Vars};
use crate::ratfield::{jacobian_at, rank, RatFunc};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random points tried for the final Jacobian rank.
    pub jacobian_points: usize,
    /// Also expand the final generators over `x1..x6` and check them against
    /// the group generators directly.
    pub expanded_invariance: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, jacobian_points: 5, expanded_invariance: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub obligation: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(obligation: impl Into<String>) -> CheckResult {
        CheckResult { obligation: obligation.into(), passed: true, detail: String::new() }
    }

    fn fail(obligation: impl Into<String>, detail: impl Into<String>) -> CheckResult {
        CheckResult { obligation: obligation.into(), passed: false, detail: detail.into() }
    }

    fn from_bool(obligation: impl Into<String>, ok: bool, detail: impl Into<String>) -> CheckResult {
        if ok {
            CheckResult::pass(obligation)
        } else {
            CheckResult::fail(obligation, detail)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub name: String,
    pub acting: Vec<String>,
    pub degree: usize,
    pub expected_degree: usize,
    pub checks: Vec<CheckResult>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub tower: String,
    pub field: String,
    pub group_order: usize,
    pub total_degree: usize,
    pub jacobian_rank: usize,
    pub steps: Vec<StepReport>,
    pub global: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl TowerReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(StepReport::passed) && self.global.iter().all(|c| c.passed)
    }

    pub fn obligation_count(&self) -> usize {
        self.steps.iter().map(|s| s.checks.len()).sum::<usize>() + self.global.len()
    }

    /// The first failed obligation as an error.
    pub fn first_failure(&self) -> Option<Error> {
        for s in &self.steps {
            if let Some(c) = s.checks.iter().find(|c| !c.passed) {
                return Some(Error::CertificateFailure {
                    step: format!("{} ({})", s.index + 1, s.name),
                    obligation: c.obligation.clone(),
                    detail: c.detail.clone(),
                });
            }
        }
        self.global.iter().find(|c| !c.passed).map(|c| Error::CertificateFailure {
            step: "global".into(),
            obligation: c.obligation.clone(),
            detail: c.detail.clone(),
        })
    }

    pub fn into_result(self) -> Result<TowerReport> {
        match self.first_failure() {
            Some(e) => Err(e),
            None => Ok(self),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceFailure {
    pub element: String,
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub checked: usize,
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `σ·g = g` structurally for every generator σ of `group` and every
/// generator g of `gens`.
pub fn verify_invariance(gens: &GeneratorSet, group: &Group) -> Result<InvarianceReport> {
    if group.degree() != gens.vars.len() {
        return Err(Error::ArityMismatch { expected: gens.vars.len(), got: group.degree() });
    }
    let pairs: Vec<(&Perm, usize)> =
        group.generators().iter().flat_map(|s| (0..gens.len()).map(move |i| (s, i))).collect();
    let results = pairs
        .par_iter()
        .map(|(s, i)| Ok((s.to_string(), i, gens.gens[*i].apply_perm(s)? == gens.gens[*i])))
        .collect::<Result<Vec<_>>>()?;
    let failures = results
        .into_iter()
        .filter(|(_, _, ok)| !ok)
        .map(|(el, i, _)| InvarianceFailure { element: el, generator: gens.names[*i].clone() })
        .collect();
    Ok(InvarianceReport { checked: pairs.len(), failures })
}

/// Largest Jacobian rank of `gens` seen over `points` random points.
pub fn jacobian_rank_of_set(gens: &GeneratorSet, seed: u64, points: usize) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stages = [gens.gens.as_slice()];
    match evaluation_extension(gens.field, 1 << 24) {
        Some(ext) => chain_rank(&ext, &stages, gens.vars.len(), &mut rng, points),
        None => chain_rank(&gens.field, &stages, gens.vars.len(), &mut rng, points),
    }
}

/// Rank of the Jacobian of the composite map `stages[n-1] ∘ … ∘ stages[0]`,
/// computed by the chain rule from numeric Jacobians of each stage.
fn chain_rank<S: Scalars>(
    s: &S,
    stages: &[&[RatFunc]],
    arity: usize,
    rng: &mut ChaCha8Rng,
    points: usize,
) -> Result<usize> {
    let mut best = 0;
    let mut usable = 0;
    let mut attempts = 0;
    while usable < points && attempts < points * 20 {
        attempts += 1;
        let mut pt: Vec<S::E> = (0..arity).map(|_| s.random(rng)).collect();
        let mut acc: Option<Vec<Vec<S::E>>> = None;
        let mut ok = true;
        for gens in stages {
            let Ok(j) = jacobian_at(s, gens, &pt) else {
                ok = false;
                break;
            };
            let Ok(next) = gens.iter().map(|g| g.eval_in(s, &pt)).collect::<Result<Vec<_>>>() else {
                ok = false;
                break;
            };
            acc = Some(match acc {
                None => j,
                Some(a) => mat_mul(s, &j, &a),
            });
            pt = next;
        }
        if !ok {
            continue;
        }
        usable += 1;
        best = best.max(rank(s, acc.unwrap_or_default()));
        if best == arity {
            break;
        }
    }
    if usable == 0 {
        return Err(Error::RetriesExhausted(attempts));
    }
    Ok(best)
}

fn mat_mul<S: Scalars>(s: &S, a: &[Vec<S::E>], b: &[Vec<S::E>]) -> Vec<Vec<S::E>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| row.iter().zip(b).fold(s.zero(), |acc, (x, brow)| s.add(&acc, &s.mul(x, &brow[c]))))
                .collect()
        })
        .collect()
}

/// Images of the old generators of `step_index` under each known element.
fn tables_below(t: &Tower, step_index: usize) -> Result<BTreeMap<String, Vec<RatFunc>>> {
    let mut out = BTreeMap::new();
    if step_index == 0 {
        let vars = &t.base_vars;
        for (name, p) in &t.elements {
            let images = (0..vars.len())
                .map(|i| RatFunc::var_at(t.field, vars, i).apply_perm(p))
                .collect::<Result<Vec<_>>>()?;
            out.insert(name.clone(), images);
        }
    } else {
        for a in &t.steps[step_index - 1].actions {
            out.insert(a.element.clone(), a.images.clone());
        }
    }
    Ok(out)
}

fn subgroup(t: &Tower, upto: usize) -> Result<Group> {
    let mut gens: Vec<Perm> = Vec::new();
    for s in &t.steps[..upto] {
        for a in &s.acting {
            let p = t.elements.get(a).ok_or_else(|| Error::Unsupported(format!("unknown element {a}")))?;
            gens.push(p.clone());
        }
    }
    Group::new(t.base_vars.len(), gens)
}

type Obligation<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

fn step_obligations<'a>(
    step: &'a DescentStep,
    below: &'a BTreeMap<String, Vec<RatFunc>>,
) -> Vec<Obligation<'a>> {
    let mut obs: Vec<Obligation<'a>> = Vec::new();
    let f = &step.new.gens;
    for g in &step.acting {
        for (i, fi) in f.iter().enumerate() {
            let name = format!("invariance of {} under {g}", step.new.names[i]);
            obs.push(Box::new(move || match below.get(g) {
                None => CheckResult::fail(name.clone(), format!("no action of {g} on the level below")),
                Some(tbl) => match fi.compose(tbl) {
                    Ok(img) => CheckResult::from_bool(name.clone(), &img == fi, format!("{g}({}) = {img}", fi)),
                    Err(e) => CheckResult::fail(name.clone(), e.to_string()),
                },
            }));
        }
    }
    for a in &step.actions {
        for (i, fi) in f.iter().enumerate() {
            let name = format!("action of {} on {}", a.element, step.new.names[i]);
            obs.push(Box::new(move || {
                let Some(tbl) = below.get(&a.element) else {
                    return CheckResult::fail(name.clone(), format!("no action of {} on the level below", a.element));
                };
                let lhs = fi.compose(tbl);
                let rhs = a.images[i].compose(f);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) => CheckResult::from_bool(name.clone(), l == r, format!("expected {r}, got {l}")),
                    (Err(e), _) | (_, Err(e)) => CheckResult::fail(name.clone(), e.to_string()),
                }
            }));
        }
    }
    let cert = &step.certificate;
    let defs: Vec<RatFunc> = f.iter().cloned().chain(cert.auxiliaries.iter().map(|a| a.definition.clone())).collect();
    let defs = std::sync::Arc::new(defs);
    let n_new = f.len();
    for (k, aux) in cert.auxiliaries.iter().enumerate() {
        let defs = defs.clone();
        obs.push(Box::new(move || {
            let name = format!("minimal polynomial of {}", aux.name);
            if let Some(why) = minpoly_shape_problem(aux.minpoly.num(), aux.minpoly.den(), n_new + k) {
                return CheckResult::fail(name, why);
            }
            let mut subs: Vec<RatFunc> = defs.as_ref().clone();
            subs.push(aux.definition.clone());
            match aux.minpoly.compose(&subs) {
                Ok(v) => CheckResult::from_bool(name, v.is_zero(), format!("evaluates to {v}")),
                Err(e) => CheckResult::fail(name, e.to_string()),
            }
        }));
    }
    for (j, r) in cert.reconstruction.iter().enumerate() {
        let defs = defs.clone();
        obs.push(Box::new(move || {
            let var = step.old_vars.name(j);
            let name = format!("reconstruction of {var}");
            match r.compose(&defs) {
                Ok(v) => {
                    let target = RatFunc::var_at(step.new.field, &step.old_vars, j);
                    CheckResult::from_bool(name, v == target, format!("gives {v}"))
                }
                Err(e) => CheckResult::fail(name, e.to_string()),
            }
        }));
    }
    obs
}

/// `None` when the minimal polynomial is monic in `T`, has a `T`-free
/// denominator, and only involves auxiliaries before index `own`.
fn minpoly_shape_problem(num: &MultiPoly, den: &MultiPoly, own: usize) -> Option<String> {
    let vars = num.vars();
    let Some(t) = vars.index_of(MINPOLY_VAR) else {
        return Some("no variable T".into());
    };
    if den.degree_in(t) > 0 {
        return Some("denominator involves T".into());
    }
    let deg = num.degree_in(t);
    if deg == 0 {
        return Some("does not involve T".into());
    }
    for v in own..t {
        if num.degree_in(v) > 0 || den.degree_in(v) > 0 {
            return Some(format!("involves {}", vars.name(v)));
        }
    }
    let lead = num.to_univariate(t).pop().unwrap_or_else(|| MultiPoly::zero(num.field(), vars));
    if &lead != den {
        return Some("not monic in T".into());
    }
    None
}

/// Run every certificate obligation of `t`.
pub fn verify_tower(t: &Tower, opts: &VerifyOptions) -> TowerReport {
    let group_order = t.group.order().unwrap_or(0);
    let mut steps = Vec::with_capacity(t.steps.len());
    let mut tables = Vec::with_capacity(t.steps.len());
    let mut table_err = Vec::new();
    for k in 0..t.steps.len() {
        match tables_below(t, k) {
            Ok(tb) => tables.push(tb),
            Err(e) => {
                table_err.push(CheckResult::fail(format!("actions below step {}", k + 1), e.to_string()));
                tables.push(BTreeMap::new());
            }
        }
    }
    let mut all: Vec<(usize, Obligation<'_>)> = Vec::new();
    for (k, step) in t.steps.iter().enumerate() {
        for ob in step_obligations(step, &tables[k]) {
            all.push((k, ob));
        }
    }
    let results: Vec<(usize, CheckResult)> = all.par_iter().map(|(k, ob)| (*k, ob())).collect();

    let mut prev_order = 1usize;
    for (k, step) in t.steps.iter().enumerate() {
        let mut checks: Vec<CheckResult> = results.iter().filter(|(i, _)| *i == k).map(|(_, c)| c.clone()).collect();
        let degree = step.degree();
        let (expected, degree_check) = match subgroup(t, k + 1).and_then(|h| {
            let order = h.order()?;
            let normal = subgroup(t, k)?.is_normal_in(&h)?;
            Ok((order, normal))
        }) {
            Ok((order, normal)) => {
                let expected = order / prev_order.max(1);
                let ok = normal && order % prev_order.max(1) == 0 && degree == expected;
                prev_order = order;
                (
                    expected,
                    CheckResult::from_bool(
                        "degree",
                        ok,
                        format!("auxiliary degrees multiply to {degree}, subquotient has order {expected}, normal: {normal}"),
                    ),
                )
            }
            Err(e) => (0, CheckResult::fail("degree", e.to_string())),
        };
        checks.push(degree_check);
        steps.push(StepReport {
            index: k,
            name: step.name.clone(),
            acting: step.acting.clone(),
            degree,
            expected_degree: expected,
            checks,
        });
    }

    let mut global = table_err;
    let total = t.total_degree();
    global.push(CheckResult::from_bool(
        "total degree",
        total == group_order,
        format!("product of step degrees {total}, group order {group_order}"),
    ));
    let chain_group = match subgroup(t, t.steps.len()) {
        Ok(h) => {
            let same = h.order().ok() == Some(group_order)
                && h.generators().iter().all(|g| t.group.contains(g).unwrap_or(false));
            CheckResult::from_bool("acting elements generate the group", same, "subgroup differs from the group")
        }
        Err(e) => CheckResult::fail("acting elements generate the group", e.to_string()),
    };
    global.push(chain_group);

    let stages: Vec<&[RatFunc]> = t.steps.iter().map(|s| s.new.gens.as_slice()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let arity = t.base_vars.len();
    let jr = match evaluation_extension(t.field, 1 << 24) {
        Some(ext) => chain_rank(&ext, &stages, arity, &mut rng, opts.jacobian_points),
        None => chain_rank(&t.field, &stages, arity, &mut rng, opts.jacobian_points),
    };
    let jacobian_rank = *jr.as_ref().unwrap_or(&0);
    global.push(match jr {
        Ok(r) => CheckResult::from_bool("final jacobian rank", r == arity, format!("rank {r} of {arity}")),
        Err(e) => CheckResult::fail("final jacobian rank", e.to_string()),
    });

    // Expanding a broken tower over x can blow up, so skip it once a step
    // has already failed.
    let steps_ok = steps.iter().all(StepReport::passed);
    if (opts.expanded_invariance || t.field.is_cyclo()) && !steps_ok {
        global.push(CheckResult::fail("expansion over x", "skipped because a step certificate failed"));
    } else if opts.expanded_invariance || t.field.is_cyclo() {
        match t.expanded_levels() {
            Ok(levels) => {
                let fin = levels.last().expect("nonempty");
                if opts.expanded_invariance {
                    global.push(match verify_invariance(fin, &t.group) {
                        Ok(r) => CheckResult::from_bool(
                            "expanded invariance",
                            r.passed(),
                            format!("{} of {} fail", r.failures.len(), r.checked),
                        ),
                        Err(e) => CheckResult::fail("expanded invariance", e.to_string()),
                    });
                }
                if t.field.is_cyclo() {
                    global.extend(descent_checks(t, &levels, opts.seed));
                }
            }
            Err(e) => global.push(CheckResult::fail("expansion over x", e.to_string())),
        }
    }

    TowerReport {
        tower: t.name.clone(),
        field: t.field.name(),
        group_order,
        total_degree: total,
        jacobian_rank,
        steps,
        global,
        notes: t.notes.clone(),
    }
}

/// Bookkeeping for descent from K(ζ3) to K: ρ commutes with the group,
/// λ²ρ fixes the generators before the last step, and the final generators
/// are defined over K.
fn descent_checks(t: &Tower, levels: &[GeneratorSet], seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let field = t.field;
    let vars = &t.base_vars;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut commute = true;
    for _ in 0..50 {
        let f = random_ratfunc(&mut rng, field, vars);
        for g in t.group.generators() {
            let (Ok(a), Ok(b)) = (f.apply_perm(g).map(|h| h.cyclo_conjugate()), f.cyclo_conjugate().apply_perm(g))
            else {
                commute = false;
                continue;
            };
            commute &= a == b;
        }
    }
    out.push(CheckResult::from_bool("rho commutes with the group action", commute, "found a non-commuting sample"));

    let lam2 = &catalog().lambda_sq;
    if levels.len() >= 2 {
        let pre = &levels[levels.len() - 2];
        let mut bad = Vec::new();
        for (n, g) in pre.names.iter().zip(&pre.gens) {
            match g.apply_perm(lam2) {
                Ok(h) if h.cyclo_conjugate() == *g => {}
                _ => bad.push(n.clone()),
            }
        }
        out.push(CheckResult::from_bool(
            "lambda^2 rho fixes the generators before the last step",
            bad.is_empty(),
            format!("not fixed: {}", bad.join(", ")),
        ));
    }
    let fin = levels.last().expect("nonempty");
    let bad: Vec<&str> = fin
        .names
        .iter()
        .zip(&fin.gens)
        .filter(|(_, g)| !g.is_defined_over_base())
        .map(|(n, _)| n.as_str())
        .collect();
    out.push(CheckResult::from_bool(
        "final generators defined over the base field",
        bad.is_empty(),
        format!("zeta appears in {}", bad.join(", ")),
    ));
    out
}

fn random_ratfunc(rng: &mut ChaCha8Rng, field: Field, vars: &Vars) -> RatFunc {
    let mut poly = |terms: usize| {
        let ts: Vec<_> = (0..terms)
            .map(|_| {
                let exps: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=1)).collect();
                (Monomial::from_exps(&exps).expect("small exponents"), field.random_elem(rng))
            })
            .collect();
        MultiPoly::from_terms(field, vars, ts)
    };
    let n = poly(3);
    let d = poly(2);
    let d = if d.is_zero() { MultiPoly::one(field, vars) } else { d };
    RatFunc::new(n, d).expect("nonzero denominator")
}
