//! Stand-alone generator constructions: Masuda's C3 invariants, the star
//! set u1..u6, wreath-product invariants in S_2n and Artin–Schreier
//! invariants of a p-cycle in characteristic p.

use num_integer::binomial;
use serde::Serialize;

use super::verify::{jacobian_rank_of_set, verify_invariance, InvarianceReport};
use super::{g3_char3_tower, GeneratorSet};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::permgrp::{Group, Perm};
use crate::polyring::Vars;
use crate::ratfield::RatFunc;

const MASUDA_U: &str = "(x^2*y + y^2*z + z^2*x - 3*x*y*z) / (x^2 + y^2 + z^2 - x*y - y*z - z*x)";
const MASUDA_V: &str = "(x*y^2 + y*z^2 + z*x^2 - 3*x*y*z) / (x^2 + y^2 + z^2 - x*y - y*z - z*x)";

/// Masuda's pair `(u, v)` over the variables `x, y, z`; with `x + y + z`
/// they generate the invariants of the 3-cycle.
pub fn masuda_generators(field: Field) -> (RatFunc, RatFunc) {
    let vars = Vars::new(&["x", "y", "z"]);
    let u = RatFunc::parse(field, &vars, MASUDA_U).expect("fixed expression");
    let v = RatFunc::parse(field, &vars, MASUDA_V).expect("fixed expression");
    (u, v)
}

/// Block sums and Masuda pairs on `(x1, x2, x3)` and `(x4, x5, x6)`.
pub fn star_generators(field: Field) -> GeneratorSet {
    let (u, v) = masuda_generators(field);
    let xs = Vars::numbered("x", 6);
    let x = RatFunc::vars_of(field, &xs);
    let block = |o: usize| {
        let images = [x[o].clone(), x[o + 1].clone(), x[o + 2].clone()];
        let s = &(&images[0] + &images[1]) + &images[2];
        let a = u.compose(&images).expect("the Masuda denominator is nonzero");
        let b = v.compose(&images).expect("the Masuda denominator is nonzero");
        [s, a, b]
    };
    let gens: Vec<RatFunc> = block(0).into_iter().chain(block(3)).collect();
    GeneratorSet {
        field,
        vars: xs,
        names: (1..=6).map(|i| format!("u{i}")).collect(),
        gens,
    }
}

/// Elementary symmetric polynomials e1..en of `xs`.
fn elementary(field: Field, vars: &Vars, xs: &[RatFunc]) -> Vec<RatFunc> {
    let mut e = vec![RatFunc::one(field, vars)];
    for x in xs {
        let mut next = e.clone();
        next.push(RatFunc::zero(field, vars));
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(|| RatFunc::zero(field, vars)) + &(x * &e[k - 1]);
        }
        e = next;
    }
    e.remove(0);
    e
}

/// The group generated by `(12)`, the n-cycle on the first block and the
/// block swap, inside S_2n.
pub fn wreath_group(n: usize) -> Result<Group> {
    if !(2..=6).contains(&n) {
        return Err(Error::Unsupported(format!("wreath construction supports 2 <= n <= 6, got {n}")));
    }
    let deg = 2 * n;
    let mut t = (1..=deg).collect::<Vec<_>>();
    t.swap(0, 1);
    let transposition = Perm::from_images(&t)?;
    let cycle = Perm::from_images(&(0..deg).map(|i| if i < n { (i + 1) % n + 1 } else { i + 1 }).collect::<Vec<_>>())?;
    let swap = Perm::from_images(&(0..deg).map(|i| (i + n) % deg + 1).collect::<Vec<_>>())?;
    Ok(Group::new(deg, vec![transposition, cycle, swap])?.named(&format!("S{n} wr C2")))
}

/// Invariants of [`wreath_group`]: blockwise elementary symmetric functions
/// `y`, then `z_i = y_i + y_{n+i}`, `z_{n+1} = y1 y_{n+1}` and
/// `z_{n+j} = y1 y_{n+j} + y_{n+1} y_j`.
pub fn wreath_generators(n: usize, field: Field) -> Result<GeneratorSet> {
    if !(2..=6).contains(&n) {
        return Err(Error::Unsupported(format!("wreath construction supports 2 <= n <= 6, got {n}")));
    }
    let vars = Vars::numbered("x", 2 * n);
    let x = RatFunc::vars_of(field, &vars);
    let mut y = elementary(field, &vars, &x[..n]);
    y.extend(elementary(field, &vars, &x[n..]));
    let mut gens: Vec<RatFunc> = (0..n).map(|i| &y[i] + &y[n + i]).collect();
    gens.push(&y[0] * &y[n]);
    for j in 1..n {
        gens.push(&(&y[0] * &y[n + j]) + &(&y[n] * &y[j]));
    }
    Ok(GeneratorSet { field, vars, names: (1..=2 * n).map(|i| format!("z{i}")).collect(), gens })
}

fn as_guard(p: u64) -> Result<()> {
    if [2, 3, 5, 7].contains(&p) {
        Ok(())
    } else {
        Err(Error::WrongCharacteristic(format!("Artin-Schreier invariants are built for p in {{2, 3, 5, 7}}, got {p}")))
    }
}

/// The transformed coordinates `y_i = (−1)^{i−1} Σ_j C(i+j−2, i−1) x_j`.
fn as_coordinates(p: u64) -> Result<(Field, Vars, Vec<RatFunc>)> {
    as_guard(p)?;
    let field = Field::prime(p)?;
    let n = p as usize;
    let vars = Vars::numbered("x", n);
    let x = RatFunc::vars_of(field, &vars);
    let y = (1..=n)
        .map(|i| {
            let mut acc = RatFunc::zero(field, &vars);
            for (j, xj) in x.iter().enumerate() {
                let c = binomial((i + j - 1) as i64, (i - 1) as i64);
                acc = &acc + &xj.scale(&field.from_int(c.rem_euclid(p as i64)));
            }
            if i % 2 == 0 {
                acc.neg()
            } else {
                acc
            }
        })
        .collect();
    Ok((field, vars, y))
}

/// Invariants of the p-cycle `(12…p)` acting on `x1..xp` over GF(p):
/// `z1 = y1`, `z2 = θ^p − θ` with `θ = y2/y1`, and for `k ≥ 3`
/// `z_k = Σ_{j<k} (−1)^j C(θ+j−1, j) y_{k−j} / y1`.
pub fn artin_schreier_cp(p: u64) -> Result<GeneratorSet> {
    let (field, vars, y) = as_coordinates(p)?;
    let n = p as usize;
    let theta = y[1].checked_div(&y[0])?;
    let one = RatFunc::one(field, &vars);
    let mut gens = vec![y[0].clone(), &theta.pow(p as i32)? - &theta];
    for k in 3..=n {
        // running value of C(θ+j−1, j)
        let mut binom = one.clone();
        let mut acc = RatFunc::zero(field, &vars);
        for j in 0..k {
            if j > 0 {
                let factor = &theta + &RatFunc::from_int(field, &vars, j as i64 - 1);
                binom = (&binom * &factor).scale(&field.from_int(j as i64).inv()?);
            }
            let term = &binom * &y[k - j - 1].checked_div(&y[0])?;
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        gens.push(acc);
    }
    Ok(GeneratorSet { field, vars, names: (1..=n).map(|i| format!("z{i}")).collect(), gens })
}

#[derive(Clone, Debug, Serialize)]
pub struct ArtinSchreierReport {
    pub p: u64,
    pub invariance: InvarianceReport,
    /// `σ(y1) = y1` and `σ(y_i) = y_i + y_{i−1}`.
    pub shift_action: bool,
    pub jacobian_rank: usize,
    /// For p = 3: agreement with the first block of the characteristic-3
    /// G3 tower.
    pub matches_block_formulas: Option<bool>,
}

impl ArtinSchreierReport {
    pub fn passed(&self) -> bool {
        self.invariance.passed()
            && self.shift_action
            && self.jacobian_rank == self.p as usize
            && self.matches_block_formulas != Some(false)
    }
}

pub fn artin_schreier_report(p: u64, seed: u64) -> Result<ArtinSchreierReport> {
    let gens = artin_schreier_cp(p)?;
    let (_, _, y) = as_coordinates(p)?;
    let n = p as usize;
    let sigma = Perm::from_images(&(0..n).map(|i| (i + 1) % n + 1).collect::<Vec<_>>())?;
    let group = Group::new(n, vec![sigma.clone()])?;
    let invariance = verify_invariance(&gens, &group)?;
    let mut shift_action = y[0].apply_perm(&sigma)? == y[0];
    for i in 1..n {
        shift_action &= y[i].apply_perm(&sigma)? == &y[i] + &y[i - 1];
    }
    let jacobian_rank = jacobian_rank_of_set(&gens, seed, 5)?;
    let matches_block_formulas = if p == 3 {
        let tower = g3_char3_tower()?;
        let levels = tower.expanded_levels()?;
        let block = &levels[1];
        let mut same = true;
        for (i, g) in gens.gens.iter().enumerate() {
            same &= g.embed_in(&block.vars)? == block.gens[i];
        }
        Some(same)
    } else {
        None
    };
    Ok(ArtinSchreierReport { p, invariance, shift_action, jacobian_rank, matches_block_formulas })
}
