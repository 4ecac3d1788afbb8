use rand::Rng;

use super::RatFunc;
use crate::algebra::Scalars;
use crate::error::{Error, Result};

/// Matrix of partials `∂gens_i/∂x_j` at `point`, using
/// `∂(N/D) = (∂N·D − N·∂D) / D²` on values.
pub fn jacobian_at<S: Scalars>(s: &S, gens: &[RatFunc], point: &[S::E]) -> Result<Vec<Vec<S::E>>> {
    let mut rows = Vec::with_capacity(gens.len());
    for g in gens {
        let n = g.vars().len();
        if point.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: point.len() });
        }
        let nv = g.num().eval_in(s, point).ok_or(Error::PoleAtPoint)?;
        let dv = g.den().eval_in(s, point).ok_or(Error::PoleAtPoint)?;
        let dinv = s.inv(&dv).ok_or(Error::PoleAtPoint)?;
        let dinv2 = s.mul(&dinv, &dinv);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let nj = g.num().derivative_at(j).eval_in(s, point).ok_or(Error::PoleAtPoint)?;
            let entry = if g.is_polynomial() {
                nj
            } else {
                let dj = g.den().derivative_at(j).eval_in(s, point).ok_or(Error::PoleAtPoint)?;
                let top = s.sub(&s.mul(&nj, &dv), &s.mul(&nv, &dj));
                s.mul(&top, &dinv2)
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Rank by Gaussian elimination.
pub fn rank<S: Scalars>(s: &S, mut m: Vec<Vec<S::E>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !s.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = s.inv(&m[r][c]).expect("nonzero pivot");
        for i in 0..rows {
            if i != r && !s.is_zero(&m[i][c]) {
                let f = s.mul(&m[i][c], &inv);
                for k in c..cols {
                    let v = s.sub(&m[i][k], &s.mul(&f, &m[r][k]));
                    m[i][k] = v;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn jacobian_rank_at<S: Scalars>(s: &S, gens: &[RatFunc], point: &[S::E]) -> Result<usize> {
    Ok(rank(s, jacobian_at(s, gens, point)?))
}

/// Random point at which every function in `funcs` is defined, retrying up
/// to `retries` times.
pub fn random_regular_point<S: Scalars, R: Rng + ?Sized>(
    s: &S,
    rng: &mut R,
    funcs: &[&RatFunc],
    arity: usize,
    retries: usize,
) -> Result<Vec<S::E>> {
    for _ in 0..retries {
        let pt: Vec<S::E> = (0..arity).map(|_| s.random(rng)).collect();
        if funcs.iter().all(|f| f.eval_in(s, &pt).is_ok()) {
            return Ok(pt);
        }
    }
    Err(Error::RetriesExhausted(retries))
}
