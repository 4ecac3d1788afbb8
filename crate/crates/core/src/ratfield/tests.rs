use super::*;
use crate::algebra::PrimeCtx;
use crate::permgrp::catalog;
use crate::polyring::Monomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn xs(n: usize) -> Vars {
    Vars::numbered("x", n)
}

fn rf(field: Field, vars: &Vars, s: &str) -> RatFunc {
    RatFunc::parse(field, vars, s).unwrap()
}

const MASUDA_U: &str =
    "(x1^2*x2 + x2^2*x3 + x3^2*x1 - 3*x1*x2*x3) / (x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x3*x1)";

fn ints(field: Field, v: &[i64]) -> Vec<FieldElem> {
    v.iter().map(|&k| field.from_int(k)).collect()
}

fn random_rf(rng: &mut ChaCha8Rng, field: Field, vars: &Vars) -> RatFunc {
    let mut poly = |terms: usize| {
        let ts = (0..terms).map(|_| {
            let exps: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial::from_exps(&exps).unwrap(), field.random_elem(rng))
        });
        MultiPoly::from_terms(field, vars, ts)
    };
    let n = poly(3);
    let mut d = poly(2);
    if d.is_zero() {
        d = MultiPoly::one(field, vars);
    }
    RatFunc::new(n, d).unwrap()
}

#[test]
fn field_operations() {
    let v = xs(2);
    let q = Field::Rational;
    let a = rf(q, &v, "x1/x2");
    let b = rf(q, &v, "x2/x1");
    assert!((&a * &b).is_one());
    assert_eq!(&a + &RatFunc::zero(q, &v), a);
    let c = rf(q, &v, "(x1^2 - x2^2)/(x1 - x2)");
    assert_eq!(c, rf(q, &v, "x1 + x2"));
    assert!(c.is_polynomial());
    assert!(matches!(a.checked_div(&RatFunc::zero(q, &v)), Err(Error::DivisionByZero)));
    assert_eq!(&(&a - &a), &RatFunc::zero(q, &v));
    let half = rf(q, &v, "x1/(2*x2 + 4)");
    assert_eq!(half.to_string(), "1/2*x1 / (x2 + 2)");
    assert_eq!(rf(q, &v, &half.to_string()), half);
}

#[test]
fn permutation_action() {
    let v = xs(6);
    let q = Field::Rational;
    let c = catalog();
    assert_eq!(rf(q, &v, "x1").apply_perm(&c.sigma1).unwrap(), rf(q, &v, "x2"));
    assert_eq!(rf(q, &v, "x1 + x2 + x3").apply_perm(&c.tau).unwrap(), rf(q, &v, "x4 + x5 + x6"));
    let f = rf(q, &v, MASUDA_U);
    assert_eq!(f.apply_perm(&Perm::identity(6)).unwrap(), f);
    assert_eq!(f.apply_perm(&c.sigma1).unwrap(), f);
    assert!(matches!(f.apply_perm(&Perm::identity(5)), Err(Error::ArityMismatch { .. })));
}

#[test]
fn composition() {
    let vs = Vars::numbered("v", 6);
    let us = Vars::numbered("u", 6);
    let q = Field::Rational;
    let f = RatFunc::var(q, &vs, "v1").unwrap();
    let mut images = RatFunc::vars_of(q, &us);
    images[0] = rf(q, &us, "u1 + u4");
    assert_eq!(f.compose(&images).unwrap(), rf(q, &us, "u1 + u4"));

    let v2 = xs(2);
    let t = Vars::new(&["t"]);
    let g = rf(q, &v2, "x1/x2");
    let tt = rf(q, &t, "t");
    assert!(g.compose(&[tt.clone(), tt]).unwrap().is_one());
    let inv = rf(q, &xs(1), "1/x1");
    assert!(matches!(inv.compose(&[RatFunc::zero(q, &t)]), Err(Error::SubstitutionPole)));

    // shared and distinct image denominators
    let h = rf(q, &v2, "(x1^2 + x2)/(x1 - x2^3)");
    let ims = [rf(q, &t, "(t+1)/(t-1)"), rf(q, &t, "t/(t-1)")];
    let direct = {
        let a = &ims[0];
        let b = &ims[1];
        &(&(a * a) + b) / &(a - &(&(b * b) * b))
    };
    assert_eq!(h.compose(&ims).unwrap(), direct);
}

#[test]
fn masuda_values() {
    let v = xs(3);
    let q = Field::Rational;
    let u = rf(q, &v, MASUDA_U);
    assert_eq!(u.eval(&ints(q, &[1, 2, 4])).unwrap(), FieldElem::Rational(crate::Rational::new(10, 7).unwrap()));
    assert!(u.eval(&ints(q, &[1, 0, 0])).unwrap().is_zero());
    assert!(matches!(u.eval(&ints(q, &[1, 1, 1])), Err(Error::PoleAtPoint)));
}

#[test]
fn jacobian_ranks() {
    let v = xs(6);
    let q = Field::Rational;
    let id = RatFunc::vars_of(q, &v);
    let pt = ints(q, &[3, -1, 4, 1, -5, 9]);
    assert_eq!(jacobian_rank_at(&q, &id, &pt).unwrap(), 6);
    let mut rep = id.clone();
    rep[1] = rep[0].clone();
    assert!(jacobian_rank_at(&q, &rep, &pt).unwrap() <= 5);
    let gf = PrimeCtx::new(10007);
    let pt: Vec<u64> = vec![5, 17, 123, 9, 4000, 77];
    assert_eq!(jacobian_rank_at(&gf, &id, &pt).unwrap(), 6);
    let pole = vec![rf(q, &v, "1/x1")];
    assert!(matches!(jacobian_at(&q, &pole, &ints(q, &[0, 1, 1, 1, 1, 1])), Err(Error::PoleAtPoint)));
}

#[test]
fn derivative_matches_quotient_rule() {
    let v = xs(2);
    let q = Field::Rational;
    let f = rf(q, &v, "x1^2/(x1 + x2)");
    assert_eq!(f.derivative("x1").unwrap(), rf(q, &v, "(x1^2 + 2*x1*x2)/(x1 + x2)^2"));
    let pt = ints(q, &[2, 3]);
    let m = jacobian_at(&q, &[f.clone()], &pt).unwrap();
    assert_eq!(m[0][0], f.derivative_at(0).eval(&pt).unwrap());
    assert_eq!(m[0][1], f.derivative_at(1).eval(&pt).unwrap());
}

#[test]
fn normalization_is_idempotent() {
    let v = xs(3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..500 {
        let field = if i % 2 == 0 { Field::Rational } else { Field::Prime(7) };
        let f = random_rf(&mut rng, field, &v);
        assert_eq!(RatFunc::new(f.num().clone(), f.den().clone()).unwrap(), f);
        assert!(f.num().gcd(f.den()).is_one());
        assert!(f.den().leading_coeff().unwrap().is_one());
    }
}

#[test]
fn action_is_an_automorphism() {
    let v = xs(6);
    let els = catalog().g1.elements().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let f = random_rf(&mut rng, Field::Rational, &v);
        let g = random_rf(&mut rng, Field::Rational, &v);
        let s = &els[rng.gen_range(0..els.len())];
        let t = &els[rng.gen_range(0..els.len())];
        let fg = (&f * &g).apply_perm(s).unwrap();
        assert_eq!(fg, &f.apply_perm(s).unwrap() * &g.apply_perm(s).unwrap());
        // σ then τ is τσ
        let two = f.apply_perm(s).unwrap().apply_perm(t).unwrap();
        assert_eq!(two, f.apply_perm(&(t * s)).unwrap());
    }
}

#[test]
fn composition_commutes_with_evaluation() {
    let v = xs(3);
    let w = Vars::numbered("t", 2);
    let q = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 200 {
        let f = random_rf(&mut rng, q, &v);
        let ims: Vec<RatFunc> = (0..3).map(|_| random_rf(&mut rng, q, &w)).collect();
        let Ok(c) = f.compose(&ims) else { continue };
        let pt: Vec<FieldElem> = (0..2).map(|_| q.random_elem(&mut rng)).collect();
        let Ok(vals) = ims.iter().map(|g| g.eval(&pt)).collect::<Result<Vec<_>>>() else { continue };
        let (Ok(lhs), Ok(rhs)) = (c.eval(&pt), f.eval(&vals)) else { continue };
        assert_eq!(lhs, rhs);
        checked += 1;
    }
}

#[test]
fn json_round_trip() {
    let v = xs(3);
    let f = rf(Field::Prime(5), &v, "(x1 + 2)/(x2*x3 + 3)");
    let s = serde_json::to_string(&f.to_json()).unwrap();
    let back: RatFuncJson = serde_json::from_str(&s).unwrap();
    assert_eq!(RatFunc::from_json(Field::Prime(5), &back).unwrap(), f);
}
