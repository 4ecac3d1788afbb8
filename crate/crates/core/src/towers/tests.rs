use super::*;
use crate::algebra::FieldElem;
use crate::permgrp::catalog;
use crate::Rational;

fn rf(field: Field, vars: &Vars, s: &str) -> RatFunc {
    RatFunc::parse(field, vars, s).unwrap()
}

fn assert_verified(t: &Tower) -> TowerReport {
    let rep = verify_tower(t, &VerifyOptions::default());
    if let Some(e) = rep.first_failure() {
        panic!("{} over {}: {e}", t.name, t.field.name());
    }
    rep
}

fn gf(p: u64) -> Field {
    Field::Prime(p)
}

#[test]
fn masuda_pair_values_and_invariance() {
    let q = Field::Rational;
    let (u, v) = masuda_generators(q);
    let pt = |a: i64, b: i64, c: i64| vec![q.from_int(a), q.from_int(b), q.from_int(c)];
    assert!(u.eval(&pt(1, 0, 0)).unwrap().is_zero());
    assert!(v.eval(&pt(1, 0, 0)).unwrap().is_zero());
    assert_eq!(u.eval(&pt(1, 2, 4)).unwrap(), FieldElem::Rational(Rational::new(10, 7).unwrap()));
    assert_eq!(v.eval(&pt(1, 2, 4)).unwrap(), FieldElem::Rational(Rational::new(16, 7).unwrap()));
    let c3 = Perm::parse(3, "(123)").unwrap();
    assert_eq!(u.apply_perm(&c3).unwrap(), u);
    assert_eq!(v.apply_perm(&c3).unwrap(), v);
    let vars = u.vars().clone();
    let set = GeneratorSet {
        field: q,
        vars: vars.clone(),
        names: vec!["s".into(), "u".into(), "v".into()],
        gens: vec![rf(q, &vars, "x + y + z"), u, v],
    };
    assert_eq!(jacobian_rank_of_set(&set, 1, 5).unwrap(), 3);
}

/// Independent check of the Masuda cubic: x1, x2, x3 are the roots, so the
/// coefficients must be the elementary symmetric functions of the block.
#[test]
fn masuda_cubic_coefficients_are_symmetric_functions() {
    for field in [Field::Rational, gf(2), gf(3), gf(5)] {
        let t = g4_tower(field).unwrap();
        let step = &t.steps[0];
        let aux = &step.certificate.auxiliaries[0];
        let x = &t.base_vars;
        let mut subs: Vec<RatFunc> = step.new.gens.clone();
        subs.extend(step.certificate.auxiliaries.iter().map(|a| a.definition.clone()));
        subs.push(rf(field, x, "0"));
        // constant term of the cubic is −e3
        let c0 = aux.minpoly.compose(&subs).unwrap();
        assert_eq!(c0, rf(field, x, "-x1*x2*x3"), "{}", field.name());
    }
}

#[test]
fn star_generators_match_spec_examples() {
    let q = Field::Rational;
    let s = star_generators(q);
    let pt: Vec<FieldElem> = [0, 0, 0, 1, 1, 0].iter().map(|&k| q.from_int(k)).collect();
    assert_eq!(s.gens[3].eval(&pt).unwrap(), q.from_int(2));
    let c = catalog();
    assert!(verify_invariance(&s, &c.c3xc3).unwrap().passed());
    let swapped: Vec<RatFunc> = s.gens.iter().map(|g| g.apply_perm(&c.tau).unwrap()).collect();
    assert_eq!(swapped, vec![s.gens[3].clone(), s.gens[4].clone(), s.gens[5].clone(), s.gens[0].clone(), s.gens[1].clone(), s.gens[2].clone()]);
    assert_eq!(g4_tower(q).unwrap().steps[0].new.gens, s.gens);
}

#[test]
fn g1_tower_verifies_in_all_characteristics() {
    for field in [Field::Rational, gf(2), gf(3), gf(5)] {
        let t = g1_tower(field).unwrap();
        let rep = assert_verified(&t);
        assert_eq!(rep.total_degree, 72);
        assert_eq!(rep.jacobian_rank, 6);
    }
}

#[test]
fn g1_final_set_is_g1_invariant_but_not_s6_invariant() {
    let t = g1_tower(Field::Rational).unwrap();
    let fin = t.expanded_final().unwrap();
    let c = catalog();
    assert!(verify_invariance(&fin, &c.g1).unwrap().passed());
    let s6 = verify_invariance(&fin, &c.s6).unwrap();
    assert!(!s6.passed());
    assert!(s6.failures.iter().any(|f| f.generator == "z4"));
    let w = wreath_generators(3, Field::Rational).unwrap();
    assert_eq!(w.gens, fin.gens);
}

#[test]
fn g4_and_g3_direct_verify() {
    for field in [Field::Rational, gf(2), gf(3), gf(5)] {
        let rep = assert_verified(&g4_tower(field).unwrap());
        assert_eq!(rep.total_degree, 18);
        let rep = assert_verified(&g3_tower_direct(field).unwrap());
        assert_eq!(rep.total_degree, 36);
    }
}

#[test]
fn v5_must_use_the_u_form() {
    let t = g4_tower(Field::Rational).unwrap();
    let v = &t.steps[1].new;
    let u = &t.steps[1].old_vars;
    assert_eq!(v.gens[4], rf(Field::Rational, u, "u1*u5 + u4*u2"));
    // the alternative u1*u5 + u4*u5 is not τ-invariant
    let mut bad = t.clone();
    bad.steps[1].new.gens[4] = rf(Field::Rational, u, "u1*u5 + u4*u5");
    assert!(!verify_tower(&bad, &VerifyOptions::default()).passed());
}

#[test]
fn g2_tower_case_a_and_case_b() {
    for field in [Field::Rational, gf(3), gf(5)] {
        let t = g2_tower(field).unwrap();
        assert_eq!(t.steps[2].certificate.auxiliaries[0].name, "s3");
        let rep = assert_verified(&t);
        assert_eq!(rep.total_degree, 36);
    }
    let t = g2_tower(gf(2)).unwrap();
    assert_eq!(t.steps[2].certificate.auxiliaries[0].name, "t5");
    let rep = assert_verified(&t);
    assert_eq!(rep.total_degree, 36);
}

#[test]
fn s3_squared_minus_t3_squared_is_four() {
    let q = Field::Rational;
    let w = Vars::numbered("w", 6);
    let s3 = rf(q, &w, "w3 + 1/w3");
    let t3 = rf(q, &w, "w3 - 1/w3");
    assert_eq!(&(&s3 * &s3) - &(&t3 * &t3), RatFunc::from_int(q, &w, 4));
}

#[test]
fn zeta_descent_verifies() {
    for base in [Field::Rational, gf(2), gf(5)] {
        let field = Field::cyclo_over(base).unwrap();
        let t = g3_descent_zeta(field).unwrap();
        let rep = assert_verified(&t);
        assert_eq!(rep.total_degree, 36);
        assert!(rep.global.iter().any(|c| c.obligation.contains("base field")));
    }
    assert!(matches!(g3_descent_zeta(Field::Rational), Err(Error::NeedsCycloField)));
}

#[test]
fn zeta_descent_sigma1_scales_y2() {
    let field = Field::CycloRational;
    let t = g3_descent_zeta(field).unwrap();
    let y = &t.steps[0].new;
    let img = y.gens[1].apply_perm(&catalog().sigma1).unwrap();
    let zeta = field.zeta().unwrap();
    assert_eq!(img, y.gens[1].scale(&zeta));
}

#[test]
fn char3_tower_verifies() {
    let t = g3_char3_tower().unwrap();
    let rep = assert_verified(&t);
    assert_eq!(rep.total_degree, 36);
    // σ1(z2) = z2 + 1 on the auxiliary θ = y2/y1
    let x = &t.base_vars;
    let theta = rf(gf(3), x, "(-x1 + x2)/(x1 + x2 + x3)");
    assert_eq!(theta.apply_perm(&catalog().sigma1).unwrap(), &theta + &RatFunc::one(gf(3), x));
    let lam = t.steps[2].action("lambda2").unwrap();
    let u = &t.steps[2].new_vars;
    assert_eq!(lam.images[1], rf(gf(3), u, "-u2"));
    assert_eq!(lam.images[4], rf(gf(3), u, "-u5"));
    assert!(matches!(tower_for("G3", Field::Rational, TowerPath::ArtinSchreier), Err(Error::WrongCharacteristic(_))));
}

#[test]
fn expanded_invariance_for_small_towers() {
    let opts = VerifyOptions { expanded_invariance: true, ..VerifyOptions::default() };
    for t in [g1_tower(Field::Rational).unwrap(), g4_tower(gf(5)).unwrap(), g3_char3_tower().unwrap()] {
        let rep = verify_tower(&t, &opts);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }
}

#[test]
fn mutations_are_detected() {
    let towers = [
        g1_tower(Field::Rational).unwrap(),
        g4_tower(Field::Rational).unwrap(),
        g3_tower_direct(gf(5)).unwrap(),
        g2_tower(Field::Rational).unwrap(),
        g2_tower(gf(2)).unwrap(),
        g3_char3_tower().unwrap(),
    ];
    for t in towers {
        for (step, _) in t.steps.iter().enumerate() {
            for gen in 0..6 {
                let mut m = t.clone();
                m.mutate(Mutation::AddOne { step, gen }).unwrap();
                let rep = verify_tower(&m, &VerifyOptions::default());
                assert!(!rep.passed(), "{} step {step} gen {gen} survived +1", t.name);
            }
        }
    }
}

#[test]
fn spec_mutation_z5_plus_z4_breaks_reconstruction() {
    let mut t = g1_tower(Field::Rational).unwrap();
    t.mutate(Mutation::AddOther { step: 1, gen: 4, other: 3 }).unwrap();
    let rep = verify_tower(&t, &VerifyOptions::default());
    let failed: Vec<&str> =
        rep.steps[1].checks.iter().filter(|c| !c.passed).map(|c| c.obligation.as_str()).collect();
    assert!(failed.iter().any(|o| o.starts_with("reconstruction")), "{failed:?}");
}

#[test]
fn wreath_generators_small_cases() {
    for n in [2, 3] {
        let g = wreath_generators(n, Field::Rational).unwrap();
        let grp = wreath_group(n).unwrap();
        assert!(verify_invariance(&g, &grp).unwrap().passed());
        assert_eq!(jacobian_rank_of_set(&g, 7, 5).unwrap(), 2 * n);
    }
    let g2 = wreath_group(2).unwrap();
    assert_eq!(g2.order().unwrap(), 8);
    assert!(wreath_generators(7, Field::Rational).is_err());
}

#[test]
fn artin_schreier_invariants() {
    for p in [2, 3, 5, 7] {
        let rep = artin_schreier_report(p, 1).unwrap();
        assert!(rep.passed(), "p = {p}: {rep:?}");
    }
    assert_eq!(artin_schreier_report(3, 1).unwrap().matches_block_formulas, Some(true));
    let z = artin_schreier_cp(2).unwrap();
    assert_eq!(z.gens[0], rf(gf(2), &z.vars, "x1 + x2"));
    assert!(matches!(artin_schreier_cp(11), Err(Error::WrongCharacteristic(_))));
}

#[test]
fn tower_for_dispatch() {
    assert_eq!(tower_for("g1", gf(5), TowerPath::Direct).unwrap().name, "G1");
    assert_eq!(tower_for("G3", gf(5), TowerPath::Descent).unwrap().field, Field::CycloPrime(5));
    assert!(tower_for("G2", gf(5), TowerPath::Descent).is_err());
    assert!(tower_for("A6", gf(5), TowerPath::Direct).is_err());
    assert_eq!("artin-schreier".parse::<TowerPath>().unwrap(), TowerPath::ArtinSchreier);
}
