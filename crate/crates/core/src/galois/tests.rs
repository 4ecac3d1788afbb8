use super::*;
use crate::genpoly::{generic_general, generic_general_printed, specialize};
use crate::permgrp::catalog;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ints(field: Field, v: &[i64]) -> Vec<FieldElem> {
    v.iter().map(|&k| field.from_int(k)).collect()
}

/// Trial division of monic `f` by monic `g` over GF(p).
fn divides(p: u64, f: &[u64], g: &[u64]) -> Option<Vec<u64>> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return None;
    }
    let mut q = vec![0u64; r.len() - dg];
    for i in (0..q.len()).rev() {
        let c = r[i + dg];
        q[i] = c;
        for (j, gj) in g.iter().enumerate() {
            r[i + j] = (r[i + j] + p - c * gj % p) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0).then_some(q)
}

/// All monic polynomials of degree `d` over GF(p) without roots.
fn rootless(p: u64, d: usize) -> Vec<Vec<u64>> {
    let total = p.pow(d as u32);
    (0..total)
        .map(|mut code| {
            let mut g: Vec<u64> = (0..d).map(|_| { let c = code % p; code /= p; c }).collect();
            g.push(1);
            g
        })
        .filter(|g| (0..p).all(|x| g.iter().rev().fold(0, |acc, c| (acc * x + c) % p) != 0))
        .collect()
}

/// Brute-force factorization pattern of a squarefree monic sextic: peel
/// linear roots, then irreducible quadratics, then cubics when a degree-6
/// residual is left.
fn brute_pattern(p: u64, f: &[u64], quad: &[Vec<u64>], cubic: &dyn Fn() -> Vec<Vec<u64>>) -> CycleType {
    let mut parts = Vec::new();
    let mut rest = f.to_vec();
    for x in 0..p {
        if let Some(q) = divides(p, &rest, &[(p - x) % p, 1]) {
            rest = q;
            parts.push(1);
        }
    }
    for g in quad {
        while let Some(q) = divides(p, &rest, g) {
            rest = q;
            parts.push(2);
        }
    }
    if rest.len() == 7 && cubic().iter().any(|g| divides(p, &rest, g).is_some()) {
        parts.extend([3, 3]);
        rest = vec![1];
    }
    if rest.len() > 1 {
        parts.push(rest.len() - 1);
    }
    CycleType::new(parts)
}

fn random_squarefree(p: u64, rng: &mut ChaCha8Rng) -> UniPoly {
    loop {
        let mut c: Vec<u64> = (0..6).map(|_| rng.gen_range(0..p)).collect();
        c.push(1);
        let ctx = PrimeCtx::new(p);
        if is_squarefree(&ctx, &c) {
            return UniPoly { p, coeffs: c };
        }
    }
}

#[test]
fn ddf_matches_brute_force() {
    for (p, n) in [(5u64, 100), (101, 100)] {
        let quad = rootless(p, 2);
        let cubic_cache = std::sync::OnceLock::new();
        let cubic = || cubic_cache.get_or_init(|| rootless(p, 3)).clone();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        for _ in 0..n {
            let f = random_squarefree(p, &mut rng);
            let got = distinct_degree_pattern(&f).unwrap();
            assert_eq!(got, brute_pattern(p, &f.coeffs, &quad, &cubic), "{:?} mod {p}", f.coeffs);
            assert_eq!(got.parts().iter().sum::<usize>(), 6);
        }
    }
}

fn product_one_to_six() -> SpecializedSextic {
    let q = Field::Rational;
    let c = ints(q, &[-21, 175, -735, 1624, -1764, 720]);
    SpecializedSextic::explicit(q, c).unwrap()
}

#[test]
fn fixture_reductions() {
    let s = product_one_to_six();
    // six distinct roots mod 7
    let Reduction::Poly(f) = reduce_mod_p(&s, 7) else { panic!() };
    assert_eq!(distinct_degree_pattern(&f).unwrap(), CycleType::new(vec![1; 6]));
    // 1 and 6 collide mod 5
    assert_eq!(reduce_mod_p(&s, 5), Reduction::Skip(SkipReason::NotSquarefree));
    assert!(matches!(reduce_mod_p(&s, 11), Reduction::Poly(_)));
    let f = UniPoly::new(2, &[1, 1, 0, 0, 0, 0, 1]).unwrap();
    assert_eq!(distinct_degree_pattern(&f).unwrap(), CycleType::new(vec![6]));
    let sq = UniPoly::new(3, &[1, 2, 1]).unwrap();
    assert!(matches!(distinct_degree_pattern(&sq), Err(Error::NotSquarefree)));
}

#[test]
fn pole_and_empty_ranges() {
    let q = Field::Rational;
    let g = generic_general(q).unwrap();
    let s = specialize(&g, &ints(q, &[1, 2, 7, 3, 5])).unwrap();
    assert_eq!(reduce_mod_p(&s, 7), Reduction::Skip(SkipReason::Pole));
    assert!(matches!(sample_census(&s, 14, 16), Err(Error::NoUsablePrimes)));
    assert!(matches!(sample_census(&s, 10, 2), Err(Error::NoUsablePrimes)));
}

#[test]
fn total_variation_of_exact_census_is_zero() {
    let g1 = catalog().g1.cycle_census().unwrap();
    let mut obs = FrobeniusCensus::default();
    for (ct, f) in &g1 {
        let n = (f.to_f64() * 72.0).round() as usize;
        obs.counts.insert(ct.clone(), n);
        obs.total += n;
    }
    let cmp = compare_census(&obs, &g1);
    assert!(cmp.tv.abs() < 1e-12);
    assert!(cmp.containment);
    obs.counts.insert(CycleType::new(vec![5, 1]), 72);
    obs.total += 72;
    let cmp = compare_census(&obs, &g1);
    assert!((cmp.tv - 0.5).abs() < 1e-12);
    assert_eq!(cmp.foreign, vec![CycleType::new(vec![5, 1]).to_string()]);
}

#[test]
fn general_form_stays_inside_g1() {
    let q = Field::Rational;
    let g = generic_general(q).unwrap();
    let g1 = catalog().g1.cycle_census().unwrap();
    let s = specialize(&g, &ints(q, &[3, -7, 2, 11, -5])).unwrap();
    let census = sample_census(&s, 5, 3000).unwrap();
    let cmp = compare_census(&census, &g1);
    assert!(cmp.containment, "{:?}", cmp.foreign);
}

#[test]
fn printed_form_leaves_g1() {
    let q = Field::Rational;
    let g = generic_general_printed(q).unwrap();
    let g1 = catalog().g1.cycle_census().unwrap();
    let s = specialize(&g, &ints(q, &[3, -7, 2, 11, -5])).unwrap();
    let cmp = compare_census(&sample_census(&s, 5, 3000).unwrap(), &g1);
    assert!(!cmp.containment);
}

#[test]
fn char2_function_field_census_stays_inside_g1() {
    let g1 = catalog().g1.cycle_census().unwrap();
    let census = char2_census(&[0b101, 0b11, 0b1, 0b110, 0b1001], 8).unwrap();
    assert!(census.total > 40);
    let cmp = compare_census(&census, &g1);
    assert!(cmp.containment, "{:?}", cmp.foreign);
    assert_eq!(binary_irreducibles(4), vec![0b10011, 0b11001, 0b11111]);
    assert!(char2_census(&[1, 2], 3).is_err());
}
