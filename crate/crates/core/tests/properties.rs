use num_integer::Integer;
use proptest::prelude::*;

use s6inv_core::algebra::finite::dense;
use s6inv_core::algebra::{FiniteField, GfExt, PrimeCtx, Scalars};
use s6inv_core::galois::{compare_census, distinct_degree_pattern, sample_census, FrobeniusCensus, UniPoly};
use s6inv_core::genpoly::SpecializedSextic;
use s6inv_core::permgrp::{catalog, CycleType, Perm};
use s6inv_core::polyring::Vars;
use s6inv_core::ratfield::RatFunc;
use s6inv_core::Field;

fn small_poly() -> impl Strategy<Value = String> {
    (-5i64..=5, 0u32..3, -5i64..=5, 0u32..3, -5i64..=5)
        .prop_map(|(a, e, b, f, c)| format!("{a}*x1^{e}*x2 + {b}*x2^{f}*x3 + {c}*x1*x3 + 1"))
}

fn perm6() -> impl Strategy<Value = Perm> {
    Just((1..=6).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_text_round_trip(a in small_poly(), b in small_poly()) {
        let vars = Vars::numbered("x", 3);
        for field in [Field::Rational, Field::Prime(5)] {
            let f = RatFunc::parse(field, &vars, &format!("({a})/({b})"));
            let Ok(f) = f else { continue };
            prop_assert_eq!(RatFunc::parse(field, &vars, &f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn ratfunc_field_laws(a in small_poly(), b in small_poly()) {
        let vars = Vars::numbered("x", 3);
        let q = Field::Rational;
        let f = RatFunc::parse(q, &vars, &a).unwrap();
        let g = RatFunc::parse(q, &vars, &b).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).checked_div(&g).unwrap(), f.clone());
        }
    }

    #[test]
    fn permutation_action_is_a_homomorphism(a in small_poly(), s in perm6(), t in perm6()) {
        let vars = Vars::numbered("x", 6);
        let f = RatFunc::parse(Field::Rational, &vars, &a).unwrap();
        let st = &s * &t;
        let lhs = f.apply_perm(&st).unwrap();
        let one = f.apply_perm(&t).unwrap().apply_perm(&s).unwrap();
        let other = f.apply_perm(&s).unwrap().apply_perm(&t).unwrap();
        prop_assert!(lhs == one || lhs == other);
        prop_assert!((&s * &s.inverse()).is_identity());
    }

    #[test]
    fn cycle_types_partition_six(s in perm6()) {
        let ct = s.cycle_type();
        prop_assert_eq!(ct.parts().iter().sum::<usize>(), 6);
        let lcm = ct.parts().iter().fold(1u64, |l, &k| l.lcm(&(k as u64)));
        prop_assert_eq!(s.order(), lcm);
    }

    #[test]
    fn group_elements_have_census_types(i in 0usize..72) {
        let g1 = &catalog().g1;
        let census = g1.cycle_census().unwrap();
        prop_assert!(census.contains_key(&g1.elements().unwrap()[i].cycle_type()));
    }

    #[test]
    fn ddf_parts_sum_to_degree(c in prop::collection::vec(0u64..101, 6)) {
        let ctx = PrimeCtx::new(101);
        let mut f = c.clone();
        f.push(1);
        prop_assume!(dense::gcd(&ctx, &f, &dense::derivative(&ctx, &f)).len() == 1);
        let ct = distinct_degree_pattern(&UniPoly::new(101, &f).unwrap()).unwrap();
        prop_assert_eq!(ct.parts().iter().sum::<usize>(), 6);
        // the number of linear factors is the number of roots
        let roots = (0..101).filter(|x| dense::eval(&ctx, &f, x) == 0).count();
        prop_assert_eq!(ct.parts().iter().filter(|&&k| k == 1).count(), roots);
    }

    #[test]
    fn extension_field_inverses(coords in prop::collection::vec(0u64..7, 3)) {
        let k = GfExt::new(7, 3);
        prop_assert_eq!(k.order(), 343);
        let a = k.from_coords(&coords);
        prop_assume!(!k.is_zero(&a));
        prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        prop_assert_eq!(k.pow(&a, 343), a);
    }

    #[test]
    fn total_variation_is_a_distance(counts in prop::collection::vec(0usize..20, 4)) {
        let g1 = catalog().g1.cycle_census().unwrap();
        let types = [vec![1; 6], vec![2, 2, 2], vec![3, 3], vec![5, 1]];
        let mut obs = FrobeniusCensus::default();
        for (t, &n) in types.iter().zip(&counts) {
            if n > 0 {
                obs.counts.insert(CycleType::new(t.clone()), n);
                obs.total += n;
            }
        }
        prop_assume!(obs.total > 0);
        let cmp = compare_census(&obs, &g1);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&cmp.tv));
        prop_assert_eq!(cmp.containment, counts[3] == 0);
    }
}

#[test]
fn census_is_deterministic() {
    let q = Field::Rational;
    let c: Vec<_> = [-1, 3, 0, 7, -2, 5].iter().map(|&k| q.from_int(k)).collect();
    let s = SpecializedSextic::explicit(q, c).unwrap();
    let a = sample_census(&s, 5, 5000).unwrap();
    for _ in 0..3 {
        assert_eq!(sample_census(&s, 5, 5000).unwrap(), a);
    }
    assert_eq!(a.total + a.skipped.len(), 667);
}
