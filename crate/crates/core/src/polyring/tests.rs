use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn xs(n: usize) -> Vars {
    Vars::numbered("x", n)
}

fn p(field: Field, vars: &Vars, s: &str) -> MultiPoly {
    MultiPoly::parse(field, vars, s).unwrap()
}

fn random_poly(rng: &mut ChaCha8Rng, field: Field, vars: &Vars, terms: usize, maxdeg: u32) -> MultiPoly {
    let ts = (0..terms).map(|_| {
        let exps: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=maxdeg)).collect();
        (Monomial::from_exps(&exps).unwrap(), field.random_elem(rng))
    });
    MultiPoly::from_terms(field, vars, ts)
}

#[test]
fn difference_of_squares() {
    let v = xs(2);
    let q = Field::Rational;
    let prod = &p(q, &v, "x1 + x2") * &p(q, &v, "x1 - x2");
    assert_eq!(prod.to_string(), "x1^2 - x2^2");
    let zero = MultiPoly::zero(q, &v);
    assert_eq!(&prod + &zero, prod);
}

#[test]
fn frobenius_in_characteristic_two() {
    let v = xs(2);
    let f = Field::Prime(2);
    let s = p(f, &v, "x1 + x2");
    assert_eq!((&s * &s).to_string(), "x1^2 + x2^2");
}

#[test]
fn masuda_numerator_at_point() {
    let v = xs(3);
    let q = Field::Rational;
    let n = p(q, &v, "x1^2*x2 + x2^2*x3 + x3^2*x1 - 3*x1*x2*x3");
    let pt: Vec<FieldElem> = [1, 2, 4].iter().map(|&k| q.from_int(k)).collect();
    assert_eq!(n.eval(&pt).unwrap(), q.from_int(10));
    let origin = vec![q.zero(); 3];
    let c = p(q, &v, "x1*x2 - 7 + x3^3");
    assert_eq!(c.eval(&origin).unwrap(), q.from_int(-7));
    let f3 = Field::Prime(3);
    let s = p(f3, &v, "x1 + x2 + x3");
    assert!(s.eval(&vec![f3.one(); 3]).unwrap().is_zero());
    assert!(matches!(s.eval(&[f3.one()]), Err(Error::ArityMismatch { .. })));
}

#[test]
fn derivatives() {
    let v = xs(2);
    let q = Field::Rational;
    assert_eq!(p(q, &v, "x1^2*x2").derivative("x1").unwrap().to_string(), "2*x1*x2");
    let f3 = Field::Prime(3);
    assert!(p(f3, &v, "x1^3").derivative("x1").unwrap().is_zero());
    let w = Vars::new(&["X", "z1"]);
    let s = p(q, &w, "X^6 - z1*X^5").derivative("X").unwrap();
    assert_eq!(s, p(q, &w, "6*X^5 - 5*z1*X^4"));
    assert!(matches!(s.derivative("y"), Err(Error::UnknownVariable(_))));
}

#[test]
fn exact_division() {
    let v = xs(2);
    let q = Field::Rational;
    let a = p(q, &v, "x1^2 - x2^2");
    assert_eq!(a.div_exact(&p(q, &v, "x1 - x2")).unwrap(), p(q, &v, "x1 + x2"));
    assert!(a.div_exact(&a).unwrap().is_one());
    let b = p(q, &v, "x1*x2 + x1");
    assert!(matches!(b.div_exact(&p(q, &v, "x2")), Err(Error::NotDivisible)));
    assert!(matches!(b.div_exact(&MultiPoly::zero(q, &v)), Err(Error::DivisionByZero)));
}

#[test]
fn gcd_examples() {
    let v = xs(3);
    let q = Field::Rational;
    let a = p(q, &v, "x1^2 - x2^2");
    assert_eq!(a.gcd(&p(q, &v, "x1 - x2")), p(q, &v, "x1 - x2"));
    assert!(a.gcd(&MultiPoly::one(q, &v)).is_one());
    assert_eq!(a.gcd(&MultiPoly::zero(q, &v)), a);
    let c = p(q, &v, "2*x1*x3 + 4*x2");
    assert_eq!(MultiPoly::zero(q, &v).gcd(&c), p(q, &v, "x1*x3 + 2*x2"));
    let g = p(q, &v, "x1^2*x3 + x2^3*x1 - x3^2 + 5").gcd(&p(q, &v, "x1*x2*x3^2"));
    assert!(g.is_one());
    let m = p(q, &v, "x1^2*x2^3").gcd(&p(q, &v, "x1^3*x2*x3"));
    assert_eq!(m, p(q, &v, "x1^2*x2"));
}

#[test]
fn gcd_of_common_linear_factor() {
    let v = xs(3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for field in [Field::Rational, Field::Prime(2), Field::Prime(101), Field::CycloRational] {
        let common = p(field, &v, "x1 + x2");
        for _ in 0..20 {
            let qq = random_poly(&mut rng, field, &v, 4, 2);
            let rr = random_poly(&mut rng, field, &v, 4, 2);
            if qq.is_zero() || rr.is_zero() || !qq.gcd(&rr).is_one() {
                continue;
            }
            let a = &common * &qq;
            let b = &common * &rr;
            let g = a.gcd(&b);
            assert!(a.try_div_exact(&g).is_some() && b.try_div_exact(&g).is_some());
            assert_eq!(g, common, "{field}: gcd({a}, {b})");
        }
    }
}

#[test]
fn gcd_contract_on_random_triples() {
    let v = xs(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..200 {
        let field = if i % 2 == 0 { Field::Rational } else { Field::Prime(3) };
        let a = random_poly(&mut rng, field, &v, 3, 2);
        let b = random_poly(&mut rng, field, &v, 3, 2);
        let c = random_poly(&mut rng, field, &v, 3, 2);
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        assert!(ac.try_div_exact(&g).is_some(), "gcd does not divide ac");
        assert!(bc.try_div_exact(&g).is_some(), "gcd does not divide bc");
        assert!(g.try_div_exact(&c).is_some(), "c does not divide gcd");
        assert!(g.leading_coeff().unwrap().is_one());
    }
}

#[test]
fn coprimality_certificate_is_conservative() {
    let v = xs(3);
    let q = Field::Rational;
    let a = p(q, &v, "(x1 + x2)*(x3 - 1)");
    let b = p(q, &v, "(x1 + x2)*(x3 + x1)");
    assert!(!is_certainly_coprime(&a, &b));
    assert!(is_certainly_coprime(&p(q, &v, "x1 + x2"), &p(q, &v, "x1 - x2")));
}

#[test]
fn addition_canonicity_and_round_trip() {
    let v = xs(4);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..500 {
        let field = [Field::Rational, Field::Prime(5), Field::CycloRational, Field::CycloPrime(2)][i % 4];
        let a = random_poly(&mut rng, field, &v, 5, 3);
        let b = random_poly(&mut rng, field, &v, 5, 3);
        let mut sum = MultiPoly::zero(field, &v);
        for t in a.terms().iter().chain(b.terms()) {
            sum = &sum + &MultiPoly::monomial(field, &v, t.0.clone(), t.1.clone());
        }
        let direct = &a + &b;
        assert_eq!(direct, sum);
        assert_eq!(&direct - &MultiPoly::zero(field, &v), direct);
        let text = direct.to_string();
        let back = MultiPoly::parse(field, &v, &text).unwrap();
        assert_eq!(back, direct, "{text}");
        assert_eq!(back.to_string(), text);
        let json = serde_json::to_string(&direct.to_json()).unwrap();
        let parsed: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(MultiPoly::from_json(field, &parsed).unwrap(), direct);
    }
}

#[test]
fn evaluation_is_multiplicative() {
    let v = xs(3);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..500 {
        let field = if i % 2 == 0 { Field::Rational } else { Field::Prime(101) };
        let a = random_poly(&mut rng, field, &v, 4, 3);
        let b = random_poly(&mut rng, field, &v, 4, 3);
        let pt: Vec<FieldElem> = (0..3).map(|_| field.random_elem(&mut rng)).collect();
        assert_eq!((&a * &b).eval(&pt).unwrap(), &a.eval(&pt).unwrap() * &b.eval(&pt).unwrap());
    }
}

#[test]
fn ambient_mismatch_is_an_error() {
    let q = Field::Rational;
    let a = p(q, &xs(2), "x1");
    let b = p(q, &Vars::new(&["x1", "y"]), "x1");
    assert!(matches!(a.checked_add(&b), Err(Error::AmbientMismatch)));
    assert!(matches!(a.checked_mul(&b), Err(Error::AmbientMismatch)));
}

#[test]
fn exponent_overflow_is_an_error() {
    let v = xs(1);
    let x = MultiPoly::var_at(Field::Prime(2), &v, 0);
    let big = x.pow(u32::MAX).unwrap();
    assert!(matches!(big.checked_mul(&x), Err(Error::ExponentOverflow)));
}

#[test]
fn parses_unicode_minus_and_rationals() {
    let v = xs(2);
    let q = Field::Rational;
    assert_eq!(p(q, &v, "x1 \u{2212} 3/4*x2"), p(q, &v, "x1 - 3/4*x2"));
    assert_eq!(p(q, &v, "-3/4*x2 + x1").to_string(), "x1 - 3/4*x2");
    assert!(MultiPoly::parse(q, &v, "x1 + y").is_err());
    assert!(MultiPoly::parse(q, &v, "x1 / x2").is_err());
    let c = Field::CycloRational;
    let z = p(c, &v, "(1 + 2*z3)*x1 - z3");
    assert_eq!(p(c, &v, &z.to_string()), z);
}

#[test]
fn univariate_view_round_trips() {
    let v = xs(3);
    let q = Field::Rational;
    let a = p(q, &v, "x1^3*x2 + x2*x3 - 2*x1*x3^2 + 7");
    let u = a.to_univariate(0);
    assert_eq!(u.len(), 4);
    assert_eq!(MultiPoly::from_univariate(&u, 0, q, &v), a);
}

#[test]
fn remap_permutes_variables() {
    let v = xs(3);
    let q = Field::Rational;
    let a = p(q, &v, "x1^2*x2 + x3");
    assert_eq!(a.remap(&v, &[1, 2, 0]).unwrap(), p(q, &v, "x2^2*x3 + x1"));
    let w = Vars::new(&["x3", "t", "x1", "x2"]);
    assert_eq!(a.embed_in(&w).unwrap(), p(q, &w, "x1^2*x2 + x3"));
}
