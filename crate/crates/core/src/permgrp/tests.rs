use super::*;

fn p(s: &str) -> Perm {
    Perm::parse(6, s).unwrap()
}

#[test]
fn composition_convention() {
    let c = catalog();
    // right factor first: (12)∘(23) sends 3 → 2 → 1
    let a = p("(12)");
    let b = p("(23)");
    assert_eq!(&a * &b, p("(123)"));
    assert_eq!(&(&c.tau * &c.sigma1) * &c.tau, p("(456)"));
    assert_eq!(&c.lambda * &c.lambda, p("(12)(45)"));
    assert_eq!(&(&c.lambda * &c.sigma1) * &c.lambda.inverse(), c.sigma2);
    assert_eq!(c.lambda, &p("(12)") * &c.tau);
    assert_eq!(c.lambda.order(), 4);
    let lm = &c.lambda_misprint;
    assert_eq!((&(lm * &c.sigma1) * lm).order(), 5);
}

#[test]
fn perm_basics() {
    let l = p("(1425)(36)");
    assert_eq!(l.to_string(), "(1425)(36)");
    assert_eq!(l.cycle_type().to_string(), "[4,2]");
    assert!(l.is_even());
    assert!(!p("(12)").is_even());
    assert_eq!(&l * &l.inverse(), Perm::identity(6));
    assert_eq!(Perm::identity(6).to_string(), "()");
    assert_eq!(Perm::parse(6, "(1,4,2,5)(3,6)").unwrap(), l);
    assert!(Perm::parse(6, "(17)").is_err());
    assert!(Perm::from_images(&[1, 1, 2]).is_err());
    assert!(matches!(l.compose(&Perm::identity(5)), Err(Error::DegreeMismatch(6, 5))));
    let big = Perm::from_cycles(11, &[&[1, 10, 11]]).unwrap();
    assert_eq!(big.to_string(), "(1,10,11)");
    assert_eq!(Perm::parse(11, &big.to_string()).unwrap(), big);
}

#[test]
fn group_orders() {
    let c = catalog();
    assert_eq!(c.g1.order().unwrap(), 72);
    assert_eq!(c.g2.order().unwrap(), 36);
    assert_eq!(c.g3.order().unwrap(), 36);
    assert_eq!(c.g4.order().unwrap(), 18);
    assert_eq!(c.c3xc3.order().unwrap(), 9);
    assert_eq!(c.a6.order().unwrap(), 360);
    assert_eq!(c.s6.order().unwrap(), 720);
    let els = c.g1.elements().unwrap();
    assert!(els.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(els[0], Perm::identity(6));
}

#[test]
fn subgroup_lattice() {
    let c = catalog();
    assert!(c.g4.is_subgroup_of(&c.g3).unwrap());
    assert!(c.g3.is_subgroup_of(&c.g1).unwrap());
    assert!(c.g2.is_subgroup_of(&c.g1).unwrap());
    assert!(!c.g1.is_subgroup_of(&c.g2).unwrap());
    for (g, q) in [(&c.g1, 8), (&c.g2, 4), (&c.g3, 4), (&c.g4, 2)] {
        assert!(g.is_transitive());
        assert!(c.c3xc3.is_normal_in(g).unwrap());
        assert_eq!(g.order().unwrap() / 9, q);
    }
    let s1 = Group::new(6, vec![c.sigma1.clone()]).unwrap();
    assert!(!s1.is_transitive());
    let meet = c.g1.intersect(&c.a6).unwrap();
    assert_eq!(meet.elements().unwrap(), c.g2.elements().unwrap());
}

#[test]
fn census() {
    let s3 = Group::new(3, vec![Perm::parse(3, "(123)").unwrap(), Perm::parse(3, "(12)").unwrap()]).unwrap();
    let cen = s3.cycle_census().unwrap();
    let r = |a: i64, b: i64| Rational::new(a, b).unwrap();
    assert_eq!(cen[&CycleType::new(vec![1, 1, 1])], r(1, 6));
    assert_eq!(cen[&CycleType::new(vec![2, 1])], r(1, 2));
    assert_eq!(cen[&CycleType::new(vec![3])], r(1, 3));

    let c = catalog();
    let nine = c.c3xc3.cycle_census().unwrap();
    for e in c.c3xc3.elements().unwrap() {
        assert!(e.is_identity() || e.order() == 3);
    }
    assert_eq!(nine[&CycleType::new(vec![1; 6])], r(1, 9));

    for g in c.groups() {
        let cen = g.cycle_census().unwrap();
        let total = cen.values().fold(Rational::zero(), |a, b| &a + b);
        assert!(total.is_one());
        let n = g.order().unwrap() as i64;
        assert_eq!(cen[&CycleType::new(vec![1; 6])], r(1, n));
    }
    // tally by direct enumeration
    let g1 = c.g1.cycle_census().unwrap();
    let fours = c.g1.elements().unwrap().iter().filter(|e| e.cycle_type().parts() == [4, 2]).count();
    assert_eq!(g1[&CycleType::new(vec![4, 2])], r(fours as i64, 72));
}

#[test]
fn closure_budget() {
    let c = catalog();
    let fresh = Group::new(6, c.s6.generators().to_vec()).unwrap();
    assert!(matches!(fresh.elements_with_budget(100), Err(Error::ClosureBudgetExceeded(100))));
    assert_eq!(fresh.order().unwrap(), 720);
}

#[test]
fn cycle_type_text() {
    let t: CycleType = "[2, 2, 1, 1]".parse().unwrap();
    assert_eq!(t.to_string(), "[2,2,1,1]");
    assert_eq!("[1,2]".parse::<CycleType>().unwrap().to_string(), "[2,1]");
}
