//! Evaluation targets: a small field interface shared by exact fields, prime
//! fields with machine-word residues, and extension fields GF(p^k).
//!
//! Extension fields are only used as places to evaluate polynomials (random
//! points, Jacobians, coprimality probes, Frobenius sampling); they are not
//! polynomial coefficient fields.

use std::fmt::Debug;

use rand::Rng;

use super::prime::{add_mod, inv_mod, is_prime, mul_mod, pow_mod, sub_mod};
use super::{Field, FieldElem};

/// Minimal field interface over a context object.
pub trait Scalars: Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn from_int(&self, n: i64) -> Self::E;
    /// Image of an exact coefficient; `None` when undefined (a denominator
    /// vanishes) or the coefficient belongs to an incompatible field.
    fn embed(&self, c: &FieldElem) -> Option<Self::E>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::E;

    fn pow(&self, a: &Self::E, mut e: u128) -> Self::E {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Finite fields additionally know their size.
pub trait FiniteField: Scalars {
    fn order(&self) -> u128;
    fn characteristic(&self) -> u64;
}

/// GF(p) with residues as machine words, optionally with a chosen cube root
/// of unity so that ζ3-coefficients can be mapped in (requires `p ≡ 1 mod 3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeCtx {
    pub p: u64,
    pub zeta: Option<u64>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p));
        let zeta = if p % 3 == 1 { Some(find_cube_root_of_unity(p)) } else { None };
        PrimeCtx { p, zeta }
    }
}

fn find_cube_root_of_unity(p: u64) -> u64 {
    (2..p)
        .map(|g| pow_mod(g, ((p - 1) / 3) as u128, p))
        .find(|&z| z != 1)
        .expect("p = 1 mod 3 has a primitive cube root of unity")
}

impl Scalars for PrimeCtx {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        sub_mod(0, *a, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(*a, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn embed(&self, c: &FieldElem) -> Option<u64> {
        match c {
            FieldElem::Rational(r) => r.residue_mod(self.p),
            FieldElem::Prime(e) => (e.modulus() == self.p).then(|| e.residue()),
            FieldElem::Cyclo(z) => {
                let zeta = self.zeta?;
                let a = self.embed(&z.a)?;
                let b = self.embed(&z.b)?;
                Some(self.add(&a, &self.mul(&b, &zeta)))
            }
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

impl FiniteField for PrimeCtx {
    fn order(&self) -> u128 {
        self.p as u128
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Dense univariate polynomial helpers over any [`Scalars`] context.
/// Coefficients are stored lowest degree first with no trailing zeros.
pub mod dense {
    use super::Scalars;

    pub fn trim<S: Scalars>(s: &S, mut a: Vec<S::E>) -> Vec<S::E> {
        while a.last().is_some_and(|c| s.is_zero(c)) {
            a.pop();
        }
        a
    }

    pub fn degree<S: Scalars>(a: &[S::E]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn add<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => s.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        trim(s, out)
    }

    pub fn sub<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        let nb: Vec<S::E> = b.iter().map(|c| s.neg(c)).collect();
        add(s, a, &nb)
    }

    pub fn mul<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![s.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if s.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = s.add(&out[i + j], &s.mul(x, y));
            }
        }
        trim(s, out)
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn divrem<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> (Vec<S::E>, Vec<S::E>) {
        let db = degree::<S>(b).expect("division by zero polynomial");
        let lc_inv = s.inv(&b[db]).expect("leading coefficient invertible");
        let mut r: Vec<S::E> = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), trim(s, r));
        }
        let mut q = vec![s.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = s.mul(&r[k + db], &lc_inv);
            if s.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = s.sub(&r[k + j], &s.mul(&c, bj));
            }
            q[k] = c;
        }
        r.truncate(db);
        (trim(s, q), trim(s, r))
    }

    pub fn rem<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        divrem(s, a, b).1
    }

    pub fn monic<S: Scalars>(s: &S, a: &[S::E]) -> Vec<S::E> {
        match a.last() {
            None => Vec::new(),
            Some(lc) => {
                let inv = s.inv(lc).expect("nonzero leading coefficient");
                a.iter().map(|c| s.mul(c, &inv)).collect()
            }
        }
    }

    /// Monic greatest common divisor (empty for gcd(0, 0)).
    pub fn gcd<S: Scalars>(s: &S, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        let mut a = trim(s, a.to_vec());
        let mut b = trim(s, b.to_vec());
        while !b.is_empty() {
            let r = rem(s, &a, &b);
            a = b;
            b = r;
        }
        monic(s, &a)
    }

    pub fn derivative<S: Scalars>(s: &S, a: &[S::E]) -> Vec<S::E> {
        let out = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| s.mul(c, &s.from_int(i as i64)))
            .collect();
        trim(s, out)
    }

    pub fn mulmod<S: Scalars>(s: &S, a: &[S::E], b: &[S::E], m: &[S::E]) -> Vec<S::E> {
        rem(s, &mul(s, a, b), m)
    }

    pub fn powmod<S: Scalars>(s: &S, a: &[S::E], mut e: u128, m: &[S::E]) -> Vec<S::E> {
        let mut acc = rem(s, &[s.one()], m);
        let mut base = rem(s, a, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(s, &acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = mulmod(s, &base, &base, m);
            }
        }
        acc
    }

    pub fn eval<S: Scalars>(s: &S, a: &[S::E], x: &S::E) -> S::E {
        a.iter().rev().fold(s.zero(), |acc, c| s.add(&s.mul(&acc, x), c))
    }
}

/// The finite field GF(p^k) = GF(p)[t]/(m(t)) with `m` monic irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfExt {
    base: PrimeCtx,
    modulus: Vec<u64>,
    /// Image of ζ3 when the field contains a primitive cube root of unity.
    zeta: Option<Vec<u64>>,
}

impl GfExt {
    /// GF(p^k) using the first monic irreducible of degree `k` in a fixed
    /// enumeration order, so construction is deterministic.
    pub fn new(p: u64, k: usize) -> Self {
        assert!(is_prime(p) && k >= 1);
        let base = PrimeCtx { p, zeta: None };
        let modulus = first_irreducible(&base, k);
        Self::with_modulus(p, modulus)
    }

    /// GF(p^k) from a given monic irreducible modulus (lowest degree first).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Self {
        let base = PrimeCtx { p, zeta: None };
        debug_assert!(is_irreducible(&base, &modulus));
        let mut f = GfExt { base, modulus, zeta: None };
        f.zeta = f.find_zeta();
        f
    }

    /// Smallest extension of GF(p) with at least `min_size` elements and degree
    /// divisible by `multiple_of`.
    pub fn at_least(p: u64, min_size: u128, multiple_of: usize) -> Self {
        let mut k = multiple_of.max(1);
        while (p as u128).pow(k as u32) < min_size {
            k += multiple_of.max(1);
        }
        GfExt::new(p, k)
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn prime(&self) -> u64 {
        self.base.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zeta(&self) -> Option<&Vec<u64>> {
        self.zeta.as_ref()
    }

    fn find_zeta(&self) -> Option<Vec<u64>> {
        let q = self.order();
        if (q - 1) % 3 != 0 {
            return None;
        }
        let e = (q - 1) / 3;
        let one = self.one();
        let mut x = vec![0u64; self.degree()];
        // enumerate small elements t + c until we find a non-cube
        for c in 0..self.base.p {
            x[0] = c;
            if self.degree() > 1 {
                x[1] = 1;
            }
            let cand = self.normalize(x.clone());
            if cand.iter().all(|&v| v == 0) {
                continue;
            }
            let z = self.pow(&cand, e);
            if z != one {
                return Some(z);
            }
        }
        None
    }

    fn normalize(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.degree(), 0);
        v
    }

    /// Embed a residue of the prime subfield.
    pub fn from_residue(&self, r: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = r % self.base.p;
        v
    }

    /// Element with the given coordinates in the power basis 1, t, t², ….
    pub fn from_coords(&self, coords: &[u64]) -> Vec<u64> {
        let reduced = dense::rem(&self.base, &dense::trim(&self.base, coords.iter().map(|c| c % self.base.p).collect()), &self.modulus);
        self.normalize(reduced)
    }
}

fn first_irreducible(base: &PrimeCtx, k: usize) -> Vec<u64> {
    let p = base.p;
    let total = (p as u128).pow(k as u32);
    for code in 0..total {
        let mut c = code;
        let mut poly = Vec::with_capacity(k + 1);
        for _ in 0..k {
            poly.push((c % p as u128) as u64);
            c /= p as u128;
        }
        poly.push(1);
        if poly[0] == 0 && k > 1 {
            continue;
        }
        if is_irreducible(base, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Rabin's irreducibility test for a monic polynomial over GF(p).
pub fn is_irreducible(base: &PrimeCtx, f: &[u64]) -> bool {
    let k = match dense::degree::<PrimeCtx>(f) {
        Some(0) | None => return false,
        Some(k) => k,
    };
    let p = base.p as u128;
    let x = vec![0u64, 1];
    let frob = |d: usize| dense::powmod(base, &x, p.pow(d as u32), f);
    if dense::sub(base, &frob(k), &dense::rem(base, &x, f)).iter().any(|&c| c != 0) {
        return false;
    }
    let mut n = k;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes.into_iter().all(|r| {
        let h = dense::sub(base, &frob(k / r), &x);
        dense::gcd(base, &h, f).len() == 1
    })
}

impl Scalars for GfExt {
    type E = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u64> {
        self.from_residue(1)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| add_mod(*x, *y, self.base.p)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| sub_mod(*x, *y, self.base.p)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        let k = self.degree();
        let mut prod = vec![0u64; 2 * k];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(*x, *y, p), p);
            }
        }
        // reduce by the monic modulus from the top
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, m) in self.modulus.iter().enumerate().take(k) {
                let idx = d - k + j;
                prod[idx] = sub_mod(prod[idx], mul_mod(c, *m, p), p);
            }
        }
        prod.truncate(k);
        prod
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| sub_mod(0, *x, self.base.p)).collect()
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&x| x == 0)
    }
    fn from_int(&self, n: i64) -> Vec<u64> {
        self.from_residue(n.rem_euclid(self.base.p as i64) as u64)
    }
    fn embed(&self, c: &FieldElem) -> Option<Vec<u64>> {
        match c {
            FieldElem::Rational(r) => r.residue_mod(self.base.p).map(|v| self.from_residue(v)),
            FieldElem::Prime(e) => (e.modulus() == self.base.p).then(|| self.from_residue(e.residue())),
            FieldElem::Cyclo(z) => {
                let zeta = self.zeta.as_ref()?;
                let a = self.embed(&z.a)?;
                let b = self.embed(&z.b)?;
                Some(self.add(&a, &self.mul(&b, zeta)))
            }
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.degree()).map(|_| rng.gen_range(0..self.base.p)).collect()
    }
}

impl FiniteField for GfExt {
    fn order(&self) -> u128 {
        (self.base.p as u128).pow(self.degree() as u32)
    }
    fn characteristic(&self) -> u64 {
        self.base.p
    }
}

/// Where to evaluate polynomials with coefficients in `field` when a large
/// supply of points is needed: the field itself in characteristic zero is
/// handled by the caller; for characteristic `p` this is an extension of
/// GF(p) with at least `min_size` elements that also receives ζ3 if needed.
pub fn evaluation_extension(field: Field, min_size: u128) -> Option<GfExt> {
    match field {
        Field::Prime(p) => Some(GfExt::at_least(p, min_size, 1)),
        Field::CycloPrime(p) => Some(GfExt::at_least(p, min_size, 2)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn extension_field_axioms() {
        let f = GfExt::new(2, 8);
        assert_eq!(f.order(), 256);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            let c = f.random(&mut rng);
            assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn zeta_in_extensions() {
        let f = GfExt::at_least(5, 10_000, 2);
        assert_eq!(f.degree() % 2, 0);
        let z = f.zeta().unwrap().clone();
        let zz = f.mul(&z, &z);
        assert!(f.is_zero(&f.add(&f.add(&zz, &z), &f.one())));
        assert!(GfExt::new(2, 3).zeta().is_none());
        assert!(GfExt::new(2, 2).zeta().is_some());
    }

    #[test]
    fn prime_ctx_cube_root() {
        let ctx = PrimeCtx::new(10009); // 10009 = 1 mod 3
        let z = ctx.zeta.unwrap();
        assert_eq!(ctx.pow(&z, 3), 1);
        assert_ne!(z, 1);
    }

    #[test]
    fn rabin_test() {
        let b = PrimeCtx::new(2);
        assert!(is_irreducible(&b, &[1, 1, 1])); // t^2 + t + 1
        assert!(!is_irreducible(&b, &[1, 0, 1])); // (t + 1)^2
        assert!(is_irreducible(&b, &[1, 1, 0, 0, 0, 0, 1])); // X^6 + X + 1 is primitive
    }

    #[test]
    fn dense_gcd() {
        let s = PrimeCtx::new(7);
        // (x-1)(x-2) and (x-1)(x-3)
        let a = dense::mul(&s, &[6, 1], &[5, 1]);
        let b = dense::mul(&s, &[6, 1], &[4, 1]);
        assert_eq!(dense::gcd(&s, &a, &b), vec![6, 1]);
    }
}
