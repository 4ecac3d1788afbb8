use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field. Keeps every product of two
/// residues inside a `u64` with room to spare.
pub const MAX_MODULUS: u64 = 1 << 31;

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo prime `p`; `None` for `a ≡ 0`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // extended Euclid on signed values
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[lo, hi]`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= hi_us {
        if sieve[i] {
            let mut j = i * i;
            while j <= hi_us {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&n| sieve[n as usize]).collect()
}

/// Element of the prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    /// Reduces `value` modulo `p`. The caller guarantees `p` is a supported prime.
    pub fn new(value: i64, p: u64) -> Self {
        PrimeFieldElement {
            residue: value.rem_euclid(p as i64) as u64,
            modulus: p,
        }
    }

    pub fn from_residue(residue: u64, p: u64) -> Self {
        PrimeFieldElement {
            residue: residue % p,
            modulus: p,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::from_residue(add_mod(self.residue, o.residue, self.modulus), self.modulus)
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::from_residue(sub_mod(self.residue, o.residue, self.modulus), self.modulus)
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::from_residue(mul_mod(self.residue, o.residue, self.modulus), self.modulus)
    }

    pub fn neg(&self) -> Self {
        Self::from_residue(sub_mod(0, self.residue, self.modulus), self.modulus)
    }

    pub fn inv(&self) -> Result<Self> {
        inv_mod(self.residue, self.modulus)
            .map(|r| Self::from_residue(r, self.modulus))
            .ok_or(Error::DivisionByZero)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_gf3() {
        let two = PrimeFieldElement::new(2, 3);
        assert_eq!(two.inv().unwrap(), PrimeFieldElement::new(2, 3));
        assert!(PrimeFieldElement::new(3, 3).inv().is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(10007));
        assert!(!is_prime(10007 * 10009));
        assert_eq!(primes_in_range(5, 10000).len(), 1227);
        assert_eq!(primes_in_range(0, 1), Vec::<u64>::new());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(pow_mod(3, 6, 7), 1);
        assert_eq!(sub_mod(1, 3, 5), 3);
    }
}
