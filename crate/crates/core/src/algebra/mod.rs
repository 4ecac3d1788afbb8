//! Exact coefficient fields.
//!
//! Four fields are supported: the rationals, prime fields GF(p), and either of
//! those adjoined a primitive cube root of unity `z3` (written ζ in docs).
//! Elements carry enough information to do arithmetic on their own; a
//! [`Field`] descriptor supplies constants and parsing.

mod cyclo;
pub mod finite;
pub mod prime;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

pub use cyclo::CycloExt;
pub use finite::{evaluation_extension, FiniteField, GfExt, PrimeCtx, Scalars};
pub use prime::PrimeFieldElement;
pub use rational::Rational;

use crate::error::{Error, Result};

/// Descriptor of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
    /// Q(ζ3).
    CycloRational,
    /// GF(p)(ζ3) for a prime `p ≡ 2 (mod 3)`, i.e. GF(p²).
    CycloPrime(u64),
}

impl Field {
    /// GF(p); rejects non-primes and moduli above [`prime::MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Field> {
        if !prime::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= prime::MAX_MODULUS {
            return Err(Error::InvalidField(format!("modulus {p} too large")));
        }
        Ok(Field::Prime(p))
    }

    /// The field of characteristic `c` used for tower computations: Q for 0,
    /// GF(c) otherwise.
    pub fn of_characteristic(c: u64) -> Result<Field> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    /// Adjoin ζ3 to `base`. Fails when `X² + X + 1` splits or is a square over
    /// `base` (p = 3 or p ≡ 1 mod 3), since the quotient is then not a field.
    pub fn cyclo_over(base: Field) -> Result<Field> {
        match base {
            Field::Rational => Ok(Field::CycloRational),
            Field::Prime(p) if p % 3 == 2 => Ok(Field::CycloPrime(p)),
            Field::Prime(p) => Err(Error::InvalidField(format!(
                "X^2 + X + 1 is reducible over GF({p}); need p = 2 mod 3"
            ))),
            Field::CycloRational | Field::CycloPrime(_) => {
                Err(Error::InvalidField("field already contains z3".into()))
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational | Field::CycloRational => 0,
            Field::Prime(p) | Field::CycloPrime(p) => *p,
        }
    }

    pub fn is_cyclo(&self) -> bool {
        matches!(self, Field::CycloRational | Field::CycloPrime(_))
    }

    pub fn base(&self) -> Field {
        match self {
            Field::CycloRational => Field::Rational,
            Field::CycloPrime(p) => Field::Prime(*p),
            f => *f,
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(Rational::from_int(n)),
            Field::Prime(p) => FieldElem::Prime(PrimeFieldElement::new(n, *p)),
            Field::CycloRational | Field::CycloPrime(_) => {
                let base = self.base();
                FieldElem::Cyclo(Box::new(CycloExt::new(base.from_int(n), base.zero())))
            }
        }
    }

    pub fn from_rational(&self, r: &Rational) -> Result<FieldElem> {
        match self {
            Field::Rational => Ok(FieldElem::Rational(r.clone())),
            Field::Prime(p) => r
                .residue_mod(*p)
                .map(|v| FieldElem::Prime(PrimeFieldElement::from_residue(v, *p)))
                .ok_or(Error::DivisionByZero),
            Field::CycloRational | Field::CycloPrime(_) => {
                let base = self.base();
                Ok(FieldElem::Cyclo(Box::new(CycloExt::new(
                    base.from_rational(r)?,
                    base.zero(),
                ))))
            }
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The primitive cube root of unity ζ.
    pub fn zeta(&self) -> Result<FieldElem> {
        if !self.is_cyclo() {
            return Err(Error::NeedsCycloField);
        }
        let base = self.base();
        Ok(FieldElem::Cyclo(Box::new(CycloExt::new(base.zero(), base.one()))))
    }

    /// Build `a + b·ζ` from base elements.
    pub fn cyclo(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        if !self.is_cyclo() {
            return Err(Error::NeedsCycloField);
        }
        Ok(FieldElem::Cyclo(Box::new(CycloExt::new(a, b))))
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        match (self, x) {
            (Field::Rational, FieldElem::Rational(_)) => true,
            (Field::Prime(p), FieldElem::Prime(e)) => e.modulus() == *p,
            (Field::CycloRational | Field::CycloPrime(_), FieldElem::Cyclo(c)) => {
                self.base().contains(&c.a) && self.base().contains(&c.b)
            }
            _ => false,
        }
    }

    /// Parse the full rendering produced by `Display` for elements of this field.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        match self {
            Field::Prime(p) => {
                let body = strip_mod_suffix(s, *p)?;
                self.parse_bare(body)
            }
            Field::CycloPrime(p) => {
                let body = strip_mod_suffix(s, *p)?;
                self.parse_bare(body)
            }
            _ => self.parse_bare(s),
        }
    }

    /// Parse a coefficient written without the `mod p` suffix, as it appears
    /// inside polynomial text.
    pub fn parse_bare(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        match self {
            Field::Rational | Field::Prime(_) => {
                let r: Rational = s.parse()?;
                self.from_rational(&r)
            }
            Field::CycloRational | Field::CycloPrime(_) => {
                let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
                parse_cyclo(*self, s)
            }
        }
    }

    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        match self {
            Field::Rational => self.from_int(rng.gen_range(-20..=20)),
            Field::Prime(p) => FieldElem::Prime(PrimeFieldElement::from_residue(rng.gen_range(0..*p), *p)),
            Field::CycloRational | Field::CycloPrime(_) => {
                let base = self.base();
                FieldElem::Cyclo(Box::new(CycloExt::new(base.random_elem(rng), base.random_elem(rng))))
            }
        }
    }

    /// Short human-readable name: `Q`, `GF(5)`, `Q(z3)`, `GF(5)(z3)`.
    pub fn name(&self) -> String {
        match self {
            Field::Rational => "Q".into(),
            Field::Prime(p) => format!("GF({p})"),
            Field::CycloRational => "Q(z3)".into(),
            Field::CycloPrime(p) => format!("GF({p})(z3)"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if let Some(base) = s.strip_suffix("(z3)") {
            return Field::cyclo_over(base.parse()?);
        }
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("GF(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        Field::prime(p.parse().map_err(|_| Error::Parse(format!("bad modulus `{p}`")))?)
    }
}

fn strip_mod_suffix(s: &str, p: u64) -> Result<&str> {
    match s.rsplit_once(" mod ") {
        Some((body, m)) => {
            if m.trim().parse::<u64>().ok() != Some(p) {
                return Err(Error::Parse(format!("modulus in `{s}` does not match {p}")));
            }
            Ok(body.trim())
        }
        None => Ok(s),
    }
}

fn parse_cyclo(field: Field, s: &str) -> Result<FieldElem> {
    let base = field.base();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !compact.contains("z3") {
        let a = base.parse_bare(&compact)?;
        return field.cyclo(a, base.zero());
    }
    let body = compact
        .strip_suffix("*z3")
        .or_else(|| compact.strip_suffix("z3"))
        .ok_or_else(|| Error::Parse(format!("invalid cyclotomic element `{s}`")))?;
    // split at the last top-level + or - that is not a leading sign
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with('/'))
        .map(|(i, _)| i)
        .last();
    let (a_str, b_str) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let b_str = b_str.strip_prefix('+').unwrap_or(b_str);
    let b_str = match b_str {
        "" => "1",
        "-" => "-1",
        other => other,
    };
    let a = if a_str.is_empty() { base.zero() } else { base.parse_bare(a_str)? };
    let b = base.parse_bare(b_str)?;
    field.cyclo(a, b)
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Rational(Rational),
    Prime(PrimeFieldElement),
    Cyclo(Box<CycloExt>),
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Prime(e) => e.is_zero(),
            FieldElem::Cyclo(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Prime(e) => e.residue() == 1,
            FieldElem::Cyclo(c) => c.a.is_one() && c.b.is_zero(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Prime(e) => Field::Prime(e.modulus()),
            FieldElem::Cyclo(c) => match c.a {
                FieldElem::Prime(e) => Field::CycloPrime(e.modulus()),
                _ => Field::CycloRational,
            },
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        match self {
            FieldElem::Rational(r) => r.inv().map(FieldElem::Rational),
            FieldElem::Prime(e) => e.inv().map(FieldElem::Prime),
            FieldElem::Cyclo(c) => c.inv().map(|c| FieldElem::Cyclo(Box::new(c))),
        }
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Conjugation ζ ↦ ζ²; identity on base-field elements.
    pub fn cyclo_conjugate(&self) -> FieldElem {
        match self {
            FieldElem::Cyclo(c) => FieldElem::Cyclo(Box::new(c.conjugate())),
            other => other.clone(),
        }
    }

    /// True when the element lies in the base field (no ζ component).
    pub fn is_base(&self) -> bool {
        match self {
            FieldElem::Cyclo(c) => c.b.is_zero(),
            _ => true,
        }
    }

    /// Whether the rendered form starts with a minus sign; used by polynomial
    /// printing to fold signs into the term separator.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(r) if r.is_negative())
    }

    /// Rendering without the `mod p` suffix, parenthesised for ζ elements.
    pub fn bare(&self) -> String {
        match self {
            FieldElem::Rational(r) => r.to_string(),
            FieldElem::Prime(e) => e.residue().to_string(),
            FieldElem::Cyclo(c) => format!("({})", cyclo_body(c)),
        }
    }
}

fn cyclo_body(c: &CycloExt) -> String {
    let a = c.a.bare();
    match &c.b {
        FieldElem::Rational(b) if b.is_negative() => format!("{a} - {}*z3", b.abs()),
        b => format!("{a} + {}*z3", b.bare()),
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => write!(f, "{r}"),
            FieldElem::Prime(e) => write!(f, "{e}"),
            FieldElem::Cyclo(c) => match &c.a {
                FieldElem::Prime(e) => write!(f, "{} mod {}", cyclo_body(c), e.modulus()),
                _ => f.write_str(&cyclo_body(c)),
            },
        }
    }
}

fn mismatch(a: &FieldElem, b: &FieldElem) -> ! {
    panic!("field element mismatch: {a} ({}) vs {b} ({})", a.field(), b.field())
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Prime(a), FieldElem::Prime(b)) => FieldElem::Prime(a.add(b)),
            (FieldElem::Cyclo(a), FieldElem::Cyclo(b)) => FieldElem::Cyclo(Box::new(a.add(b))),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a - b),
            (FieldElem::Prime(a), FieldElem::Prime(b)) => FieldElem::Prime(a.sub(b)),
            (FieldElem::Cyclo(a), FieldElem::Cyclo(b)) => FieldElem::Cyclo(Box::new(a.sub(b))),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Prime(a), FieldElem::Prime(b)) => FieldElem::Prime(a.mul(b)),
            (FieldElem::Cyclo(a), FieldElem::Cyclo(b)) => FieldElem::Cyclo(Box::new(a.mul(b))),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Prime(a) => FieldElem::Prime(a.neg()),
            FieldElem::Cyclo(a) => FieldElem::Cyclo(Box::new(a.neg())),
        }
    }
}

impl Scalars for Field {
    type E = FieldElem;

    fn zero(&self) -> FieldElem {
        Field::zero(self)
    }
    fn one(&self) -> FieldElem {
        Field::one(self)
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a + b
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a - b
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a * b
    }
    fn neg(&self, a: &FieldElem) -> FieldElem {
        -a
    }
    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        a.inv().ok()
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> FieldElem {
        Field::from_int(self, n)
    }
    fn embed(&self, c: &FieldElem) -> Option<FieldElem> {
        self.contains(c).then(|| c.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        self.random_elem(rng)
    }
}
