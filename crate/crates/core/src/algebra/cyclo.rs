use super::FieldElem;
use crate::error::Result;

/// Element `a + b·ζ` of the base field adjoined a primitive cube root of
/// unity, with `ζ² = −1 − ζ`. Both components live in the same base field
/// (rationals or a prime field with `p ≡ 2 mod 3`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloExt {
    pub a: FieldElem,
    pub b: FieldElem,
}

impl CycloExt {
    pub fn new(a: FieldElem, b: FieldElem) -> Self {
        debug_assert!(!matches!(a, FieldElem::Cyclo(_)) && !matches!(b, FieldElem::Cyclo(_)));
        CycloExt { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CycloExt::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        CycloExt::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn neg(&self) -> Self {
        CycloExt::new(-&self.a, -&self.b)
    }

    /// `(a + bζ)(c + dζ) = (ac − bd) + (ad + bc − bd)ζ`.
    pub fn mul(&self, o: &Self) -> Self {
        let ac = &self.a * &o.a;
        let bd = &self.b * &o.b;
        let ad = &self.a * &o.b;
        let bc = &self.b * &o.a;
        CycloExt::new(&ac - &bd, &(&ad + &bc) - &bd)
    }

    /// Conjugation ζ ↦ ζ²: `a + bζ ↦ (a − b) − bζ`.
    pub fn conjugate(&self) -> Self {
        CycloExt::new(&self.a - &self.b, -&self.b)
    }

    /// Norm `a² − ab + b²` down to the base field.
    pub fn norm(&self) -> FieldElem {
        let aa = &self.a * &self.a;
        let ab = &self.a * &self.b;
        let bb = &self.b * &self.b;
        &(&aa - &ab) + &bb
    }

    pub fn inv(&self) -> Result<Self> {
        let n_inv = self.norm().inv()?;
        let c = self.conjugate();
        Ok(CycloExt::new(&c.a * &n_inv, &c.b * &n_inv))
    }
}
