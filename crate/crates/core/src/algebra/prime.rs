//! Prime fields GF(p) for small p, used by the projective utilities that
//! are stated for arbitrary characteristic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::traits::{FiniteField, Field, Ring};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Option<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        (is_prime && p < (1 << 31)).then_some(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn element(&self, v: u64) -> Fp {
        Fp { field: *self, v: v % self.p }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    field: PrimeField,
    v: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        assert_eq!(self.field, rhs.field);
        self.field.element(self.v + rhs.v)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        assert_eq!(self.field, rhs.field);
        self.field.element(self.v + self.field.p - rhs.v)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.field.element(self.field.p - self.v)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        assert_eq!(self.field, rhs.field);
        self.field.element(self.v * rhs.v)
    }
}

impl Ring for Fp {
    type Ctx = PrimeField;
    fn ctx(&self) -> PrimeField {
        self.field
    }
    fn zero_in(ctx: &PrimeField) -> Fp {
        ctx.element(0)
    }
    fn one_in(ctx: &PrimeField) -> Fp {
        ctx.element(1)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn unit_inverse(&self) -> Option<Fp> {
        (self.v != 0).then(|| Ring::pow(self, self.field.p - 2))
    }
}

impl Field for Fp {}

impl FiniteField for Fp {
    fn order(ctx: &PrimeField) -> u64 {
        ctx.p
    }
    fn characteristic(ctx: &PrimeField) -> u64 {
        ctx.p
    }
    fn elements(ctx: &PrimeField) -> Vec<Fp> {
        (0..ctx.p).map(|v| ctx.element(v)).collect()
    }
    fn random<R: rand::Rng + ?Sized>(ctx: &PrimeField, rng: &mut R) -> Fp {
        ctx.element(rng.gen_range(0..ctx.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_inverses() {
        let f = PrimeField::new(3).unwrap();
        for a in Fp::elements(&f).into_iter().filter(|a| !Ring::is_zero(a)) {
            assert_eq!(a * a.inv().unwrap(), f.element(1));
        }
        assert!(PrimeField::new(4).is_none());
    }
}
