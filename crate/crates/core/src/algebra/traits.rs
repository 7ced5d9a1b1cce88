//! Scalar traits shared by the generic polynomial, series and matrix code.
//!
//! Unlike `num_traits::Zero`/`One`, constructors take a context: the binary
//! fields used here are chosen at run time, so an element cannot be built
//! without knowing its modulus.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + Eq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + Eq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.ctx())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
}

pub trait FiniteField: Field + Ord {
    fn order(ctx: &Self::Ctx) -> u64;
    fn characteristic(ctx: &Self::Ctx) -> u64;
    /// All elements, in the fixed element order.
    fn elements(ctx: &Self::Ctx) -> Vec<Self>;
    fn random<R: rand::Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;
}
