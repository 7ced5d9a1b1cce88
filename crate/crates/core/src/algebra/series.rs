//! Truncated power series F[s]/(s^n).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::embedding::FieldEmbedding;
use super::gf2m::Fe;
use super::traits::{Field, Ring};

/// The ring F[s]/(s^n); `base` is the context of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesRing<C> {
    pub base: C,
    pub n: usize,
}

/// Element of F[s]/(s^n), stored as exactly n coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<F: Field> {
    ring: SeriesRing<F::Ctx>,
    coeffs: Vec<F>,
}

impl<F: Field> fmt::Debug for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl<F: Field> Series<F> {
    pub fn new(ring: SeriesRing<F::Ctx>, mut coeffs: Vec<F>) -> Self {
        assert!(ring.n >= 1, "truncation level must be positive");
        coeffs.resize(ring.n, F::zero_in(&ring.base));
        Series { ring, coeffs }
    }

    pub fn constant(ring: SeriesRing<F::Ctx>, c: F) -> Self {
        Self::new(ring, vec![c])
    }

    /// The variable s (zero when n = 1).
    pub fn s(ring: SeriesRing<F::Ctx>) -> Self {
        let one = F::one_in(&ring.base);
        let zero = F::zero_in(&ring.base);
        Self::new(ring, vec![zero, one])
    }

    pub fn ring(&self) -> &SeriesRing<F::Ctx> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero_in(&self.ring.base))
    }

    pub fn set_coeff(&mut self, i: usize, c: F) {
        self.coeffs[i] = c;
    }

    /// Smallest i with a nonzero coefficient (n for zero).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.ring.n)
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Reduction to a lower (or padding to a higher) truncation level.
    pub fn truncate(&self, n: usize) -> Self {
        let ring = SeriesRing { base: self.ring.base.clone(), n };
        Self::new(ring, self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn map_coeffs<G: Field>(&self, base: G::Ctx, f: impl Fn(&F) -> G) -> Series<G> {
        let ring = SeriesRing { base, n: self.ring.n };
        Series::new(ring, self.coeffs.iter().map(f).collect())
    }
}

impl Series<Fe> {
    /// Raises every coefficient to the 2^k-th power; s is fixed.
    pub fn twist(&self, k: u32) -> Self {
        self.map_coeffs(self.ring.base, |c| c.frobenius_pow(k))
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        self.map_coeffs(e.target(), |c| e.map(*c))
    }
}

impl<F: Field> Add for Series<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.ring, rhs.ring);
        let coeffs = self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a + b).collect();
        Series { ring: self.ring, coeffs }
    }
}

impl<F: Field> Sub for Series<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.ring, rhs.ring);
        let coeffs = self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a - b).collect();
        Series { ring: self.ring, coeffs }
    }
}

impl<F: Field> Neg for Series<F> {
    type Output = Self;
    fn neg(self) -> Self {
        let coeffs = self.coeffs.into_iter().map(|a| -a).collect();
        Series { ring: self.ring, coeffs }
    }
}

impl<F: Field> Mul for Series<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.ring, rhs.ring);
        let n = self.ring.n;
        let mut out = vec![F::zero_in(&self.ring.base); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { ring: self.ring, coeffs: out }
    }
}

impl<F: Field> Ring for Series<F> {
    type Ctx = SeriesRing<F::Ctx>;

    fn ctx(&self) -> Self::Ctx {
        self.ring.clone()
    }
    fn zero_in(ctx: &Self::Ctx) -> Self {
        Self::new(ctx.clone(), Vec::new())
    }
    fn one_in(ctx: &Self::Ctx) -> Self {
        Self::constant(ctx.clone(), F::one_in(&ctx.base))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].inv()?;
        let n = self.ring.n;
        let mut b: Vec<F> = Vec::with_capacity(n);
        b.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = F::zero_in(&self.ring.base);
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * b[k - j].clone();
            }
            b.push(-(acc * c0_inv.clone()));
        }
        Some(Series { ring: self.ring.clone(), coeffs: b })
    }
}
