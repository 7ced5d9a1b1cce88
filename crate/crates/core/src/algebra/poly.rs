//! Dense univariate polynomials over a field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gf2m::Fe;
use super::traits::Field;

/// Normalized dense polynomial: no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one_in(ctx))
    }

    pub fn constant(c: F) -> Self {
        Self::new(c.ctx(), vec![c])
    }

    /// c * x^k
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero_in(&ctx); k];
        coeffs.push(c);
        Self::new(ctx, coeffs)
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one_in(ctx), 1)
    }

    /// x - r
    pub fn linear_root(r: F) -> Self {
        let ctx = r.ctx();
        Self::new(ctx.clone(), vec![-r, F::one_in(&ctx)])
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    pub fn lead(&self) -> Option<F> {
        self.coeffs.last().cloned()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.ctx.clone(), self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero_in(&self.ctx), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut s = F::zero_in(&self.ctx);
                for _ in 0..i {
                    s = s + c.clone();
                }
                s
            })
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn map_coeffs<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(ctx, self.coeffs.iter().map(f).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("polynomial division by zero");
        let dl_inv = dl.inv().expect("leading coefficient invertible");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(&self.ctx), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero_in(&self.ctx); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * dl_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(self.ctx.clone(), quot), Self::new(self.ctx.clone(), rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with g = s*self + t*other and g monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ctx), Self::zero(ctx));
        let (mut t0, mut t1) = (Self::zero(ctx), Self::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).xgcd(m);
        (g.deg() == 0).then(|| s.rem(m))
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.ctx).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    /// Polynomial composition self(g).
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&self.ctx), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// Largest e with (d)^e dividing self (self nonzero, d nonconstant).
    pub fn multiplicity(&self, d: &Self) -> usize {
        assert!(!self.is_zero() && d.deg() > 0);
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(d) {
            cur = q;
            e += 1;
        }
        e
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.ctx.clone(), (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.ctx.clone(), (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![F::zero_in(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(self.ctx.clone(), out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.ctx.clone(), self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Poly<Fe> {
    /// Distinct roots in the coefficient field, ascending in element order.
    pub fn roots(&self) -> Vec<Fe> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let field = *self.ctx();
        if self.deg() <= 0 {
            return Vec::new();
        }
        if field.order() <= 256 {
            return field.elements().filter(|a| self.eval(a).is_zero()).collect();
        }
        let f = self.monic();
        // x^Q mod f by d squarings.
        let x = Poly::x(&field);
        let mut xq = x.rem(&f);
        for _ in 0..field.degree() {
            xq = xq.mul_mod(&xq, &f);
        }
        let g = f.gcd(&(&xq - &x));
        let mut roots = Vec::new();
        split_linear(&g, &mut roots);
        roots.sort();
        roots
    }

    /// Coefficient-wise sqrt: the unique p with p(x)^2 = self(x^2) in
    /// characteristic 2 (coefficients only, not a polynomial square root).
    pub fn coeff_sqrt(&self) -> Self {
        self.map_coeffs(*self.ctx(), |c| c.sqrt())
    }

    /// Coefficient-wise q-power for q = 2^k.
    pub fn coeff_frobenius(&self, k: u32) -> Self {
        self.map_coeffs(*self.ctx(), |c| c.frobenius_pow(k))
    }
}

/// Splits a monic squarefree product of distinct linear factors.
fn split_linear(g: &Poly<Fe>, out: &mut Vec<Fe>) {
    let field = *g.ctx();
    match g.deg() {
        d if d <= 0 => return,
        1 => {
            out.push(-g.coeff(0) / g.coeff(1));
            return;
        }
        _ => {}
    }
    let mut delta = field.one();
    for _ in 0..field.degree() {
        // T(x) = sum_i (delta x)^(2^i) mod g
        let mut y = Poly::monomial(delta, 1).rem(g);
        let mut t = y.clone();
        for _ in 1..field.degree() {
            y = y.mul_mod(&y, g);
            t = &t + &y;
        }
        let h = g.gcd(&t);
        if h.deg() > 0 && h.deg() < g.deg() {
            split_linear(&h, out);
            split_linear(&g.div_exact(&h).unwrap(), out);
            return;
        }
        delta = delta * field.generator();
    }
    unreachable!("trace splitting separates distinct roots");
}
