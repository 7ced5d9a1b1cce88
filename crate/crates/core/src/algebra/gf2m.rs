//! Binary finite fields GF(2^d) in a polynomial basis.
//!
//! Elements are bit-masks: bit `i` is the coefficient of `x^i`. The modulus
//! is stored the same way, including its leading bit.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::traits::{FiniteField, Field, Ring};
use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 32;

/// Degrees up to this bound are checked by exhaustive trial division.
pub const EXHAUSTIVE_IRREDUCIBILITY_DEGREE: u32 = 16;

const SHIPPED_TABLE: &str = include_str!("../../data/moduli.txt");

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryField {
    degree: u32,
    modulus: u64,
}

impl fmt::Debug for BinaryField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {:#x})", self.degree, self.modulus)
    }
}

pub(crate) fn deg2(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    let mut r = 0u128;
    let mut b = b;
    let mut a = a as u128;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

/// Remainder of GF(2)[x] polynomials.
pub(crate) fn poly2_rem(mut a: u128, m: u64) -> u64 {
    let dm = deg2(m);
    let m = m as u128;
    while a != 0 {
        let da = 127 - a.leading_zeros() as i32;
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a as u64
}

pub(crate) fn poly2_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly2_rem(a as u128, b);
        a = b;
        b = r;
    }
    a
}

/// Returns a nontrivial factor of `m` if it is reducible.
fn find_factor(m: u64) -> Option<u64> {
    let d = deg2(m) as u32;
    if d <= 1 {
        return None;
    }
    if d <= EXHAUSTIVE_IRREDUCIBILITY_DEGREE {
        for k in 1..=d / 2 {
            for low in 0..(1u64 << k) {
                let cand = (1u64 << k) | low;
                if poly2_rem(m as u128, cand) == 0 {
                    return Some(cand);
                }
            }
        }
        return None;
    }
    // Ben-Or: m is irreducible iff gcd(m, x^(2^i) - x) = 1 for i <= d/2.
    let mut p = 2u64;
    for _ in 1..=d / 2 {
        p = poly2_rem(clmul(p, p), m);
        let g = poly2_gcd(m, p ^ 2);
        if g != 1 {
            return Some(g);
        }
    }
    None
}

impl BinaryField {
    /// Builds GF(2^d) from an explicit modulus, verifying irreducibility.
    pub fn new(degree: u32, modulus: u64) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(degree));
        }
        if deg2(modulus) != degree as i32 {
            return Err(Error::ModulusDegree { degree, modulus });
        }
        if let Some(factor) = find_factor(modulus) {
            return Err(Error::Reducible { degree, modulus, factor });
        }
        Ok(BinaryField { degree, modulus })
    }

    /// GF(2^d) with the modulus from the shipped table.
    pub fn default_for(degree: u32) -> Result<Self> {
        ModulusTable::shipped().field(degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn mask(&self) -> u64 {
        self.order() - 1
    }

    pub fn zero(&self) -> Fe {
        Fe { field: *self, bits: 0 }
    }

    pub fn one(&self) -> Fe {
        Fe { field: *self, bits: poly2_rem(1, self.modulus) }
    }

    /// Class of `x` modulo the modulus.
    pub fn generator(&self) -> Fe {
        Fe { field: *self, bits: poly2_rem(2, self.modulus) }
    }

    pub fn element(&self, bits: u64) -> Fe {
        assert!(bits <= self.mask(), "mask {bits:#x} too wide for {self:?}");
        Fe { field: *self, bits }
    }

    /// Elements in mask order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order()).map(move |b| Fe { field: *self, bits: b })
    }

    pub fn contains_subfield_degree(&self, e: u32) -> bool {
        e > 0 && self.degree % e == 0
    }
}

/// `d,hex-mask` lines; `#` starts a comment.
#[derive(Clone, Debug)]
pub struct ModulusTable {
    entries: Vec<BinaryField>,
}

impl ModulusTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: &str| Error::ModulusTable { line: i + 1, reason: reason.to_string() };
            let (d, m) = line.split_once(',').ok_or_else(|| bad("expected `d,hex`"))?;
            let d: u32 = d.trim().parse().map_err(|_| bad("degree is not an integer"))?;
            let m = parse_hex(m.trim()).ok_or_else(|| bad("modulus is not a hex mask"))?;
            let field = BinaryField::new(d, m).map_err(|e| bad(&e.to_string()))?;
            if entries.iter().any(|f: &BinaryField| f.degree == d) {
                return Err(bad("duplicate degree"));
            }
            entries.push(field);
        }
        Ok(ModulusTable { entries })
    }

    pub fn shipped() -> Self {
        Self::parse(SHIPPED_TABLE).expect("shipped modulus table is valid")
    }

    pub fn field(&self, degree: u32) -> Result<BinaryField> {
        self.entries
            .iter()
            .find(|f| f.degree == degree)
            .copied()
            .ok_or(Error::NoDefaultModulus(degree))
    }

    pub fn fields(&self) -> &[BinaryField] {
        &self.entries
    }
}

pub fn parse_hex(s: &str) -> Option<u64> {
    let s = s.trim();
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    if digits.is_empty() {
        return None;
    }
    u64::from_str_radix(digits, 16).ok()
}

/// An element of a [`BinaryField`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    field: BinaryField,
    bits: u64,
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

impl Fe {
    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn check(&self, other: &Fe) {
        assert!(
            self.field == other.field,
            "mixing {:?} and {:?} needs an explicit embedding",
            self.field,
            other.field
        );
    }

    pub fn square(self) -> Fe {
        self * self
    }

    /// The absolute Frobenius a -> a^2.
    pub fn frobenius(self) -> Fe {
        self.square()
    }

    /// a -> a^(2^k).
    pub fn frobenius_pow(self, k: u32) -> Fe {
        let k = k % self.field.degree;
        (0..k).fold(self, |a, _| a.square())
    }

    /// The unique b with b^2 = a, namely a^(2^(d-1)).
    pub fn sqrt(self) -> Fe {
        self.frobenius_pow(self.field.degree - 1)
    }

    pub fn pow(self, mut e: u64) -> Fe {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Fe> {
        if self.is_zero() {
            return None;
        }
        // Extended Euclid in GF(2)[x].
        let m = self.field.modulus;
        let (mut r0, mut r1) = (m, self.bits);
        let (mut s0, mut s1) = (0u64, 1u64);
        while r1 != 0 {
            let mut q = 0u64;
            let mut r = r0;
            let d1 = deg2(r1);
            while r != 0 && deg2(r) >= d1 {
                let sh = deg2(r) - d1;
                q ^= 1 << sh;
                r ^= r1 << sh;
            }
            let s = s0 ^ poly2_rem(clmul(q, s1), m);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the constant 1 here since the modulus is irreducible.
        Some(Fe { field: self.field, bits: poly2_rem(s0 as u128, m) })
    }

    /// Trace from this field down to its subfield GF(2^e), as an element of
    /// this field.
    pub fn trace_to(self, e: u32) -> Fe {
        let d = self.field.degree;
        assert!(e > 0 && d % e == 0, "GF(2^{e}) is not a subfield of GF(2^{d})");
        let mut acc = self.field.zero();
        let mut y = self;
        for _ in 0..d / e {
            acc = acc + y;
            y = y.frobenius_pow(e);
        }
        acc
    }

    /// Absolute trace to GF(2), as a bit.
    pub fn abs_trace(self) -> bool {
        !self.trace_to(1).is_zero()
    }

    /// Whether the element lies in the subfield GF(2^e).
    pub fn in_subfield(self, e: u32) -> bool {
        self.frobenius_pow(e) == self
    }
}

impl Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        self.check(&rhs);
        Fe { field: self.field, bits: self.bits ^ rhs.bits }
    }
}

impl Sub for Fe {
    type Output = Fe;
    fn sub(self, rhs: Fe) -> Fe {
        self + rhs
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        self
    }
}

impl Mul for Fe {
    type Output = Fe;
    fn mul(self, rhs: Fe) -> Fe {
        self.check(&rhs);
        Fe { field: self.field, bits: poly2_rem(clmul(self.bits, rhs.bits), self.field.modulus) }
    }
}

impl Div for Fe {
    type Output = Fe;
    fn div(self, rhs: Fe) -> Fe {
        self * rhs.inverse().expect("division by zero")
    }
}

impl Ring for Fe {
    type Ctx = BinaryField;

    fn ctx(&self) -> BinaryField {
        self.field
    }
    fn zero_in(ctx: &BinaryField) -> Fe {
        ctx.zero()
    }
    fn one_in(ctx: &BinaryField) -> Fe {
        ctx.one()
    }
    fn is_zero(&self) -> bool {
        self.bits == 0
    }
    fn unit_inverse(&self) -> Option<Fe> {
        self.inverse()
    }
    fn pow(&self, e: u64) -> Fe {
        Fe::pow(*self, e)
    }
}

impl Field for Fe {}

impl FiniteField for Fe {
    fn order(ctx: &BinaryField) -> u64 {
        ctx.order()
    }
    fn characteristic(_: &BinaryField) -> u64 {
        2
    }
    fn elements(ctx: &BinaryField) -> Vec<Fe> {
        ctx.elements().collect()
    }
    fn random<R: rand::Rng + ?Sized>(ctx: &BinaryField, rng: &mut R) -> Fe {
        ctx.element(rng.gen::<u64>() & ctx.mask())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    #[test]
    fn small_fields_build() {
        assert_eq!(gf(1).order(), 2);
        let f4 = BinaryField::new(2, 0b111).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(BinaryField::new(4, 0b10011).unwrap().order(), 16);
    }

    #[test]
    fn reducible_modulus_names_a_factor() {
        // x^4 + 1 = (x + 1)^4
        match BinaryField::new(4, 0b10001) {
            Err(Error::Reducible { factor, .. }) => {
                assert_eq!(poly2_rem(0b10001, factor), 0);
                assert!(deg2(factor) >= 1 && deg2(factor) < 4);
            }
            other => panic!("expected reducible error, got {other:?}"),
        }
        // x^2 + x = x(x + 1)
        assert!(matches!(BinaryField::new(2, 0b110), Err(Error::Reducible { .. })));
        // degree above the exhaustive bound: (x^17 + x^3 + 1)(x + 1)
        let m = clmul(0x20009, 0b11) as u64;
        assert!(matches!(BinaryField::new(18, m), Err(Error::Reducible { .. })));
    }

    #[test]
    fn gf2_quadratic_irreducible_by_root_check() {
        // x^2+x+1 has no root in GF(2)
        let m = 0b111u64;
        for r in 0..2u64 {
            let val = (r * r) ^ r ^ 1;
            assert_ne!(val & 1, 0);
        }
        assert!(BinaryField::new(2, m).is_ok());
    }

    #[test]
    fn shipped_table_pins_standard_moduli() {
        let t = ModulusTable::shipped();
        assert_eq!(t.fields().len(), 32);
        assert_eq!(t.field(2).unwrap().modulus(), 0x7);
        assert_eq!(t.field(4).unwrap().modulus(), 0x13);
        assert_eq!(t.field(8).unwrap().modulus(), 0x11D);
    }

    #[test]
    fn table_rejects_reducible_entry() {
        assert!(ModulusTable::parse("2,0x7\n4,0x11\n").is_err());
        assert!(ModulusTable::parse("2,zz\n").is_err());
        let t = ModulusTable::parse("# comment\n2,0x7\n").unwrap();
        assert!(t.field(3).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for d in 1..=4 {
            let f = gf(d);
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(a * a.inverse().unwrap(), f.one());
                }
                for &b in &els {
                    assert_eq!(a * b, b * a);
                    assert_eq!(a + b, b + a);
                    for &c in &els {
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn sqrt_in_gf4() {
        let f4 = gf(2);
        let w = f4.generator();
        assert_eq!(w * w, w + f4.one());
        assert_eq!((w + f4.one()).sqrt(), w);
        assert_eq!(f4.zero().sqrt(), f4.zero());
        assert_eq!(f4.one().sqrt(), f4.one());
    }

    #[test]
    fn frobenius_fixes_exactly_gf2() {
        for d in 1..=8 {
            let f = gf(d);
            let fixed: Vec<u64> = f.elements().filter(|a| a.frobenius() == *a).map(|a| a.bits()).collect();
            assert_eq!(fixed, vec![0, f.one().bits()]);
        }
    }

    #[test]
    fn frobenius_and_sqrt_are_inverse() {
        for d in 1..=8 {
            for a in gf(d).elements() {
                assert_eq!(a.sqrt().frobenius(), a);
                assert_eq!(a.frobenius().sqrt(), a);
            }
        }
    }

    #[test]
    fn trace_lands_in_subfield() {
        let f = gf(12);
        for bits in [1u64, 2, 0x123, 0xabc, 0xfff] {
            let a = f.element(bits);
            for e in [1, 2, 3, 4, 6] {
                assert!(a.trace_to(e).in_subfield(e));
            }
        }
    }

    #[test]
    fn inverse_large_degree() {
        let f = gf(32);
        let a = f.element(0xdead_beef);
        assert_eq!(a * a.inverse().unwrap(), f.one());
        assert_eq!(a.pow(f.order() - 1), f.one());
    }
}
