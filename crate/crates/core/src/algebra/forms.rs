//! Binary forms over binary fields and common linear factors of quadratics.

use std::fmt;

use super::embedding::FieldEmbedding;
use super::gf2m::{BinaryField, Fe};
use super::matrix::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};

/// A point [x : y] of the projective line, normalised so that the last
/// nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    pub x: Fe,
    pub y: Fe,
}

impl ProjPoint {
    pub fn new(x: Fe, y: Fe) -> Option<Self> {
        if !y.is_zero() {
            let inv = y.inverse()?;
            Some(ProjPoint { x: x * inv, y: y.field().one() })
        } else if !x.is_zero() {
            Some(ProjPoint { x: x.field().one(), y })
        } else {
            None
        }
    }

    pub fn affine(x: Fe) -> Self {
        ProjPoint { x, y: x.field().one() }
    }

    pub fn infinity(field: BinaryField) -> Self {
        ProjPoint { x: field.one(), y: field.zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// All q + 1 points of P^1 over `field`: affine points in element
    /// order, then infinity.
    pub fn all(field: BinaryField) -> Vec<ProjPoint> {
        let mut pts: Vec<_> = field.elements().map(Self::affine).collect();
        pts.push(Self::infinity(field));
        pts
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        ProjPoint { x: e.map(self.x), y: e.map(self.y) }
    }
}

/// Homogeneous form sum c_i X^(d-i) Y^i of fixed degree d.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    field: BinaryField,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form{:?}", self.coeffs)
    }
}

impl BinaryForm {
    /// `coeffs[i]` multiplies X^(d-i) Y^i, with d = coeffs.len() - 1.
    pub fn new(field: BinaryField, coeffs: Vec<Fe>) -> Self {
        assert!(!coeffs.is_empty());
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficient outside the form's field");
        BinaryForm { field, coeffs }
    }

    /// The linear form vanishing at `p`: p.y X - p.x Y.
    pub fn vanishing_at(p: ProjPoint) -> Self {
        Self::new(p.x.field(), vec![p.y, p.x])
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: Fe, y: Fe) -> Fe {
        let d = self.degree() as u64;
        self.coeffs
            .iter()
            .enumerate()
            .fold(self.field.zero(), |acc, (i, &c)| acc + c * x.pow(d - i as u64) * y.pow(i as u64))
    }

    pub fn vanishes_at(&self, p: ProjPoint) -> bool {
        self.eval(p.x, p.y).is_zero()
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.field, other.field);
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        BinaryForm::new(self.field, out)
    }

    pub fn scale(&self, c: Fe) -> BinaryForm {
        BinaryForm::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Proportional as nonzero forms of the same degree.
    pub fn proportional(&self, other: &BinaryForm) -> bool {
        if self.degree() != other.degree() || self.is_zero() || other.is_zero() {
            return false;
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if other.coeffs[k].is_zero() {
            return false;
        }
        let r = other.coeffs[k] / self.coeffs[k];
        self.scale(r) == *other
    }

    pub fn embed(&self, e: &FieldEmbedding) -> BinaryForm {
        BinaryForm::new(e.target(), self.coeffs.iter().map(|&c| e.map(c)).collect())
    }

    /// Dehomogenisation f(x, 1) as a polynomial in x.
    pub fn dehomogenize(&self) -> Poly<Fe> {
        Poly::new(self.field, self.coeffs.iter().rev().copied().collect())
    }

    /// Exact division by another form.
    pub fn div_exact(&self, d: &BinaryForm) -> Option<BinaryForm> {
        if d.is_zero() || d.degree() > self.degree() {
            return None;
        }
        // Long division on the X-leading coefficients, shifting out any Y
        // power of the divisor first.
        let shift = d.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let dc = &d.coeffs[shift..];
        let dd = d.degree();
        let qd = self.degree() - dd;
        let mut rem = self.coeffs.clone();
        let lead_inv = dc[0].inverse().unwrap();
        let mut q = vec![self.field.zero(); qd + 1];
        for i in 0..=qd {
            if i + shift > self.degree() {
                break;
            }
            let c = rem[i + shift] * lead_inv;
            q[i] = c;
            for (j, &b) in dc.iter().enumerate() {
                rem[i + shift + j] = rem[i + shift + j] - c * b;
            }
        }
        let out = BinaryForm::new(self.field, q);
        (out.mul(d) == *self).then_some(out)
    }

    /// Zeros on P^1 over the form's own field.
    pub fn zeros(&self) -> Vec<ProjPoint> {
        let mut pts: Vec<ProjPoint> = self.dehomogenize().roots().into_iter().map(ProjPoint::affine).collect();
        if self.coeffs[0].is_zero() {
            pts.push(ProjPoint::infinity(self.field));
        }
        pts
    }
}

/// Resultant of two binary forms via the Sylvester determinant.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Fe {
    assert_eq!(f.field, g.field);
    let (m, n) = (f.degree(), g.degree());
    let size = m + n;
    let field = f.field;
    let mut s = Matrix::<Fe>::zeros(&field, size, size);
    for r in 0..n {
        for (i, &c) in f.coeffs.iter().enumerate() {
            s.set(r, r + i, c);
        }
    }
    for r in 0..m {
        for (i, &c) in g.coeffs.iter().enumerate() {
            s.set(n + r, r + i, c);
        }
    }
    s.det()
}

/// A common linear factor L of two quadratics with h_i = L l_i.
#[derive(Clone, Debug)]
pub struct CommonFactor {
    /// Embedding of the input field into the field where L is defined.
    pub embedding: FieldEmbedding,
    pub factor: BinaryForm,
    pub cofactors: (BinaryForm, BinaryForm),
    /// The base point where L vanishes.
    pub base_point: ProjPoint,
}

/// Finds L, l1, l2 with h1 = L l1 and h2 = L l2, given two quadratic forms
/// with vanishing resultant. L vanishes at `hint` when that is a common
/// zero; otherwise at the smallest common zero. If the common zeros are not
/// rational, the factorisation is returned over the quadratic extension.
pub fn quadratic_common_linear_factor(
    h1: &BinaryForm,
    h2: &BinaryForm,
    hint: Option<ProjPoint>,
) -> Result<CommonFactor> {
    if h1.field != h2.field {
        return Err(Error::FieldMismatch(h1.field.degree(), h2.field.degree()));
    }
    if h1.degree() != 2 || h2.degree() != 2 || h1.is_zero() || h2.is_zero() {
        return Err(Error::Precondition("expected two nonzero quadratic forms".into()));
    }
    if !resultant(h1, h2).is_zero() {
        return Err(Error::NoCommonFactor);
    }
    let field = h1.field;
    let mut emb = FieldEmbedding::identity(field);
    let mut common = common_zeros(h1, h2);
    if common.is_empty() {
        let ext = BinaryField::default_for(2 * field.degree())?;
        emb = FieldEmbedding::new(field, ext)?;
        common = common_zeros(&h1.embed(&emb), &h2.embed(&emb));
    }
    let hint = hint.map(|p| if p.x.field() == field { p.embed(&emb) } else { p });
    let base_point = match hint {
        Some(p) if common.contains(&p) => p,
        _ => *common.first().ok_or(Error::NoCommonFactor)?,
    };
    let factor = BinaryForm::vanishing_at(base_point);
    let (e1, e2) = (h1.embed(&emb), h2.embed(&emb));
    let l1 = e1.div_exact(&factor).ok_or_else(|| Error::Verification("L does not divide h1".into()))?;
    let l2 = e2.div_exact(&factor).ok_or_else(|| Error::Verification("L does not divide h2".into()))?;
    Ok(CommonFactor { embedding: emb, factor, cofactors: (l1, l2), base_point })
}

fn common_zeros(h1: &BinaryForm, h2: &BinaryForm) -> Vec<ProjPoint> {
    let mut z: Vec<ProjPoint> = h1.zeros().into_iter().filter(|p| h2.vanishes_at(*p)).collect();
    z.sort();
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    #[test]
    fn resultant_detects_common_zero() {
        let f = gf(4);
        let l = BinaryForm::vanishing_at(ProjPoint::affine(f.element(5)));
        let a = BinaryForm::new(f, vec![f.one(), f.element(3)]);
        let b = BinaryForm::new(f, vec![f.element(7), f.one()]);
        assert!(resultant(&l.mul(&a), &l.mul(&b)).is_zero());
        assert!(!resultant(&a, &b).is_zero());
    }

    #[test]
    fn factor_through_infinity() {
        let f = gf(4);
        let y = BinaryForm::new(f, vec![f.zero(), f.one()]);
        let a = BinaryForm::new(f, vec![f.one(), f.element(2)]);
        let b = BinaryForm::new(f, vec![f.element(9), f.one()]);
        let cf = quadratic_common_linear_factor(&y.mul(&a), &y.mul(&b), None).unwrap();
        assert!(cf.base_point.is_infinity());
        assert_eq!(cf.factor.mul(&cf.cofactors.0), y.mul(&a));
    }

    #[test]
    fn proportional_irreducible_needs_extension() {
        let f = gf(1);
        // X^2 + XY + Y^2 is irreducible over GF(2).
        let q = BinaryForm::new(f, vec![f.one(), f.one(), f.one()]);
        let cf = quadratic_common_linear_factor(&q, &q, None).unwrap();
        assert_eq!(cf.embedding.target().degree(), 2);
        assert_eq!(cf.factor.mul(&cf.cofactors.0), q.embed(&cf.embedding));
    }

    #[test]
    fn coprime_rejected() {
        let f = gf(2);
        let a = BinaryForm::new(f, vec![f.one(), f.zero(), f.zero()]);
        let b = BinaryForm::new(f, vec![f.zero(), f.zero(), f.one()]);
        assert_eq!(quadratic_common_linear_factor(&a, &b, None).unwrap_err(), Error::NoCommonFactor);
    }
}
