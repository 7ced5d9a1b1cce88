//! The genus-2 family y^2 + (x^2 + x) y = (t^2 + t)(x^5 + x) + t^2 x^3 over
//! binary fields, its Frobenius twists, and points over extensions.

mod local;
mod zeta;

pub use local::LocalExpansion;
pub use zeta::ZetaData;

use std::fmt;
use std::str::FromStr;

use crate::algebra::artin_schreier::ArtinSchreier;
use crate::algebra::forms::ProjPoint;
use crate::algebra::gf2m::parse_hex;
use crate::algebra::{BinaryField, Fe, FieldEmbedding, Poly};
use crate::error::{Error, Result};

/// A member X(n) of the family: base field κ, parameter t ∉ {0, 1}, and
/// twist index n. The effective parameter is t^(2^n).
///
/// Equality compares the base field and the effective parameter, so X(d)
/// and X(0) over GF(2^d) are the same curve.
#[derive(Clone, Copy, Debug)]
pub struct Curve {
    base: BinaryField,
    t: Fe,
    twist: u32,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.parameter() == other.parameter()
    }
}
impl Eq for Curve {}

impl Curve {
    pub fn new(t: Fe, twist: u32) -> Result<Self> {
        let base = t.field();
        if t.is_zero() || t == base.one() {
            return Err(Error::InvalidCurve(format!("t = {t} must avoid 0 and 1")));
        }
        Ok(Curve { base, t, twist })
    }

    pub fn base(&self) -> BinaryField {
        self.base
    }

    pub fn t(&self) -> Fe {
        self.t
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    /// t_n = t^(2^n).
    pub fn parameter(&self) -> Fe {
        self.t.frobenius_pow(self.twist)
    }

    pub fn twisted(&self, n: u32) -> Curve {
        Curve { twist: n, ..*self }
    }

    /// X(n+1).
    pub fn successor(&self) -> Curve {
        self.twisted(self.twist + 1)
    }

    /// X(n-1), reading X(0) as X(d).
    pub fn predecessor(&self) -> Curve {
        let n = if self.twist == 0 { self.base.degree() } else { self.twist };
        self.twisted(n - 1)
    }

    /// h(x) = x^2 + x.
    pub fn h(&self) -> Poly<Fe> {
        let (o, z) = (self.base.one(), self.base.zero());
        Poly::new(self.base, vec![z, o, o])
    }

    /// f(x) = (t_n^2 + t_n)(x^5 + x) + t_n^2 x^3.
    pub fn f(&self) -> Poly<Fe> {
        let t = self.parameter();
        let a = t * t + t;
        let z = self.base.zero();
        Poly::new(self.base, vec![z, a, z, t * t, z, a])
    }

    /// The curve over an extension of its base field.
    pub fn model(&self, field: BinaryField) -> Result<CurveModel> {
        let embedding = FieldEmbedding::new(self.base, field)?;
        CurveModel::with_embedding(*self, embedding)
    }

    pub fn base_model(&self) -> CurveModel {
        CurveModel::with_embedding(*self, FieldEmbedding::identity(self.base))
            .expect("identity embedding")
    }

    /// "d=<deg>;t=<hex>;n=<twist>" with the default modulus for GF(2^d).
    pub fn spec_string(&self) -> String {
        format!("d={};t={:#x};n={}", self.base.degree(), self.t.bits(), self.twist)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

impl FromStr for Curve {
    type Err = Error;

    /// Parses "d=<deg>;t=<hex>;n=<twist>"; `n` may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let (mut d, mut t, mut n) = (None, None, 0u32);
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "d" => d = Some(value.trim().parse::<u32>().map_err(|e| Error::Parse(format!("d: {e}")))?),
                "t" => t = Some(parse_hex(value.trim()).ok_or_else(|| Error::Parse(format!("t: bad hex {value:?}")))?),
                "n" => n = value.trim().parse().map_err(|e| Error::Parse(format!("n: {e}")))?,
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let d = d.ok_or_else(|| Error::Parse("missing d".into()))?;
        let t = t.ok_or_else(|| Error::Parse("missing t".into()))?;
        let base = BinaryField::default_for(d)?;
        if t > base.mask() {
            return Err(Error::Parse(format!("t = {t:#x} does not fit GF(2^{d})")));
        }
        Curve::new(base.element(t), n)
    }
}

/// A point of the degree-5 model: the single point at infinity or an affine
/// point whose coordinates share a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Fe, y: Fe },
}

impl CurvePoint {
    pub fn affine(x: Fe, y: Fe) -> Self {
        assert_eq!(x.field(), y.field(), "point coordinates in different fields");
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<Fe> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(*x),
        }
    }

    pub fn y(&self) -> Option<Fe> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { y, .. } => Some(*y),
        }
    }

    pub fn field(&self) -> Option<BinaryField> {
        self.x().map(|x| x.field())
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        match *self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: e.map(x), y: e.map(y) },
        }
    }

    /// Pulls the point back along `e`, if its coordinates lie in the image.
    pub fn descend(&self, e: &FieldEmbedding) -> Result<Self> {
        Ok(match *self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: e.preimage(x)?, y: e.preimage(y)? },
        })
    }

    /// Coordinate-wise 2^k-th power.
    pub fn frobenius_pow(&self, k: u32) -> Self {
        match *self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.frobenius_pow(k), y: y.frobenius_pow(k) },
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("inf"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// A curve base-changed to an extension field E, with h and f mapped into E.
#[derive(Clone, Debug)]
pub struct CurveModel {
    curve: Curve,
    embedding: FieldEmbedding,
    h: Poly<Fe>,
    f: Poly<Fe>,
    solver: ArtinSchreier,
}

impl PartialEq for CurveModel {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve && self.embedding == other.embedding
    }
}
impl Eq for CurveModel {}

impl CurveModel {
    pub fn with_embedding(curve: Curve, embedding: FieldEmbedding) -> Result<Self> {
        if embedding.source() != curve.base() {
            return Err(Error::FieldMismatch(embedding.source().degree(), curve.base().degree()));
        }
        let h = embedding.map_poly(&curve.h());
        let f = embedding.map_poly(&curve.f());
        let solver = ArtinSchreier::new(embedding.target(), 1)?;
        Ok(CurveModel { curve, embedding, h, f, solver })
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn field(&self) -> BinaryField {
        self.embedding.target()
    }

    /// Embedding of the base field into this model's field.
    pub fn embedding(&self) -> &FieldEmbedding {
        &self.embedding
    }

    pub fn h(&self) -> &Poly<Fe> {
        &self.h
    }

    pub fn f(&self) -> &Poly<Fe> {
        &self.f
    }

    /// The same curve over a larger field, with the embedding from this
    /// model's field into it.
    pub fn extend(&self, field: BinaryField) -> Result<(CurveModel, FieldEmbedding)> {
        let step = FieldEmbedding::new(self.field(), field)?;
        let model = CurveModel::with_embedding(self.curve, self.embedding.then(&step)?)?;
        Ok((model, step))
    }

    /// The same twist index shifted by one, over the same field.
    pub fn successor(&self) -> CurveModel {
        CurveModel::with_embedding(self.curve.successor(), self.embedding.clone()).expect("same embedding")
    }

    pub fn predecessor(&self) -> CurveModel {
        CurveModel::with_embedding(self.curve.predecessor(), self.embedding.clone()).expect("same embedding")
    }

    /// y^2 + h(x) y + f(x); zero exactly on the curve.
    pub fn equation(&self, x: Fe, y: Fe) -> Fe {
        y * y + self.h.eval(&x) * y + self.f.eval(&x)
    }

    pub fn on_curve(&self, p: &CurvePoint) -> Result<bool> {
        match *p {
            CurvePoint::Infinity => Ok(true),
            CurvePoint::Affine { x, y } => {
                if x.field() != self.field() || y.field() != self.field() {
                    return Err(Error::FieldMismatch(x.field().degree(), self.field().degree()));
                }
                Ok(self.equation(x, y).is_zero())
            }
        }
    }

    /// Checked constructor for an affine point on this model.
    pub fn point(&self, x: Fe, y: Fe) -> Result<CurvePoint> {
        let p = CurvePoint::affine(x, y);
        if self.on_curve(&p)? {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// The y-coordinates over x in this model's field, ascending.
    pub fn ys_over(&self, x: Fe) -> Vec<Fe> {
        let hx = self.h.eval(&x);
        let fx = self.f.eval(&x);
        if hx.is_zero() {
            return vec![fx.sqrt()];
        }
        // y = h z with z^2 + z = f / h^2.
        let inv = hx.inverse().unwrap();
        match self.solver.solve(fx * inv * inv) {
            Some(z) => {
                let mut ys = vec![hx * z, hx * z + hx];
                ys.sort();
                ys
            }
            None => Vec::new(),
        }
    }

    pub fn points_over(&self, x: Fe) -> Vec<CurvePoint> {
        self.ys_over(x).into_iter().map(|y| CurvePoint::Affine { x, y }).collect()
    }

    /// All points over this model's field: infinity, then affine points in
    /// (x, y) order.
    pub fn points(&self) -> Vec<CurvePoint> {
        let mut pts = vec![CurvePoint::Infinity];
        for x in self.field().elements() {
            pts.extend(self.points_over(x));
        }
        pts
    }

    /// #C(E), by the trace criterion without building the points.
    pub fn point_count(&self) -> u64 {
        let mut n = 1u64;
        for x in self.field().elements() {
            let hx = self.h.eval(&x);
            if hx.is_zero() {
                n += 1;
            } else {
                let inv = hx.inverse().unwrap();
                if !(self.f.eval(&x) * inv * inv).abs_trace() {
                    n += 2;
                }
            }
        }
        n
    }

    /// ι(x, y) = (x, y + h(x)).
    pub fn involution(&self, p: &CurvePoint) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x, y: y + self.h.eval(&x) },
        }
    }

    /// Points fixed by ι over this field: infinity and the points over the
    /// roots of h.
    pub fn weierstrass_points(&self) -> Vec<CurvePoint> {
        let mut pts = vec![CurvePoint::Infinity];
        for x in self.h.roots() {
            pts.extend(self.points_over(x));
        }
        pts
    }

    /// Branch points of x: the roots of h, plus infinity since deg f is odd.
    pub fn branch_points(&self) -> Vec<ProjPoint> {
        let mut pts: Vec<ProjPoint> = self.h.roots().into_iter().map(ProjPoint::affine).collect();
        if self.f.deg() % 2 == 1 {
            pts.push(ProjPoint::infinity(self.field()));
        }
        pts
    }

    /// Branch-point criterion for ordinarity: g + 1 = 3 branch points.
    /// The roots of h all lie in the base field here, so checking over the
    /// model's own field is enough.
    pub fn is_ordinary(&self) -> bool {
        self.branch_points().len() == 3
    }

    /// (x, y) -> (x^2, y^2) from X(n) to X(n+1), checked on the image.
    pub fn relative_frobenius(&self, p: &CurvePoint) -> Result<CurvePoint> {
        let image = p.frobenius_pow(1);
        if !self.successor().on_curve(&image)? {
            return Err(Error::Verification(format!("Frobenius image of {p} is off X(n+1)")));
        }
        Ok(image)
    }

    /// Square-root coordinates: the preimage on X(n-1) of a point on this
    /// model.
    pub fn frobenius_preimage(&self, p: &CurvePoint) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.sqrt(), y: y.sqrt() },
        }
    }

    /// Whether both partial derivatives vanish at an affine point.
    pub fn is_singular_at(&self, x: Fe, y: Fe) -> bool {
        let fx = self.h.derivative().eval(&x) * y + self.f.derivative().eval(&x);
        let fy = self.h.eval(&x);
        fx.is_zero() && fy.is_zero()
    }

    pub fn local_expansion(&self, p: &CurvePoint, precision: usize) -> Result<LocalExpansion> {
        LocalExpansion::at(self, p, precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    fn w_curve() -> Curve {
        Curve::new(gf(2).generator(), 0).unwrap()
    }

    #[test]
    fn parameter_validation_and_parsing() {
        assert!(Curve::new(gf(2).zero(), 0).is_err());
        assert!(Curve::new(gf(2).one(), 0).is_err());
        let c: Curve = "d=2;t=0x2;n=0".parse().unwrap();
        assert_eq!(c, w_curve());
        assert_eq!(c.spec_string(), "d=2;t=0x2;n=0");
        assert!("d=2;t=0x0".parse::<Curve>().is_err());
        assert!("d=2;t=0x9".parse::<Curve>().is_err());
        assert!("d=2".parse::<Curve>().is_err());
    }

    #[test]
    fn twist_cycle_returns_to_start() {
        let c = Curve::new(gf(4).element(0b0110), 0).unwrap();
        assert_eq!(c.twisted(4), c);
        assert_ne!(c.twisted(1), c);
        assert_eq!(c.predecessor(), c.twisted(3));
    }

    #[test]
    fn on_curve_examples() {
        let m = w_curve().base_model();
        let f = m.field();
        assert!(m.on_curve(&CurvePoint::Infinity).unwrap());
        assert!(m.on_curve(&CurvePoint::affine(f.zero(), f.zero())).unwrap());
        assert!(!m.on_curve(&CurvePoint::affine(f.zero(), f.one())).unwrap());
        let other = gf(4);
        assert!(m.on_curve(&CurvePoint::affine(other.zero(), other.zero())).is_err());
    }

    #[test]
    fn point_enumeration_matches_brute_force() {
        let (m, _) = w_curve().base_model().extend(gf(4)).unwrap();
        let f = m.field();
        let mut brute = vec![CurvePoint::Infinity];
        for x in f.elements() {
            for y in f.elements() {
                if m.equation(x, y).is_zero() {
                    brute.push(CurvePoint::Affine { x, y });
                }
            }
        }
        assert_eq!(m.points(), brute);
        assert_eq!(m.point_count(), brute.len() as u64);
    }

    #[test]
    fn involution_and_weierstrass_points() {
        let (m, _) = w_curve().base_model().extend(gf(4)).unwrap();
        let pts = m.points();
        let mut fixed: Vec<_> = pts.iter().copied().filter(|p| m.involution(p) == *p).collect();
        for p in &pts {
            assert_eq!(m.involution(&m.involution(p)), *p);
        }
        fixed.sort();
        let mut w = m.weierstrass_points();
        w.sort();
        assert_eq!(fixed, w);
        assert_eq!(w.len(), 3);
        let zero = m.field().zero();
        assert_eq!(m.involution(&CurvePoint::affine(zero, zero)), CurvePoint::affine(zero, zero));
    }

    #[test]
    fn branch_points_are_zero_one_infinity() {
        let m = w_curve().base_model();
        let f = m.field();
        assert_eq!(
            m.branch_points(),
            vec![ProjPoint::affine(f.zero()), ProjPoint::affine(f.one()), ProjPoint::infinity(f)]
        );
        assert!(m.is_ordinary());
    }

    #[test]
    fn frobenius_squares_the_equation() {
        let (m, _) = Curve::new(gf(4).element(0b1010), 0).unwrap().base_model().extend(gf(8)).unwrap();
        let next = m.successor();
        let f = m.field();
        for x in f.elements().step_by(7) {
            for y in f.elements().step_by(5) {
                let lhs = next.equation(x * x, y * y);
                let e = m.equation(x, y);
                assert_eq!(lhs, e * e);
            }
        }
        for p in m.points() {
            let image = m.relative_frobenius(&p).unwrap();
            assert_eq!(next.frobenius_preimage(&image), p);
            assert_eq!(m.relative_frobenius(&m.involution(&p)).unwrap(), next.involution(&image));
        }
    }

    #[test]
    fn no_singular_points_over_gf256() {
        let (m, _) = w_curve().base_model().extend(gf(8)).unwrap();
        for p in m.points() {
            if let CurvePoint::Affine { x, y } = p {
                assert!(!m.is_singular_at(x, y));
            }
        }
    }
}
