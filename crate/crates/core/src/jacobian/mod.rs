//! Degree-0 divisor classes on X(n) in Mumford form, with Cantor's
//! algorithm for y^2 + h y = f in characteristic 2.

mod divisor;
mod enumerate;
mod frobenius;
mod riemann_roch;
mod torsion;

pub use divisor::FormalDivisor;
pub use enumerate::group_order;
pub use riemann_roch::{riemann_roch_space, PrincipalWitness, RrBasisElement};
pub use torsion::{torsion_subgroup, TorsionReport};

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::gf2m::parse_hex;
use crate::algebra::{BinaryField, Fe, FieldEmbedding, Poly};
use crate::curve::{Curve, CurveModel, CurvePoint};
use crate::error::{Error, Result};

/// A reduced Mumford pair (u, v): u monic of degree at most 2, deg v < deg u,
/// and u | v^2 + h v + f. The identity is (1, 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianClass {
    curve: Curve,
    u: Poly<Fe>,
    v: Poly<Fe>,
}

impl JacobianClass {
    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn u(&self) -> &Poly<Fe> {
        &self.u
    }

    pub fn v(&self) -> &Poly<Fe> {
        &self.v
    }

    pub fn field(&self) -> BinaryField {
        *self.u.ctx()
    }

    /// deg u, the number of affine points in the reduced divisor.
    pub fn weight(&self) -> usize {
        self.u.deg() as usize
    }

    pub fn is_identity(&self) -> bool {
        self.u.deg() == 0
    }

    fn key(&self) -> (usize, Vec<u64>, Vec<u64>) {
        let bits = |p: &Poly<Fe>, n: usize| (0..n).map(|i| p.coeff(i).bits()).collect::<Vec<_>>();
        let n = self.weight();
        (n, bits(&self.u, n), bits(&self.v, n))
    }
}

/// Classes order by deg u, then the coefficients of u, then those of v,
/// lowest degree first.
impl Ord for JacobianClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for JacobianClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JacobianClass {
    /// "u=<hex,...>;v=<hex,...>;field=<d>", coefficients in ascending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hex = |p: &Poly<Fe>| p.coeffs().iter().map(|c| format!("{:#x}", c.bits())).collect::<Vec<_>>().join(",");
        write!(f, "u={};v={};field={}", hex(&self.u), hex(&self.v), self.field().degree())
    }
}

/// The group J(X(n))(E) for a curve model over E.
#[derive(Clone, Debug)]
pub struct Jacobian {
    model: CurveModel,
    identity_embedding: FieldEmbedding,
    extension: OnceLock<Box<(Jacobian, FieldEmbedding)>>,
}

impl Jacobian {
    pub fn new(model: CurveModel) -> Self {
        let identity_embedding = FieldEmbedding::identity(model.field());
        Jacobian { model, identity_embedding, extension: OnceLock::new() }
    }

    pub fn over(curve: &Curve, field: BinaryField) -> Result<Self> {
        Ok(Self::new(curve.model(field)?))
    }

    pub fn model(&self) -> &CurveModel {
        &self.model
    }

    pub fn curve(&self) -> Curve {
        self.model.curve()
    }

    pub fn field(&self) -> BinaryField {
        self.model.field()
    }

    /// The same group over the quadratic extension of the field, with the
    /// embedding into it. Built once and cached.
    pub fn quadratic_extension(&self) -> Result<(&Jacobian, &FieldEmbedding)> {
        if self.extension.get().is_none() {
            let field = BinaryField::default_for(2 * self.field().degree())?;
            let (model, emb) = self.model.extend(field)?;
            let _ = self.extension.set(Box::new((Jacobian::new(model), emb)));
        }
        let pair = self.extension.get().expect("initialised above");
        Ok((&pair.0, &pair.1))
    }

    /// The same group over an arbitrary extension field.
    pub fn extend(&self, field: BinaryField) -> Result<(Jacobian, FieldEmbedding)> {
        let (model, emb) = self.model.extend(field)?;
        Ok((Jacobian::new(model), emb))
    }

    /// The group of the twist X(n-1) over the same field.
    pub fn predecessor(&self) -> Jacobian {
        Jacobian::new(self.model.predecessor())
    }

    pub fn successor(&self) -> Jacobian {
        Jacobian::new(self.model.successor())
    }

    pub fn identity(&self) -> JacobianClass {
        let f = self.field();
        JacobianClass { curve: self.curve(), u: Poly::one(&f), v: Poly::zero(&f) }
    }

    /// Checked constructor for a reduced Mumford pair.
    pub fn class(&self, u: Poly<Fe>, v: Poly<Fe>) -> Result<JacobianClass> {
        for p in [&u, &v] {
            if *p.ctx() != self.field() {
                return Err(Error::FieldMismatch(p.ctx().degree(), self.field().degree()));
            }
        }
        if !u.is_monic() || u.deg() > 2 {
            return Err(Error::Precondition("u must be monic of degree at most 2".into()));
        }
        if v.deg() >= u.deg() {
            return Err(Error::Precondition("deg v must be below deg u".into()));
        }
        if !self.norm(&v).rem(&u).is_zero() {
            return Err(Error::Precondition("u does not divide v^2 + h v + f".into()));
        }
        Ok(JacobianClass { curve: self.curve(), u, v })
    }

    /// Parses the format written by `Display`.
    pub fn parse_class(&self, s: &str) -> Result<JacobianClass> {
        let mut u = None;
        let mut v = None;
        let mut field = None;
        for part in s.split(';') {
            let (key, value) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad segment {part:?}")))?;
            match key.trim() {
                "u" => u = Some(value.to_string()),
                "v" => v = Some(value.to_string()),
                "field" => field = Some(value.trim().parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let field_degree = field.ok_or_else(|| Error::Parse("missing field".into()))?;
        if field_degree != self.field().degree() {
            return Err(Error::FieldMismatch(field_degree, self.field().degree()));
        }
        let poly = |text: Option<String>| -> Result<Poly<Fe>> {
            let text = text.ok_or_else(|| Error::Parse("missing polynomial".into()))?;
            let coeffs = text
                .split(',')
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .map(|c| {
                    parse_hex(c)
                        .filter(|&b| b <= self.field().mask())
                        .map(|b| self.field().element(b))
                        .ok_or_else(|| Error::Parse(format!("bad coefficient {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::new(self.field(), coeffs))
        };
        self.class(poly(u)?, poly(v)?)
    }

    /// v^2 + h v + f.
    fn norm(&self, v: &Poly<Fe>) -> Poly<Fe> {
        &(&(v * v) + &(self.model.h() * v)) + self.model.f()
    }

    fn check(&self, c: &JacobianClass) -> Result<()> {
        if c.field() != self.field() {
            return Err(Error::FieldMismatch(c.field().degree(), self.field().degree()));
        }
        if c.curve != self.curve() {
            return Err(Error::InvalidCurve(format!("class on {} used with {}", c.curve, self.curve())));
        }
        Ok(())
    }

    /// [P - ∞].
    pub fn of_point(&self, p: &CurvePoint) -> Result<JacobianClass> {
        if !self.model.on_curve(p)? {
            return Err(Error::NotOnCurve);
        }
        Ok(match *p {
            CurvePoint::Infinity => self.identity(),
            CurvePoint::Affine { x, y } => {
                JacobianClass { curve: self.curve(), u: Poly::linear_root(x), v: Poly::constant(y) }
            }
        })
    }

    pub fn add(&self, a: &JacobianClass, b: &JacobianClass) -> Result<JacobianClass> {
        self.check(a)?;
        self.check(b)?;
        let (u, v) = self.compose(&a.u, &a.v, &b.u, &b.v);
        Ok(self.reduce(u, v))
    }

    /// (u, v) -> (u, (v + h) mod u).
    pub fn neg(&self, c: &JacobianClass) -> Result<JacobianClass> {
        self.check(c)?;
        let v = (&c.v + self.model.h()).rem(&c.u);
        Ok(JacobianClass { curve: c.curve, u: c.u.clone(), v })
    }

    pub fn sub(&self, a: &JacobianClass, b: &JacobianClass) -> Result<JacobianClass> {
        self.add(a, &self.neg(b)?)
    }

    /// m * c by double-and-add.
    pub fn mul_int(&self, c: &JacobianClass, m: i64) -> Result<JacobianClass> {
        self.check(c)?;
        let base = if m < 0 { self.neg(c)? } else { c.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = self.identity();
        let mut pw = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &pw)?;
            }
            e >>= 1;
            if e > 0 {
                pw = self.add(&pw, &pw)?;
            }
        }
        Ok(acc)
    }

    /// Composition of two semi-reduced divisors.
    fn compose(&self, u1: &Poly<Fe>, v1: &Poly<Fe>, u2: &Poly<Fe>, v2: &Poly<Fe>) -> (Poly<Fe>, Poly<Fe>) {
        let h = self.model.h();
        let f = self.model.f();
        let (d1, e1, e2) = u1.xgcd(u2);
        let w = &(v1 + v2) + h;
        let (d, c1, c2) = d1.xgcd(&w);
        let (s1, s2, s3) = (&c1 * &e1, &c1 * &e2, c2);
        let u = (u1 * u2).div_exact(&(&d * &d)).expect("d^2 divides u1 u2");
        let num = &(&(&(&s1 * u1) * v2) + &(&(&s2 * u2) * v1)) + &(&s3 * &(&(v1 * v2) + f));
        let v = num.div_exact(&d).expect("d divides the composed numerator").rem(&u);
        (u, v)
    }

    fn reduce(&self, mut u: Poly<Fe>, mut v: Poly<Fe>) -> JacobianClass {
        let h = self.model.h();
        while u.deg() > 2 {
            let u_next = self.norm(&v).div_exact(&u).expect("u divides v^2 + h v + f").monic();
            v = (&v + h).rem(&u_next);
            u = u_next;
        }
        let u = u.monic();
        let v = v.rem(&u);
        JacobianClass { curve: self.curve(), u, v }
    }

    /// The class over a larger field.
    pub fn embed_class(&self, c: &JacobianClass, e: &FieldEmbedding) -> Result<JacobianClass> {
        self.check(c)?;
        if e.source() != self.field() {
            return Err(Error::FieldMismatch(e.source().degree(), self.field().degree()));
        }
        Ok(JacobianClass { curve: c.curve, u: e.map_poly(&c.u), v: e.map_poly(&c.v) })
    }

    /// Pulls a class over `e.target()` back to this field.
    pub fn descend_class(&self, c: &JacobianClass, e: &FieldEmbedding) -> Result<JacobianClass> {
        if e.source() != self.field() || e.target() != c.field() {
            return Err(Error::FieldMismatch(c.field().degree(), e.target().degree()));
        }
        self.class(e.preimage_poly(&c.u)?, e.preimage_poly(&c.v)?)
    }

    /// The reduced divisor of a class as points, over this field if u
    /// splits here and over the quadratic extension otherwise. Returns the
    /// divisor with the group it lives in and the embedding into that group.
    pub fn split(&self, c: &JacobianClass) -> Result<(FormalDivisor, &Jacobian, &FieldEmbedding)> {
        self.check(c)?;
        let n = c.weight();
        let here = if n == 0 { Vec::new() } else { c.u.roots() };
        let splits_here = n == 0 || here.len() == n || (here.len() == 1 && c.u.multiplicity(&Poly::linear_root(here[0])) == 2);
        let (jac, emb, u, v) = if splits_here {
            (self, &self.identity_embedding, c.u.clone(), c.v.clone())
        } else {
            let (jac, emb) = self.quadratic_extension()?;
            (jac, emb, emb.map_poly(&c.u), emb.map_poly(&c.v))
        };
        let mut d = FormalDivisor::new();
        for x in u.roots() {
            let m = u.multiplicity(&Poly::linear_root(x)) as i64;
            d.add_point(CurvePoint::Affine { x, y: v.eval(&x) }, m);
        }
        d.add_point(CurvePoint::Infinity, -(n as i64));
        Ok((d, jac, emb))
    }

    /// The class of a divisor; points at infinity only balance the degree.
    pub fn class_of(&self, d: &FormalDivisor) -> Result<JacobianClass> {
        if d.degree() != 0 {
            return Err(Error::NonZeroDegree(d.degree()));
        }
        let mut acc = self.identity();
        for (p, m) in d.terms() {
            if p.is_infinity() {
                continue;
            }
            let pc = self.of_point(p)?;
            acc = self.add(&acc, &self.mul_int(&pc, m)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn w_curve_over(d: u32) -> Jacobian {
        let c = Curve::new(BinaryField::default_for(2).unwrap().generator(), 0).unwrap();
        Jacobian::over(&c, BinaryField::default_for(d).unwrap()).unwrap()
    }

    #[test]
    fn identity_and_canonical_pair() {
        let j = w_curve_over(4);
        let pts = j.model().points();
        for p in pts.iter().filter(|p| !p.is_infinity()) {
            let c = j.of_point(p).unwrap();
            assert_eq!(j.add(&c, &j.identity()).unwrap(), c);
            let ip = j.of_point(&j.model().involution(p)).unwrap();
            assert!(j.add(&c, &ip).unwrap().is_identity());
            let mut d = FormalDivisor::new();
            d.add_point(*p, 1);
            d.add_point(j.model().involution(p), 1);
            d.add_point(CurvePoint::Infinity, -2);
            assert!(j.class_of(&d).unwrap().is_identity());
        }
        assert!(j.class_of(&FormalDivisor::new()).unwrap().is_identity());
    }

    #[test]
    fn serialization_round_trip() {
        let j = w_curve_over(4);
        let pts = j.model().points();
        let c = j.add(&j.of_point(&pts[1]).unwrap(), &j.of_point(&pts[5]).unwrap()).unwrap();
        let text = c.to_string();
        assert_eq!(j.parse_class(&text).unwrap(), c);
        assert_eq!(j.parse_class(&j.identity().to_string()).unwrap(), j.identity());
        assert!(j.parse_class("u=0x1;v=;field=2").is_err());
    }

    #[test]
    fn nonzero_degree_rejected() {
        let j = w_curve_over(2);
        let mut d = FormalDivisor::new();
        d.add_point(CurvePoint::Infinity, 1);
        assert_eq!(j.class_of(&d), Err(Error::NonZeroDegree(1)));
    }

    #[test]
    fn mixed_fields_rejected() {
        let j4 = w_curve_over(4);
        let j2 = w_curve_over(2);
        assert!(j4.add(&j4.identity(), &j2.identity()).is_err());
    }

    #[test]
    fn split_recovers_the_class() {
        let j = w_curve_over(4);
        let pts = j.model().points();
        let mut classes = Vec::new();
        for p in &pts[1..6] {
            for q in &pts[1..6] {
                classes.push(j.add(&j.of_point(p).unwrap(), &j.of_point(q).unwrap()).unwrap());
            }
        }
        for c in classes {
            let (d, jac, emb) = j.split(&c).unwrap();
            assert_eq!(d.degree(), 0);
            let back = jac.class_of(&d).unwrap();
            assert_eq!(j.descend_class(&back, emb).unwrap(), c);
        }
    }
}
