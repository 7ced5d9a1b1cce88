//! The decomposable slice of rank-2 moduli: Kummer points, the G-fixed
//! classification, the distinguished bundles E1 and E2, and the Verschiebung
//! on them. Also the projective-linear utilities in `ptrick` and `pencil`.

pub mod pencil;
pub mod ptrick;

use std::fmt;

use crate::algebra::BinaryField;
use crate::curve::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::group_action::AutomorphismGroup;
use crate::jacobian::{FormalDivisor, Jacobian, JacobianClass, PrincipalWitness};

/// A class up to sign, stored as the smaller of c and -c.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct KummerPoint {
    class: JacobianClass,
}

impl KummerPoint {
    pub fn new(jac: &Jacobian, c: &JacobianClass) -> Result<Self> {
        let n = jac.neg(c)?;
        Ok(KummerPoint { class: if n < *c { n } else { c.clone() } })
    }

    pub fn class(&self) -> &JacobianClass {
        &self.class
    }

    pub fn field(&self) -> BinaryField {
        self.class.field()
    }

    pub fn is_trivial(&self) -> bool {
        self.class.is_identity()
    }

    /// Equality after embedding both points into a common field.
    pub fn same_as(&self, other: &KummerPoint) -> Result<bool> {
        if self.class.curve() != other.class.curve() {
            return Ok(false);
        }
        let (da, db) = (self.field().degree(), other.field().degree());
        let common = BinaryField::default_for(lcm(da, db))?;
        let jac = Jacobian::over(&self.class.curve(), common)?;
        let lift = |k: &KummerPoint| -> Result<KummerPoint> {
            let src = Jacobian::over(&k.class.curve(), k.field())?;
            let (_, emb) = src.extend(common)?;
            KummerPoint::new(&jac, &src.embed_class(&k.class, &emb)?)
        };
        Ok(lift(self)? == lift(other)?)
    }
}

impl fmt::Display for KummerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Whether g·c is c or -c.
fn fixed_up_to_sign(group: &AutomorphismGroup, g: usize, jac: &Jacobian, c: &JacobianClass) -> Result<bool> {
    let image = group.elements[g].act_on_class(jac, c)?;
    Ok(image == *c || image == jac.neg(c)?)
}

/// Whether the Kummer point of `c` is fixed by every element of the group.
pub fn fixed_by_whole_group(group: &AutomorphismGroup, jac: &Jacobian, c: &JacobianClass) -> Result<bool> {
    for g in 0..group.len() {
        if !fixed_up_to_sign(group, g, jac, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kummer points over GF(q^j), j <= k, fixed by τ01, τ0∞ and σ. Each point
/// is reported once, over the smallest GF(q^j) containing its class.
pub fn g_fixed_kummer_points(curve: &Curve, k: u32) -> Result<Vec<KummerPoint>> {
    if k == 0 || k > 6 {
        return Err(Error::Precondition(format!("search bound {k} not in 1..=6")));
    }
    let group = AutomorphismGroup::new(curve)?;
    let generators = [group.tau01, group.tau0inf, group.sigma];
    let d = curve.base().degree();
    let mut out = Vec::new();
    for j in 1..=k {
        let jac = Jacobian::over(curve, BinaryField::default_for(d * j)?)?;
        'classes: for c in jac.classes()? {
            let smaller = (1..j).filter(|i| j % i == 0).any(|i| {
                c.u().coeffs().iter().chain(c.v().coeffs()).all(|a| a.in_subfield(d * i))
            });
            if smaller || jac.neg(&c)? < c {
                continue;
            }
            for &g in &generators {
                if !fixed_up_to_sign(&group, g, &jac, &c)? {
                    continue 'classes;
                }
            }
            out.push(KummerPoint::new(&jac, &c)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleLabel {
    Trivial,
    E1,
    E2,
}

impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BundleLabel::Trivial => "Trivial",
            BundleLabel::E1 => "E1",
            BundleLabel::E2 => "E2",
        })
    }
}

/// A G-fixed decomposable bundle L ⊕ L^{-1}, recorded as the Kummer point
/// of L, with the σ-fixed point Q used to build it.
#[derive(Clone, Debug)]
pub struct GFixedBundle {
    pub label: BundleLabel,
    pub kummer: KummerPoint,
    pub q: Option<CurvePoint>,
}

/// The σ-fixed points, searched over GF(q^i) for growing i until all four
/// appear. Returns the group over that field and the points.
pub fn sigma_fixed_points(group: &AutomorphismGroup) -> Result<(Jacobian, Vec<CurvePoint>)> {
    let curve = group.curve;
    let d = curve.base().degree();
    for i in 1.. {
        if d * i > 16 {
            break;
        }
        let jac = Jacobian::over(&curve, BinaryField::default_for(d * i)?)?;
        let fixed = group.elements[group.sigma].fixed_points(jac.model())?;
        if fixed.len() == 4 {
            return Ok((jac, fixed));
        }
    }
    Err(Error::NoWitness("fewer than four σ-fixed points up to GF(2^16)".into()))
}

/// E1 = [Q - τ01(Q)] or E2 = [Q - ι τ01(Q)], checked to have order exactly
/// 3 and to give the same Kummer point for every σ-fixed Q.
pub fn build_e(curve: &Curve, j: u32) -> Result<GFixedBundle> {
    let group = AutomorphismGroup::new(curve)?;
    build_e_with(&group, j)
}

pub fn build_e_with(group: &AutomorphismGroup, j: u32) -> Result<GFixedBundle> {
    let (label, partner) = match j {
        1 => (BundleLabel::E1, group.tau01),
        2 => (BundleLabel::E2, group.mul(group.iota, group.tau01)),
        _ => return Err(Error::Precondition(format!("bundle index {j} not in {{1, 2}}"))),
    };
    let (jac, fixed) = sigma_fixed_points(group)?;
    let g = &group.elements[partner];
    let mut kummer: Option<KummerPoint> = None;
    for q in &fixed {
        let c = jac.sub(&jac.of_point(q)?, &jac.of_point(&g.act_on_point(jac.model(), q)?)?)?;
        if c.is_identity() || !jac.mul_int(&c, 3)?.is_identity() {
            return Err(Error::Verification(format!("{label} from Q = {q} does not have order 3")));
        }
        let k = KummerPoint::new(&jac, &c)?;
        match &kummer {
            None => kummer = Some(k),
            Some(prev) if *prev != k => {
                return Err(Error::Verification(format!("{label} depends on the choice of Q")));
            }
            _ => {}
        }
    }
    Ok(GFixedBundle { label, kummer: kummer.expect("four fixed points"), q: fixed.first().copied() })
}

/// The trivial bundle's Kummer point over the base field.
pub fn trivial_bundle(curve: &Curve) -> GFixedBundle {
    let jac = Jacobian::new(curve.base_model());
    GFixedBundle { label: BundleLabel::Trivial, kummer: KummerPoint { class: jac.identity() }, q: None }
}

/// Explicit function with divisor 3Q - 3τ01(Q).
pub fn cube_difference_witness(group: &AutomorphismGroup, jac: &Jacobian, q: &CurvePoint) -> Result<PrincipalWitness> {
    let tq = group.elements[group.tau01].act_on_point(jac.model(), q)?;
    let d = FormalDivisor::from_terms([(*q, 3), (tq, -3)]);
    jac.principal_witness(&d)?.ok_or_else(|| Error::NoWitness(format!("3Q - 3τ01(Q) not principal for Q = {q}")))
}

/// The Verschiebung (d-fold Frobenius pullback) on a Kummer point.
pub fn verschiebung_on_kummer(p: &KummerPoint) -> Result<KummerPoint> {
    let jac = Jacobian::over(&p.class.curve(), p.field())?;
    KummerPoint::new(&jac, &jac.verschiebung(&p.class)?)
}

/// F_n^* of a Kummer point on X(n+1), landing on X(n).
pub fn pullback_on_kummer(p: &KummerPoint) -> Result<KummerPoint> {
    let jac = Jacobian::over(&p.class.curve().predecessor(), p.field())?;
    KummerPoint::new(&jac, &jac.frobenius_pullback(&p.class)?)
}
