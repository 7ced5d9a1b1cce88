//! Riemann–Roch spaces L(m∞) and explicit principal-divisor witnesses.

use super::{FormalDivisor, Jacobian};
use crate::algebra::{Fe, Matrix, Poly};
use crate::curve::CurvePoint;
use crate::error::{Error, Result};

/// A monomial basis function of L(m∞): x^i (pole order 2i) or x^j y (pole
/// order 2j + 5).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RrBasisElement {
    XPow(u32),
    XPowY(u32),
}

impl RrBasisElement {
    pub fn pole_order(&self) -> u32 {
        match *self {
            RrBasisElement::XPow(i) => 2 * i,
            RrBasisElement::XPowY(j) => 2 * j + 5,
        }
    }
}

/// Basis of L(m∞): {x^i : 2i <= m} then {x^j y : 2j + 5 <= m}.
pub fn riemann_roch_space(m: u32) -> Vec<RrBasisElement> {
    let mut basis: Vec<_> = (0..=m / 2).map(RrBasisElement::XPow).collect();
    if m >= 5 {
        basis.extend((0..=(m - 5) / 2).map(RrBasisElement::XPowY));
    }
    basis
}

/// φ = (a + b y) / denominator with div φ equal to the requested divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalWitness {
    pub a: Poly<Fe>,
    pub b: Poly<Fe>,
    pub denominator: Poly<Fe>,
    /// The numerator lies in L(pole_bound ∞) and has exactly that pole order.
    pub pole_bound: u32,
    /// Numerator coordinates in `riemann_roch_space(pole_bound)`.
    pub coordinates: Vec<Fe>,
}

impl PrincipalWitness {
    pub fn eval(&self, x: Fe, y: Fe) -> Option<Fe> {
        let den = self.denominator.eval(&x);
        let num = self.a.eval(&x) + self.b.eval(&x) * y;
        den.inverse().map(|inv| num * inv)
    }
}

impl Jacobian {
    /// A function with divisor `d`, or `None` when `d` is not principal.
    ///
    /// Negative affine parts are cleared with vertical lines, leaving
    /// T - M∞ with T effective of degree M; a nonzero numerator in L(M∞)
    /// vanishing on T then has divisor exactly T - M∞. The result is
    /// re-verified by computing its orders at every point.
    pub fn principal_witness(&self, d: &FormalDivisor) -> Result<Option<PrincipalWitness>> {
        if d.degree() != 0 {
            return Err(Error::NonZeroDegree(d.degree()));
        }
        let model = self.model();
        let field = self.field();
        let mut denominator = Poly::one(&field);
        let mut target = FormalDivisor::new();
        for (p, m) in d.terms() {
            if !model.on_curve(p)? {
                return Err(Error::NotOnCurve);
            }
            match *p {
                CurvePoint::Infinity => {}
                CurvePoint::Affine { x, .. } if m < 0 => {
                    for _ in 0..-m {
                        denominator = &denominator * &Poly::linear_root(x);
                    }
                    target.add_point(model.involution(p), -m);
                }
                _ => target.add_point(*p, m),
            }
        }
        let pole_bound = target.degree() as u32;
        let basis = riemann_roch_space(pole_bound);
        let funcs: Vec<(Poly<Fe>, Poly<Fe>)> = basis.iter().map(|e| basis_pair(e, field)).collect();

        let mut conditions = Matrix::<Fe>::zeros(&field, pole_bound as usize, basis.len());
        let mut row = 0;
        for (p, e) in target.terms() {
            let exp = model.local_expansion(p, e as usize)?;
            for (j, (a, b)) in funcs.iter().enumerate() {
                let series = exp.function(a, b);
                for k in 0..e as usize {
                    conditions.set(row + k, j, series.coeff(k));
                }
            }
            row += e as usize;
        }
        let Some(coordinates) = conditions.kernel().into_iter().next() else {
            return Ok(None);
        };
        let mut a = Poly::zero(&field);
        let mut b = Poly::zero(&field);
        for (c, (fa, fb)) in coordinates.iter().zip(&funcs) {
            a = &a + &fa.scale(c);
            b = &b + &fb.scale(c);
        }
        let witness = PrincipalWitness { a, b, denominator, pole_bound, coordinates };
        self.verify_numerator(&witness, &target)?;
        Ok(Some(witness))
    }

    pub fn is_principal(&self, d: &FormalDivisor) -> Result<bool> {
        Ok(self.principal_witness(d)?.is_some())
    }

    /// Checks that the numerator has divisor exactly target - M∞.
    fn verify_numerator(&self, w: &PrincipalWitness, target: &FormalDivisor) -> Result<()> {
        let pole = [
            (!w.a.is_zero()).then(|| 2 * w.a.deg()),
            (!w.b.is_zero()).then(|| 2 * w.b.deg() + 5),
        ]
        .into_iter()
        .flatten()
        .max()
        .ok_or_else(|| Error::Verification("witness numerator is zero".into()))?;
        if pole != w.pole_bound as i64 {
            return Err(Error::Verification(format!("pole order {pole} at infinity, expected {}", w.pole_bound)));
        }
        for (p, e) in target.terms() {
            let exp = self.model().local_expansion(p, e as usize + 1)?;
            let order = exp.order_of(&w.a, &w.b);
            if order != e as usize {
                return Err(Error::Verification(format!("order {order} at {p}, expected {e}")));
            }
        }
        Ok(())
    }
}

fn basis_pair(e: &RrBasisElement, field: crate::algebra::BinaryField) -> (Poly<Fe>, Poly<Fe>) {
    match *e {
        RrBasisElement::XPow(i) => (Poly::monomial(field.one(), i as usize), Poly::zero(&field)),
        RrBasisElement::XPowY(j) => (Poly::zero(&field), Poly::monomial(field.one(), j as usize)),
    }
}
