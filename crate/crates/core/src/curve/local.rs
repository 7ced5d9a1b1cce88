//! Power-series expansions of x and y at an affine point, in a uniformizer.

use super::{CurveModel, CurvePoint};
use crate::algebra::{Fe, Poly, Ring, Series, SeriesRing};
use crate::error::{Error, Result};

/// x and y as series in a local parameter s at an affine point, to a fixed
/// precision. At a non-Weierstrass point s = x - x0; at a Weierstrass point
/// (h(x0) = 0) s = y - y0.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub point: CurvePoint,
    pub x: Series<Fe>,
    pub y: Series<Fe>,
}

pub(crate) fn eval_series(p: &Poly<Fe>, s: &Series<Fe>) -> Series<Fe> {
    let ring = s.ring().clone();
    let mut acc = Series::zero_in(&ring);
    for c in p.coeffs().iter().rev() {
        acc = acc * s.clone() + Series::constant(ring.clone(), *c);
    }
    acc
}

impl LocalExpansion {
    pub(crate) fn at(model: &CurveModel, p: &CurvePoint, precision: usize) -> Result<Self> {
        let (x0, y0) = match *p {
            CurvePoint::Infinity => {
                return Err(Error::Precondition("no local expansion at infinity".into()))
            }
            CurvePoint::Affine { x, y } => (x, y),
        };
        if !model.on_curve(p)? {
            return Err(Error::NotOnCurve);
        }
        let ring = SeriesRing { base: model.field(), n: precision.max(1) };
        let s = Series::s(ring.clone());
        let h = model.h();
        let f = model.f();
        // Newton iteration doubles the precision each round.
        let rounds = usize::BITS - precision.max(1).leading_zeros() + 1;
        if !h.eval(&x0).is_zero() {
            let x = Series::constant(ring.clone(), x0) + s;
            let hx = eval_series(h, &x);
            let fx = eval_series(f, &x);
            let hinv = hx.unit_inverse().expect("h(x0) is nonzero");
            let mut y = Series::constant(ring, y0);
            for _ in 0..rounds {
                let residual = y.clone() * y.clone() + hx.clone() * y.clone() + fx.clone();
                y = y + residual * hinv.clone();
            }
            Ok(LocalExpansion { point: *p, x, y })
        } else {
            let y = Series::constant(ring.clone(), y0) + s;
            let dh = h.derivative();
            let df = f.derivative();
            let mut x = Series::constant(ring, x0);
            for _ in 0..rounds {
                let residual = y.clone() * y.clone() + eval_series(h, &x) * y.clone() + eval_series(f, &x);
                let partial = eval_series(&dh, &x) * y.clone() + eval_series(&df, &x);
                let inv = partial
                    .unit_inverse()
                    .ok_or_else(|| Error::Verification(format!("curve singular at {p}")))?;
                x = x + residual * inv;
            }
            Ok(LocalExpansion { point: *p, x, y })
        }
    }

    pub fn precision(&self) -> usize {
        self.x.ring().n
    }

    /// Expansion of a(x) + b(x) y.
    pub fn function(&self, a: &Poly<Fe>, b: &Poly<Fe>) -> Series<Fe> {
        eval_series(a, &self.x) + eval_series(b, &self.x) * self.y.clone()
    }

    /// Order of vanishing of a(x) + b(x) y, capped at the precision.
    pub fn order_of(&self, a: &Poly<Fe>, b: &Poly<Fe>) -> usize {
        self.function(a, b).valuation()
    }
}
