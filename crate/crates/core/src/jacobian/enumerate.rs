//! Listing J(E) and computing its order.

use super::{Jacobian, JacobianClass};
use crate::algebra::{BinaryField, Fe, Poly};
use crate::curve::{Curve, CurvePoint, ZetaData};
use crate::error::{Error, Result};

/// Largest field order for the brute-force Mumford-pair enumeration.
pub const BRUTE_FORCE_MAX_ORDER: u64 = 64;

impl Jacobian {
    /// Every class of J(E), sorted: the identity, P - ∞ for affine P,
    /// P + P' - 2∞ for rational P' ≠ ιP, and P + P^σ - 2∞ for conjugate
    /// points over the quadratic extension with x outside E.
    pub fn classes(&self) -> Result<Vec<JacobianClass>> {
        let field = self.field();
        let model = self.model();
        let curve = self.curve();
        let affine: Vec<(Fe, Fe)> = model
            .points()
            .into_iter()
            .filter_map(|p| match p {
                CurvePoint::Affine { x, y } => Some((x, y)),
                CurvePoint::Infinity => None,
            })
            .collect();
        let mut out = vec![self.identity()];
        for &(x, y) in &affine {
            out.push(JacobianClass { curve, u: Poly::linear_root(x), v: Poly::constant(y) });
        }
        for (i, &(xi, yi)) in affine.iter().enumerate() {
            for &(xj, yj) in &affine[i..] {
                if (xi, yi) == (xj, yj) {
                    if model.h().eval(&xi).is_zero() {
                        continue;
                    }
                    let c = self.of_point(&CurvePoint::Affine { x: xi, y: yi })?;
                    out.push(self.add(&c, &c)?);
                } else if xi != xj {
                    let slope = (yj + yi) / (xj + xi);
                    let u = &Poly::linear_root(xi) * &Poly::linear_root(xj);
                    let v = Poly::new(field, vec![yi + slope * xi, slope]);
                    out.push(JacobianClass { curve, u, v });
                }
            }
        }
        let (ext, emb) = self.quadratic_extension()?;
        let d = field.degree();
        for x in ext.field().elements() {
            let xc = x.frobenius_pow(d);
            if xc <= x {
                // x rational, or the conjugate was already visited
                continue;
            }
            for y in ext.model().ys_over(x) {
                let yc = y.frobenius_pow(d);
                let slope = (yc + y) / (xc + x);
                let u = Poly::new(ext.field(), vec![x * xc, x + xc, ext.field().one()]);
                let v = Poly::new(ext.field(), vec![y + slope * x, slope]);
                out.push(JacobianClass { curve, u: emb.preimage_poly(&u)?, v: emb.preimage_poly(&v)? });
            }
        }
        out.sort();
        Ok(out)
    }

    /// #J(E) = (N1^2 + N2)/2 - q from the point counts over E and its
    /// quadratic extension.
    pub fn order_from_point_counts(&self) -> Result<u64> {
        let n1 = self.model().point_count();
        let n2 = self.quadratic_extension()?.0.model().point_count();
        Ok((n1 * n1 + n2) / 2 - self.field().order())
    }

    /// Every reduced pair (u, v) found by exhausting monic u of degree at
    /// most 2 and all v of lower degree. Only for fields of order <= 64.
    pub fn classes_brute_force(&self) -> Result<Vec<JacobianClass>> {
        let field = self.field();
        if field.order() > BRUTE_FORCE_MAX_ORDER {
            return Err(Error::Precondition(format!("brute force needs |E| <= {BRUTE_FORCE_MAX_ORDER}")));
        }
        let elems: Vec<Fe> = field.elements().collect();
        let mut out = Vec::new();
        for deg in 0..=2usize {
            let n_u = field.order().pow(deg as u32);
            for ui in 0..n_u {
                let mut coeffs = digits(ui, field.order(), deg, &elems);
                coeffs.push(field.one());
                let u = Poly::new(field, coeffs);
                for vi in 0..n_u {
                    let v = Poly::new(field, digits(vi, field.order(), deg, &elems));
                    if self.norm(&v).rem(&u).is_zero() {
                        out.push(JacobianClass { curve: self.curve(), u: u.clone(), v });
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn digits(mut n: u64, base: u64, len: usize, elems: &[Fe]) -> Vec<Fe> {
    (0..len)
        .map(|_| {
            let d = elems[(n % base) as usize];
            n /= base;
            d
        })
        .collect()
}

/// #J(GF(q^k)) from the L-polynomial, checked against the Weil interval and,
/// for fields of order at most 64, against brute-force enumeration.
pub fn group_order(curve: &Curve, k: u32) -> Result<u64> {
    let zeta = ZetaData::of_curve(curve)?;
    let order = zeta.jacobian_order_over(k);
    let q_k = curve.base().order().pow(k);
    if order <= 0 || !ZetaData::jacobian_order_in_weil_interval(q_k, order as u64) {
        return Err(Error::Verification(format!("#J = {order} outside the Weil interval for q = {q_k}")));
    }
    if q_k <= BRUTE_FORCE_MAX_ORDER {
        let jac = Jacobian::over(curve, BinaryField::default_for(curve.base().degree() * k)?)?;
        let brute = jac.classes_brute_force()?.len() as i128;
        if brute != order {
            return Err(Error::Verification(format!("zeta gives #J = {order}, enumeration {brute}")));
        }
    }
    Ok(order as u64)
}
