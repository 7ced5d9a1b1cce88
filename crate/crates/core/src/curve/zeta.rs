//! L-polynomial bookkeeping for genus 2 from point counts over GF(q) and
//! GF(q^2).

use super::Curve;
use crate::algebra::BinaryField;
use crate::error::{Error, Result};

/// L(T) = 1 + a1 T + a2 T^2 + q a1 T^3 + q^2 T^4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZetaData {
    pub q: u64,
    pub n1: u64,
    pub n2: u64,
    pub a1: i64,
    pub a2: i64,
}

impl ZetaData {
    pub fn from_counts(q: u64, n1: u64, n2: u64) -> Result<Self> {
        let (qi, n1i, n2i) = (q as i64, n1 as i64, n2 as i64);
        let a1 = n1i - qi - 1;
        let twice_a2 = a1 * a1 - (qi * qi + 1 - n2i);
        if twice_a2 % 2 != 0 {
            return Err(Error::Verification(format!("counts N1={n1}, N2={n2} give a non-integral a2")));
        }
        Ok(ZetaData { q, n1, n2, a1, a2: twice_a2 / 2 })
    }

    /// Counts the curve over its base field and the quadratic extension.
    pub fn of_curve(curve: &Curve) -> Result<Self> {
        let base = curve.base_model();
        let ext = curve.model(BinaryField::default_for(2 * curve.base().degree())?)?;
        Self::from_counts(curve.base().order(), base.point_count(), ext.point_count())
    }

    /// [1, a1, a2, q a1, q^2].
    pub fn l_coefficients(&self) -> [i64; 5] {
        let q = self.q as i64;
        [1, self.a1, self.a2, q * self.a1, q * q]
    }

    /// #J(GF(q)) = L(1).
    pub fn jacobian_order(&self) -> u64 {
        self.l_coefficients().iter().sum::<i64>() as u64
    }

    /// Power sums p_k of the reciprocal roots of L, k = 1..=k_max.
    fn power_sums(&self, k_max: usize) -> Vec<i128> {
        let c = self.l_coefficients();
        // elementary symmetric functions e_i = (-1)^i c_i
        let e: Vec<i128> = (0..5).map(|i| if i % 2 == 0 { c[i] as i128 } else { -(c[i] as i128) }).collect();
        let mut p = vec![0i128; k_max + 1];
        for k in 1..=k_max {
            let mut acc = 0i128;
            for i in 1..k.min(5) {
                let term = e[i] * p[k - i];
                acc += if i % 2 == 1 { term } else { -term };
            }
            if k <= 4 {
                let term = k as i128 * e[k];
                acc += if k % 2 == 1 { term } else { -term };
            }
            p[k] = acc;
        }
        p
    }

    /// #C(GF(q^k)) predicted from L.
    pub fn predicted_count(&self, k: u32) -> i128 {
        let p = self.power_sums(k as usize);
        (self.q as i128).pow(k) + 1 - p[k as usize]
    }

    /// #J(GF(q^k)) predicted from L.
    pub fn jacobian_order_over(&self, k: u32) -> i128 {
        let p = self.power_sums(2 * k as usize);
        let qk = (self.q as i128).pow(k);
        let a1 = -p[k as usize];
        let a2 = (p[k as usize] * p[k as usize] - p[2 * k as usize]) / 2;
        1 + a1 + a2 + qk * a1 + qk * qk
    }

    /// Hasse–Weil interval for #C(GF(q^k)).
    pub fn curve_count_in_weil_interval(q: u64, count: u64) -> bool {
        let (q, n) = (q as f64, count as f64);
        (n - q - 1.0).abs() <= 4.0 * q.sqrt() + 1e-9
    }

    /// Weil interval [(sqrt q - 1)^4, (sqrt q + 1)^4] for #J(GF(q)).
    pub fn jacobian_order_in_weil_interval(q: u64, order: u64) -> bool {
        let r = (q as f64).sqrt();
        let n = order as f64;
        (r - 1.0).powi(4) - 1e-9 <= n && n <= (r + 1.0).powi(4) + 1e-9
    }
}
