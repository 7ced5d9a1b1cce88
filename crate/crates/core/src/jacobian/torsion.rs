use super::{Jacobian, JacobianClass};
use crate::algebra::BinaryField;
use crate::curve::Curve;
use crate::error::{Error, Result};

/// Fields beyond GF(2^10) are not enumerated: J(E) has about |E|^2 elements.
pub const TORSION_MAX_FIELD_DEGREE: u32 = 10;

/// The r-torsion found over GF(q^k) for k = 1, 2, ...
#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub r: u32,
    /// (k, #J(GF(q^k))[r]) for every field searched.
    pub counts: Vec<(u32, usize)>,
    /// Absolute degree of the last field searched.
    pub field_degree: u32,
    /// The r-torsion classes over that field.
    pub classes: Vec<JacobianClass>,
    /// Whether the count reached the geometric maximum: r^4 for r odd, and
    /// 2^2 for r = 2 (the 2-rank is at most the genus).
    pub stabilized: bool,
}

/// r-torsion of J over GF(q^k), k = 1..=k_max, by filtering the enumerated
/// group. Stops as soon as the count reaches the geometric maximum.
pub fn torsion_subgroup(curve: &Curve, r: u32, k_max: u32) -> Result<TorsionReport> {
    if r != 2 && r != 3 {
        return Err(Error::Precondition(format!("torsion order {r} not in {{2, 3}}")));
    }
    if k_max == 0 || k_max > 6 {
        return Err(Error::Precondition(format!("search bound {k_max} not in 1..=6")));
    }
    let maximum = if r == 2 { 4 } else { 81 };
    let mut report =
        TorsionReport { r, counts: Vec::new(), field_degree: 0, classes: Vec::new(), stabilized: false };
    for k in 1..=k_max {
        let degree = curve.base().degree() * k;
        if degree > TORSION_MAX_FIELD_DEGREE {
            break;
        }
        let jac = Jacobian::over(curve, BinaryField::default_for(degree)?)?;
        let mut classes = Vec::new();
        for c in jac.classes()? {
            let killed = if r == 2 { jac.neg(&c)? == c } else { jac.add(&c, &c)? == jac.neg(&c)? };
            if killed {
                classes.push(c);
            }
        }
        if classes.len() > (r as usize).pow(4) {
            return Err(Error::Verification(format!("{} classes of order dividing {r}", classes.len())));
        }
        report.counts.push((k, classes.len()));
        report.field_degree = degree;
        report.stabilized = classes.len() == maximum;
        report.classes = classes;
        if report.stabilized {
            break;
        }
    }
    Ok(report)
}
