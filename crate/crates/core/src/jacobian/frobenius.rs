use super::{Jacobian, JacobianClass};
use crate::curve::CurveModel;
use crate::error::{Error, Result};

impl Jacobian {
    /// The same field with the curve replaced by the twist X(n).
    pub fn twist(&self, n: u32) -> Jacobian {
        let model = CurveModel::with_embedding(self.curve().twisted(n), self.model().embedding().clone())
            .expect("embedding already checked");
        Jacobian::new(model)
    }

    /// F_n^*: J(X(n+1)) -> J(X(n)) with `self` the group of X(n).
    ///
    /// The relative Frobenius is purely inseparable of degree 2, so
    /// F^*(P) = 2 F^{-1}(P). On Mumford pairs F^{-1} takes coefficient-wise
    /// square roots: the roots of the result are the square roots of the
    /// roots of u, and likewise for the values of v.
    pub fn frobenius_pullback(&self, c: &JacobianClass) -> Result<JacobianClass> {
        if c.curve() != self.curve().successor() {
            return Err(Error::InvalidCurve(format!("pullback to {} needs a class on X(n+1), got {}", self.curve(), c.curve())));
        }
        if c.field() != self.field() {
            return Err(Error::FieldMismatch(c.field().degree(), self.field().degree()));
        }
        let half = JacobianClass { curve: self.curve(), u: c.u.coeff_sqrt(), v: c.v.coeff_sqrt() };
        self.add(&half, &half)
    }

    /// V = F_n^* ∘ ... ∘ F_{n+d-1}^* for a class on X(n) = X(n+d), where
    /// d is the degree of the base field.
    pub fn verschiebung(&self, c: &JacobianClass) -> Result<JacobianClass> {
        let n = self.curve().twist();
        let d = self.curve().base().degree();
        let mut acc = c.clone();
        for i in (0..d).rev() {
            acc = self.twist(n + i).frobenius_pullback(&acc)?;
        }
        Ok(JacobianClass { curve: self.curve(), ..acc })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BinaryField;
    use crate::curve::Curve;
    use crate::jacobian::FormalDivisor;

    /// Pointwise pullback: split, take Frobenius preimages, double.
    fn pullback_by_points(lower: &Jacobian, c: &JacobianClass) -> JacobianClass {
        let upper = lower.successor();
        let (d, jac_ext, emb) = upper.split(c).unwrap();
        let lower_ext = jac_ext.predecessor();
        let pulled = FormalDivisor::from_terms(d.terms().map(|(p, m)| (jac_ext.model().frobenius_preimage(p), 2 * m)));
        lower.descend_class(&lower_ext.class_of(&pulled).unwrap(), emb).unwrap()
    }

    #[test]
    fn coefficient_sqrt_matches_pointwise_pullback() {
        let f16 = BinaryField::default_for(4).unwrap();
        let c = Curve::new(BinaryField::default_for(2).unwrap().generator(), 0).unwrap();
        let lower = Jacobian::over(&c, f16).unwrap();
        let upper = lower.successor();
        let classes = upper.classes().unwrap();
        for cl in classes.iter().step_by(3) {
            assert_eq!(lower.frobenius_pullback(cl).unwrap(), pullback_by_points(&lower, cl));
        }
    }

    #[test]
    fn pullback_is_a_homomorphism() {
        let f16 = BinaryField::default_for(4).unwrap();
        let c = Curve::new(f16.element(0b0110), 1).unwrap();
        let lower = Jacobian::over(&c, f16).unwrap();
        let upper = lower.successor();
        let classes = upper.classes().unwrap();
        for a in classes.iter().step_by(17) {
            for b in classes.iter().step_by(23) {
                let lhs = lower.frobenius_pullback(&upper.add(a, b).unwrap()).unwrap();
                let rhs = lower.add(&lower.frobenius_pullback(a).unwrap(), &lower.frobenius_pullback(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(lower.frobenius_pullback(&upper.identity()).unwrap().is_identity());
        assert!(lower.frobenius_pullback(&lower.identity()).is_err());
    }
}
