//! A pencil of binary quadratics with a common base point reduces to a
//! linear map on P^1.

use rand::Rng;

use crate::algebra::forms::{quadratic_common_linear_factor, BinaryForm, ProjPoint};
use crate::algebra::{BinaryField, Fe, FieldEmbedding};
use crate::error::{Error, Result};

/// [h1 : h2] = L·[l1 : l2] away from the base locus.
#[derive(Clone, Debug)]
pub struct PencilReduction {
    pub factor: BinaryForm,
    pub linear: (BinaryForm, BinaryForm),
    /// From the input field into the field of the factorisation.
    pub embedding: FieldEmbedding,
    /// Points of P^1 over the input field where agreement was checked.
    pub checked_points: usize,
}

/// Divides out the common linear factor vanishing at `base` and checks the
/// residual map against the pencil at every rational point.
pub fn reduce_quadratic_pencil(h1: &BinaryForm, h2: &BinaryForm, base: ProjPoint) -> Result<PencilReduction> {
    if !h1.vanishes_at(base) || !h2.vanishes_at(base) {
        return Err(Error::Precondition("base point is not a common zero".into()));
    }
    let cf = quadratic_common_linear_factor(h1, h2, Some(base))?;
    let mut red = PencilReduction { factor: cf.factor, linear: cf.cofactors, embedding: cf.embedding, checked_points: 0 };
    red.checked_points = red.agrees_on(h1, h2, red.embedding.target())?;
    Ok(red)
}

fn proportional_pair(a: (Fe, Fe), b: (Fe, Fe)) -> bool {
    a.0 * b.1 == a.1 * b.0
}

impl PencilReduction {
    /// Checks [h1 : h2] = [l1 : l2] at every point of P^1(field) where the
    /// pencil is defined; `field` must contain the factorisation field.
    /// Returns the number of points compared.
    pub fn agrees_on(&self, h1: &BinaryForm, h2: &BinaryForm, field: BinaryField) -> Result<usize> {
        let into = FieldEmbedding::new(self.embedding.target(), field)?;
        let from_input = self.embedding.then(&into)?;
        let (e1, e2) = (h1.embed(&from_input), h2.embed(&from_input));
        let (l1, l2) = (self.linear.0.embed(&into), self.linear.1.embed(&into));
        let mut checked = 0;
        for p in ProjPoint::all(field) {
            let hv = (e1.eval(p.x, p.y), e2.eval(p.x, p.y));
            if hv.0.is_zero() && hv.1.is_zero() {
                continue;
            }
            let lv = (l1.eval(p.x, p.y), l2.eval(p.x, p.y));
            if (lv.0.is_zero() && lv.1.is_zero()) || !proportional_pair(hv, lv) {
                return Err(Error::Verification(format!("residual map disagrees with the pencil at {p:?}")));
            }
            checked += 1;
        }
        Ok(checked)
    }
}

/// L l1, L l2 with random linear forms over `field`, l1 and l2 independent,
/// and the zero of L as base point.
pub fn random_planted_pencil<R: Rng + ?Sized>(field: BinaryField, rng: &mut R) -> (BinaryForm, BinaryForm, ProjPoint) {
    let linear = |rng: &mut R| loop {
        let f = BinaryForm::new(field, vec![field.element(rng.gen_range(0..field.order())), field.element(rng.gen_range(0..field.order()))]);
        if !f.is_zero() {
            break f;
        }
    };
    let l = linear(rng);
    let (l1, l2) = loop {
        let (a, b) = (linear(rng), linear(rng));
        if !a.proportional(&b) {
            break (a, b);
        }
    };
    let base = l.zeros()[0];
    (l.mul(&l1), l.mul(&l2), base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    #[test]
    fn planted_examples() {
        let f = gf(2);
        let (o, z) = (f.one(), f.zero());
        let x = BinaryForm::new(f, vec![o, z]);
        let y = BinaryForm::new(f, vec![z, o]);
        let x_plus_y = BinaryForm::new(f, vec![o, o]);
        let base = ProjPoint::affine(z);
        let r = reduce_quadratic_pencil(&x.mul(&x_plus_y), &x.mul(&y), base).unwrap();
        assert!(r.linear.0.proportional(&x_plus_y) && r.linear.1.proportional(&y));
        assert!(r.factor.proportional(&x));
        let r = reduce_quadratic_pencil(&x.mul(&x), &x.mul(&y), base).unwrap();
        assert!(r.linear.0.proportional(&x) && r.linear.1.proportional(&y));
        assert!(reduce_quadratic_pencil(&x.mul(&x), &x.mul(&y), ProjPoint::affine(o)).is_err());
    }

    #[test]
    fn random_pencils_agree_over_gf16() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let (h1, h2, b) = random_planted_pencil(gf(2), &mut rng);
            let r = reduce_quadratic_pencil(&h1, &h2, b).unwrap();
            assert_eq!(r.factor.mul(&r.linear.0), h1.embed(&r.embedding));
            assert!(r.agrees_on(&h1, &h2, gf(4)).unwrap() >= 16);
        }
    }
}
