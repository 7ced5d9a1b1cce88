//! Unipotent-type projective transforms fixing two points fix the line
//! through them pointwise.

use rand::Rng;

use crate::algebra::{FiniteField, Matrix};
use crate::error::{Error, Result};

/// An invertible square matrix acting on projective space, up to scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveTransform<F: FiniteField> {
    matrix: Matrix<F>,
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize<F: FiniteField>(v: &[F]) -> Option<Vec<F>> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv()?;
    Some(v.iter().map(|c| c.clone() * inv.clone()).collect())
}

impl<F: FiniteField> ProjectiveTransform<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self> {
        if !matrix.is_square() || matrix.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(ProjectiveTransform { matrix })
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul(&Matrix::column(v.to_vec())).col(0)
    }

    /// Smallest k <= cap with M^k scalar.
    pub fn projective_order(&self, cap: u64) -> Option<u64> {
        let mut pw = self.matrix.clone();
        for k in 1..=cap {
            if pw.as_scalar().is_some() {
                return Some(k);
            }
            pw = pw.mul(&self.matrix);
        }
        None
    }

    /// μ with M v = μ v, if v is an eigenvector.
    pub fn eigenvalue(&self, v: &[F]) -> Option<F> {
        let w = self.apply(v);
        let k = v.iter().position(|c| !c.is_zero())?;
        let mu = w[k].clone() * v[k].inv()?;
        w.iter().zip(v).all(|(a, b)| *a == mu.clone() * b.clone()).then_some(mu)
    }
}

/// Outcome of a successful line check.
#[derive(Clone, Debug)]
pub struct PtrickVerdict<F: FiniteField> {
    pub line_points: usize,
    pub orders: Vec<u64>,
    /// (μ1, μ2) for each transform; equal in every verified instance.
    pub eigenvalues: Vec<(F, F)>,
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Checks that every rational point of the line P1P2 is fixed by every
/// transform, after checking the preconditions: each transform has p-power
/// projective order and fixes P1 ≠ P2.
pub fn ptrick_verify<F: FiniteField>(
    transforms: &[ProjectiveTransform<F>],
    p1: &[F],
    p2: &[F],
) -> Result<PtrickVerdict<F>> {
    let ctx = p1.first().ok_or_else(|| Error::Precondition("empty point".into()))?.ctx();
    let p = F::characteristic(&ctx);
    let q = F::order(&ctx);
    let (n1, n2) = match (normalize(p1), normalize(p2)) {
        (Some(a), Some(b)) if a != b => (a, b),
        _ => return Err(Error::Precondition("P1 and P2 must be distinct projective points".into())),
    };
    let cap = q.saturating_pow((p1.len() * p1.len()) as u32).min(1 << 20);
    let mut orders = Vec::new();
    let mut eigenvalues = Vec::new();
    for t in transforms {
        let order = t
            .projective_order(cap)
            .filter(|&o| is_power_of(o, p))
            .ok_or_else(|| Error::Precondition("transform does not have p-power order".into()))?;
        let mu1 = t.eigenvalue(&n1).ok_or_else(|| Error::Precondition("P1 not fixed".into()))?;
        let mu2 = t.eigenvalue(&n2).ok_or_else(|| Error::Precondition("P2 not fixed".into()))?;
        orders.push(order);
        eigenvalues.push((mu1, mu2));
    }
    // points a P1 + b P2 for [a : b] in P^1
    let elems = F::elements(&ctx);
    let one = F::one_in(&ctx);
    let zero = F::zero_in(&ctx);
    let mut line: Vec<(F, F)> = elems.iter().map(|a| (a.clone(), one.clone())).collect();
    line.push((one.clone(), zero));
    for t in transforms {
        for (a, b) in &line {
            let pt: Vec<F> = n1.iter().zip(&n2).map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone()).collect();
            if t.eigenvalue(&pt).is_none() {
                return Err(Error::Verification(format!("line point {pt:?} moved by {:?}", t.matrix())));
            }
        }
    }
    Ok(PtrickVerdict { line_points: line.len(), orders, eigenvalues })
}

/// A planted instance in P^dim: M = S U S^{-1} with U unipotent upper
/// triangular and U[0][1] = 0, so that S e1 and S e2 are fixed.
pub fn random_instance<F: FiniteField, R: Rng + ?Sized>(
    ctx: &F::Ctx,
    dim: usize,
    rng: &mut R,
) -> (ProjectiveTransform<F>, Vec<F>, Vec<F>) {
    assert!(dim >= 1);
    let n = dim + 1;
    let mut u = Matrix::identity(ctx, n);
    for i in 0..n {
        for j in i + 1..n {
            if (i, j) != (0, 1) {
                u.set(i, j, F::random(ctx, rng));
            }
        }
    }
    let s = loop {
        let mut s = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                s.set(i, j, F::random(ctx, rng));
            }
        }
        if !s.det().is_zero() {
            break s;
        }
    };
    let m = s.mul(&u).mul(&s.inverse().expect("invertible"));
    let (p1, p2) = (s.col(0), s.col(1));
    (ProjectiveTransform::new(m).expect("conjugate of invertible"), p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BinaryField, Fe, Fp, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn elementary_unipotent_over_gf2() {
        let f = BinaryField::default_for(1).unwrap();
        let (o, z) = (f.one(), f.zero());
        let m = Matrix::from_rows(&f, vec![vec![o, z, o], vec![z, o, z], vec![z, z, o]]);
        let t = ProjectiveTransform::new(m).unwrap();
        let v = ptrick_verify(&[t], &[o, z, z], &[z, o, z]).unwrap();
        assert_eq!(v.line_points, 3);
        assert_eq!(v.orders, vec![2]);
    }

    #[test]
    fn identity_and_bad_inputs() {
        let f = BinaryField::default_for(2).unwrap();
        let (o, z) = (f.one(), f.zero());
        let id = ProjectiveTransform::new(Matrix::<Fe>::identity(&f, 3)).unwrap();
        assert!(ptrick_verify(&[id.clone()], &[o, z, z], &[z, o, z]).is_ok());
        assert!(ptrick_verify(&[id], &[o, z, z], &[o, z, z]).is_err());
        // order 3 diagonal transform in GF(4): not a 2-power
        let w = f.generator();
        let m = Matrix::from_rows(&f, vec![vec![w, z, z], vec![z, w, z], vec![z, z, o]]);
        let t = ProjectiveTransform::new(m).unwrap();
        assert!(matches!(ptrick_verify(&[t], &[o, z, z], &[z, o, z]), Err(Error::Precondition(_))));
    }

    #[test]
    fn random_instances_gf4_and_gf3() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f4 = BinaryField::default_for(2).unwrap();
        for _ in 0..20 {
            let (t, p1, p2) = random_instance::<Fe, _>(&f4, 2, &mut rng);
            let v = ptrick_verify(&[t], &p1, &p2).unwrap();
            assert_eq!(v.eigenvalues[0].0, v.eigenvalues[0].1);
        }
        let f3 = PrimeField::new(3).unwrap();
        for _ in 0..20 {
            let (t, p1, p2) = random_instance::<Fp, _>(&f3, 3, &mut rng);
            ptrick_verify(&[t], &p1, &p2).unwrap();
        }
    }
}
