//! Dense matrices over a [`Ring`].

use std::fmt;

use super::traits::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.data.chunks(self.cols.max(1)).collect();
        write!(f, "{rows:?}")
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, data: vec![R::zero_in(ctx); rows * cols] }
    }

    pub fn identity(ctx: &R::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, R::one_in(ctx));
        }
        m
    }

    pub fn scalar(c: R, n: usize) -> Self {
        let ctx = c.ctx();
        let mut m = Self::zeros(&ctx, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(ctx: &R::Ctx, rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { ctx: ctx.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn column(entries: Vec<R>) -> Self {
        let ctx = entries[0].ctx();
        let n = entries.len();
        Matrix { ctx, rows: n, cols: 1, data: entries }
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { ctx, rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(self.ctx.clone(), |a| a.clone() * c.clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.ctx, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.ctx, self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Scalar multiple of the identity, returning the scalar.
    pub fn as_scalar(&self) -> Option<R> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(c.clone(), self.rows)).then_some(c)
    }

    /// Determinant by cofactor expansion (valid over any commutative ring).
    pub fn det(&self) -> R {
        assert!(self.is_square());
        let idx: Vec<usize> = (0..self.cols).collect();
        self.det_minor(0, &idx)
    }

    fn det_minor(&self, row: usize, cols: &[usize]) -> R {
        if cols.is_empty() {
            return R::one_in(&self.ctx);
        }
        let mut acc = R::zero_in(&self.ctx);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.clone() * self.det_minor(row + 1, &rest);
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Inverse by Gauss–Jordan with unit pivots; works over fields and
    /// local rings such as F[s]/(s^n).
    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.ctx, n);
        for col in 0..n {
            let pivot = (col..n).find_map(|r| a.get(r, col).unit_inverse().map(|i| (r, i)));
            let (p, pinv) = pivot.ok_or(Error::Singular)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                a.add_row_multiple(r, col, &factor);
                inv.add_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: &R) {
        for c in 0..self.cols {
            let v = self.get(i, c).clone() * f.clone();
            self.set(i, c, v);
        }
    }

    /// row_i -= f * row_j
    fn add_row_multiple(&mut self, i: usize, j: usize, f: &R) {
        for c in 0..self.cols {
            let v = self.get(i, c).clone() - f.clone() * self.get(j, c).clone();
            self.set(i, c, v);
        }
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a.get(row, col).inv().expect("nonzero field element");
            a.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.add_row_multiple(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, with a 1
    /// in that column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let zero = F::zero_in(&self.ctx);
        let one = F::one_in(&self.ctx);
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![zero.clone(); self.cols];
                v[free] = one.clone();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, free).clone();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf2m::{BinaryField, Fe};
    use crate::algebra::series::{Series, SeriesRing};

    #[test]
    fn inverse_over_field() {
        let f = BinaryField::default_for(4).unwrap();
        let m = Matrix::from_rows(&f, vec![
            vec![f.element(3), f.element(7), f.element(1)],
            vec![f.element(0), f.element(2), f.element(9)],
            vec![f.element(5), f.element(0), f.element(11)],
        ]);
        if m.det().is_zero() {
            assert!(m.inverse().is_err());
        } else {
            assert!(m.mul(&m.inverse().unwrap()).is_identity());
        }
        let singular = Matrix::from_rows(&f, vec![vec![f.one(), f.one()], vec![f.one(), f.one()]]);
        assert!(singular.det().is_zero());
        assert_eq!(singular.inverse(), Err(Error::Singular));
    }

    #[test]
    fn inverse_over_series_ring() {
        let f = BinaryField::default_for(2).unwrap();
        let ring = SeriesRing { base: f, n: 3 };
        let s = Series::<Fe>::s(ring.clone());
        let one = Series::one_in(&ring);
        // [[s, 1], [1, s]] has det s^2 + 1, a unit, but no unit in the first
        // entry.
        let m = Matrix::from_rows(&ring, vec![vec![s.clone(), one.clone()], vec![one.clone(), s.clone()]]);
        assert!(m.det().is_unit());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let nonunit = Matrix::from_rows(&ring, vec![vec![s.clone(), s.clone()], vec![one, s]]);
        assert!(!nonunit.det().is_unit());
        assert!(nonunit.inverse().is_err());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = BinaryField::default_for(3).unwrap();
        let m = Matrix::from_rows(&f, vec![
            vec![f.element(1), f.element(2), f.element(3), f.element(4)],
            vec![f.element(2), f.element(4), f.element(6), f.element(3)],
        ]);
        let k = m.kernel();
        assert_eq!(k.len() + m.rank(), 4);
        for v in k {
            assert!(m.mul(&Matrix::column(v)).is_zero());
        }
    }
}
