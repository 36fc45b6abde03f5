//! Dense exact linear algebra and sparse vector helpers.

use crate::scalars::Field;

/// Sparse vector: `(index, coefficient)` pairs, indices strictly increasing,
/// no zero coefficients.
pub type SparseVec<E> = Vec<(usize, E)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    pub field: F,
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<F::Elem> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let idx = r * out.cols + c;
                        let v = f.add(&out.data[idx], &f.mul(a, b));
                        out.data[idx] = v;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.mul(x, c)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.get(k, c);
                if !f.is_zero(b) {
                    *o = f.add(o, &f.mul(a, b));
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            for k in c..self.cols {
                let v = f.mul(self.get(r, k), &inv);
                self.set(r, k, v);
            }
            let pivot_row: Vec<F::Elem> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let k = c + off;
                    let v = f.sub(self.get(i, k), &f.mul(&factor, pv));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Nonzero rows of the RREF (a canonical basis of the row space) and pivots.
    pub fn row_space(&self) -> (Self, Vec<usize>) {
        let (m, pivots) = self.rref();
        let rows = (0..pivots.len()).map(|r| m.row_vec(r)).collect();
        (Self::from_rows(&self.field, self.cols, rows), pivots)
    }

    /// Basis (as rows) of `{x : A x = 0}`.
    pub fn right_kernel(&self) -> Self {
        let f = &self.field;
        let (m, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        Self::from_rows(f, self.cols, basis)
    }

    /// Basis (as rows) of `{x : x A = 0}`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().right_kernel()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(f, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

/// A subspace kept in reduced echelon form, supporting membership and
/// coordinate extraction.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    pub basis: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn span(field: &F, dim: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        let m = Matrix::from_rows(field, dim, vectors);
        let (basis, pivots) = m.row_space();
        Subspace { basis, pivots }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.row_space();
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    /// Reduces `v` modulo the subspace (eliminating pivot columns).
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.basis.field;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (k, b) in self.basis.row(r).iter().enumerate() {
                if !f.is_zero(b) {
                    out[k] = f.sub(&out[k], &f.mul(&c, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.basis.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }
}

pub fn sparse_to_dense<F: Field>(field: &F, v: &[(usize, F::Elem)], dim: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn dense_to_sparse<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// `acc += c * v` on dense vectors.
pub fn axpy<F: Field>(field: &F, acc: &mut [F::Elem], c: &F::Elem, v: &[(usize, F::Elem)]) {
    for (i, x) in v {
        acc[*i] = field.add(&acc[*i], &field.mul(c, x));
    }
}

/// Rank of a sparse row set over `cols` columns.
pub fn sparse_rank<F: Field>(field: &F, cols: usize, rows: &[SparseVec<F::Elem>]) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let dense = rows
        .iter()
        .map(|r| sparse_to_dense(field, r, cols))
        .collect();
    Matrix::from_rows(field, cols, dense).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rationals};

    #[test]
    fn rank_and_kernel() {
        let f = Fp::new(7).unwrap();
        let m = Matrix::from_rows(&f, 3, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.right_kernel();
        assert_eq!(k.rows, 1);
        let x = k.row_vec(0);
        for r in 0..3 {
            let s = (0..3).fold(0, |acc, c| f.add(&acc, &f.mul(m.get(r, c), &x[c])));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn inverse_over_q() {
        let q = Rationals;
        let m = Matrix::from_rows(
            &q,
            2,
            vec![
                vec![q.from_i64(2), q.from_i64(1)],
                vec![q.from_i64(1), q.from_i64(1)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&q, 2));
        let singular = Matrix::from_rows(&q, 2, vec![vec![q.one(), q.one()], vec![q.one(), q.one()]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let f = Fp::new(11).unwrap();
        let s = Subspace::span(&f, 3, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![2, 5, 3];
        assert!(s.contains(&v));
        let c = s.coordinates(&v);
        let mut back = vec![0; 3];
        for (r, coef) in c.iter().enumerate() {
            for k in 0..3 {
                back[k] = f.add(&back[k], &f.mul(coef, s.basis.get(r, k)));
            }
        }
        assert_eq!(back, v);
        assert!(!s.contains(&[1, 0, 0]));
    }
}
