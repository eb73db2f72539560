//! Dense matrices and vectors over an exact scalar field.
//!
//! Row-major storage; matrices act on column vectors, so the image of a
//! basis vector `e_j` under a map is column `j`. Dimensions stay small
//! (desk scale), hence no sparsity machinery.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A `rows x cols` dense matrix. `entries.len() == rows * cols`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from row vectors. All rows must have equal length; an empty
    /// list gives a 0 x 0 matrix.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
        }
        Matrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer rows (test and fixture convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| S::from_int(x)).collect())
                .collect(),
        )
    }

    /// Empty matrix with a known column count (zero rows).
    pub fn empty(cols: usize) -> Self {
        Matrix {
            rows: 0,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "sub: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * s.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-S::one()))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product (column-vector convention).
    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "mul_vec: {}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![S::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                out[r] = out[r].clone() + a.clone() * x.clone();
            }
        }
        Ok(out)
    }

    /// k-th power of a square matrix.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.matmul(self)?;
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack: {} vs {} cols",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Reduced row-echelon form. Row space is preserved; pivots are 1 and
    /// are the only nonzero entry of their column.
    pub fn rref(&self) -> Self {
        let mut a = self.clone();
        let mut pivot_row = 0;
        for col in 0..a.cols {
            if pivot_row >= a.rows {
                break;
            }
            let found = (pivot_row..a.rows).find(|&r| !a.get(r, col).is_zero());
            let Some(row) = found else { continue };
            a.swap_rows(row, pivot_row);
            let inv = S::one() / a.get(pivot_row, col).clone();
            for c in col..a.cols {
                let v = a.get(pivot_row, c).clone() * inv.clone();
                a.set(pivot_row, c, v);
            }
            for r in 0..a.rows {
                if r == pivot_row || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in col..a.cols {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(pivot_row, c).clone();
                    a.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        a
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries
                .swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows).filter(|&i| !vec_is_zero(r.row(i))).count()
    }

    /// Pivot columns of an RREF matrix, one per nonzero row.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|r| (0..self.cols).find(|&c| !self.get(r, c).is_zero()))
            .collect()
    }
}

pub fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|e| e.is_zero())
}

pub fn vec_add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn vec_sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn vec_scale<S: Scalar>(s: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| s.clone() * x.clone()).collect()
}

pub fn vec_neg<S: Scalar>(v: &[S]) -> Vec<S> {
    v.iter().map(|x| -x.clone()).collect()
}

/// Standard basis vector `e_i` of dimension `n`.
pub fn unit_vec<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

pub fn vec_from_ints<S: Scalar>(xs: &[i64]) -> Vec<S> {
    xs.iter().map(|&x| S::from_int(x)).collect()
}

/// In-place `acc += s * v`.
pub fn vec_add_scaled<S: Scalar>(acc: &mut [S], s: &S, v: &[S]) {
    debug_assert_eq!(acc.len(), v.len());
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if x.is_zero() {
            continue;
        }
        *a = a.clone() + s.clone() * x.clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type M = Matrix<Rat>;

    #[test]
    fn rref_rank_one_dependency() {
        let m = M::from_int_rows(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), M::from_int_rows(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity_fixed() {
        let m = M::identity(3);
        assert_eq!(m.rref(), m);
    }

    #[test]
    fn rref_row_swap() {
        let m = M::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.rref(), M::identity(2));
    }

    #[test]
    fn rref_idempotent() {
        let m = M::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let r = m.rref();
        assert_eq!(r.rref(), r);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn matmul_and_vec() {
        let a = M::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = M::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            a.matmul(&b).unwrap(),
            M::from_int_rows(&[&[2, 1], &[4, 3]])
        );
        let v = vec_from_ints::<Rat>(&[1, -1]);
        assert_eq!(a.mul_vec(&v).unwrap(), vec_from_ints::<Rat>(&[-1, -1]));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = M::zeros(2, 3);
        let b = M::zeros(2, 3);
        assert!(a.matmul(&b).is_err());
        assert!(a.add(&b.transpose()).is_err());
    }

    #[test]
    fn zero_dimensional_edges() {
        let e = M::empty(3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.rref().rows(), 0);
        let z = M::zeros(0, 0);
        assert!(z.is_zero());
        assert_eq!(z.pow(5).unwrap().rows(), 0);
    }
}
