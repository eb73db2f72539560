//! Canonical subspaces of ℚⁿ and quotient spaces.
//!
//! A subspace is stored as its RREF basis (rows), so two subspaces are equal
//! exactly when their representations are equal. Every ideal, centre,
//! kernel, relation space and homology quotient in the crate lives here.

use crate::error::{Error, Result};
use crate::matrix::{unit_vec, vec_is_zero, Matrix};
use crate::scalar::Scalar;

/// A linear subspace of ℚ^ambient in canonical (RREF basis) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Matrix<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::empty(ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of a list of vectors, canonicalized.
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "span: vector of length {} in ambient {}",
                    v.len(),
                    ambient
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(vectors.to_vec());
        Ok(Self::from_spanning_matrix(ambient, &m))
    }

    /// Span of the rows of a matrix.
    pub fn from_spanning_matrix(ambient: usize, m: &Matrix<S>) -> Self {
        debug_assert_eq!(m.cols(), ambient);
        let r = m.rref();
        let rows: Vec<Vec<S>> = (0..r.rows())
            .map(|i| r.row(i).to_vec())
            .filter(|row| !vec_is_zero(row))
            .collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(rows.clone()).with_cols(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The RREF basis matrix (rows are basis vectors).
    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<S>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.pivot_cols()
    }

    /// Residue of `v` after killing all pivot coordinates; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "reduce: vector length {} vs ambient {}",
                v.len(),
                self.ambient
            )));
        }
        let mut out = v.to_vec();
        for (row, &p) in (0..self.basis.rows()).zip(self.pivot_cols().iter()) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(row, j);
                if b.is_zero() {
                    continue;
                }
                out[j] = out[j].clone() - c.clone() * b.clone();
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[S]) -> Result<bool> {
        Ok(vec_is_zero(&self.reduce(v)?))
    }

    /// Coordinates of `v` with respect to the RREF basis. Errors if `v`
    /// is not in the subspace.
    pub fn coords_of(&self, v: &[S]) -> Result<Vec<S>> {
        if !self.contains(v)? {
            return Err(Error::DimensionMismatch(
                "coords_of: vector outside subspace".to_string(),
            ));
        }
        Ok(self.pivot_cols().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "leq: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        for r in 0..self.basis.rows() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "sum: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Self::from_spanning_matrix(self.ambient, &stacked))
    }

    /// Intersection via the kernel of the column-juxtaposed system
    /// `[Aᵀ | -Bᵀ] (x, y)ᵀ = 0`, mapping solutions back through `Aᵀ x`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "intersect: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let a = self.basis.transpose();
        let b = other.basis.transpose().neg();
        let system = a.hstack(&b)?;
        let ker = kernel(&system)?;
        let mut vectors = Vec::new();
        for row in ker.basis_rows() {
            let x = &row[..self.dim()];
            vectors.push(a.mul_vec(x)?);
        }
        Subspace::span(self.ambient, &vectors)
    }

    /// An incremental span builder: add `v`, report whether it was new.
    pub fn insert(&mut self, v: &[S]) -> Result<bool> {
        let residue = self.reduce(v)?;
        if vec_is_zero(&residue) {
            return Ok(false);
        }
        let stacked = self.basis.vstack(&Matrix::from_rows(vec![residue]))?;
        *self = Self::from_spanning_matrix(self.ambient, &stacked);
        Ok(true)
    }
}

impl<S: Scalar> Matrix<S> {
    /// Reinterpret an empty row list with the right ambient width.
    fn with_cols(self, cols: usize) -> Matrix<S> {
        if self.rows() == 0 {
            Matrix::empty(cols)
        } else {
            self
        }
    }
}

/// Null space `{v : m v = 0}` in canonical form.
pub fn kernel<S: Scalar>(m: &Matrix<S>) -> Result<Subspace<S>> {
    let n = m.cols();
    let r = m.rref();
    let pivots = r.pivot_cols();
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot(c)) {
        let mut v = vec![S::zero(); n];
        v[free] = S::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        basis.push(v);
    }
    Subspace::span(n, &basis)
}

/// Column space of `m` (the image of the map `v ↦ m v`).
pub fn image<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::from_spanning_matrix(m.rows(), &m.transpose())
}

/// Row space of `m`.
pub fn row_space<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::from_spanning_matrix(m.cols(), m)
}

/// `{v : f v ∈ w}` for `f : ℚ^a → ℚ^b`, `w ⊆ ℚ^b`. Solved jointly as the
/// kernel of `[f | -Wᵀ]` projected to the domain coordinates.
pub fn preimage<S: Scalar>(f: &Matrix<S>, w: &Subspace<S>) -> Result<Subspace<S>> {
    if f.rows() != w.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "preimage: map into ℚ^{} vs subspace of ℚ^{}",
            f.rows(),
            w.ambient_dim()
        )));
    }
    let a = f.cols();
    let system = f.hstack(&w.basis().transpose().neg())?;
    let ker = kernel(&system)?;
    let mut vectors = Vec::new();
    for row in ker.basis_rows() {
        vectors.push(row[..a].to_vec());
    }
    Subspace::span(a, &vectors)
}

/// The largest subspace `W ⊆ c` with `a W ⊆ W`, by the decreasing fixpoint
/// `W₀ = c`, `W_{i+1} = W_i ∩ a⁻¹(W_i)`. Realizes `∩_{k≥0} a⁻ᵏ(c)`;
/// terminates because the dimension strictly decreases until stable.
pub fn largest_invariant_subspace<S: Scalar>(
    a: &Matrix<S>,
    c: &Subspace<S>,
) -> Result<Subspace<S>> {
    if a.rows() != a.cols() || a.rows() != c.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "largest_invariant_subspace: {}x{} map vs subspace of ℚ^{}",
            a.rows(),
            a.cols(),
            c.ambient_dim()
        )));
    }
    let mut w = c.clone();
    loop {
        let next = w.intersect(&preimage(a, &w)?)?;
        if next == w {
            return Ok(w);
        }
        w = next;
    }
}

/// Incremental span builder for large generator streams. Maintains a full
/// RREF basis so each candidate reduces in a single pass; `finish` yields
/// the canonical subspace.
#[derive(Debug, Clone)]
pub struct SpanBuilder<S> {
    ambient: usize,
    /// Mutually reduced rows with strictly increasing pivots.
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SpanBuilder<S> {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis and absorb the residue if nonzero.
    /// Returns whether the span grew.
    pub fn add(&mut self, mut v: Vec<S>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if r.is_zero() {
                    continue;
                }
                *x = x.clone() - c.clone() * r.clone();
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = S::one() / v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        // Clear the new pivot column from every existing row to keep the
        // basis mutually reduced.
        for row in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in row.iter_mut().zip(&v) {
                if x.is_zero() {
                    continue;
                }
                *r = r.clone() - c.clone() * x.clone();
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pivot)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    pub fn finish(self) -> Subspace<S> {
        // The rows are already mutually reduced; one final rref pass is
        // cheap and pins the canonical form.
        Subspace::from_spanning_matrix(self.ambient, &Matrix::from_rows(self.rows).with_cols(self.ambient))
    }
}

/// Realizes a quotient ℚⁿ / killed with canonical representatives on the
/// non-pivot coordinates of the killed subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace<S> {
    ambient: usize,
    killed: Subspace<S>,
    rep_cols: Vec<usize>,
    projection: Matrix<S>,
    section: Matrix<S>,
}

impl<S: Scalar> QuotientSpace<S> {
    pub fn new(killed: Subspace<S>) -> Self {
        let ambient = killed.ambient_dim();
        let pivots = killed.pivot_cols();
        let rep_cols: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let dim = rep_cols.len();
        let mut projection = Matrix::zeros(dim, ambient);
        for j in 0..ambient {
            let e = unit_vec::<S>(ambient, j);
            let reduced = killed.reduce(&e).expect("ambient match");
            for (q, &rc) in rep_cols.iter().enumerate() {
                projection.set(q, j, reduced[rc].clone());
            }
        }
        let mut section = Matrix::zeros(ambient, dim);
        for (q, &rc) in rep_cols.iter().enumerate() {
            section.set(rc, q, S::one());
        }
        QuotientSpace {
            ambient,
            killed,
            rep_cols,
            projection,
            section,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rep_cols.len()
    }

    pub fn killed(&self) -> &Subspace<S> {
        &self.killed
    }

    /// Ambient coordinate indices carrying the quotient representatives.
    pub fn rep_cols(&self) -> &[usize] {
        &self.rep_cols
    }

    pub fn projection(&self) -> &Matrix<S> {
        &self.projection
    }

    pub fn section(&self) -> &Matrix<S> {
        &self.section
    }

    pub fn project(&self, v: &[S]) -> Result<Vec<S>> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, q: &[S]) -> Result<Vec<S>> {
        self.section.mul_vec(q)
    }
}
