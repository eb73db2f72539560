//! Tensor and exterior centres, capability verdicts, the perfect-case
//! epicentre, and twisted derivation spaces.
//!
//! The tensor centre collects the elements whose twist iterates annihilate
//! everything in the tensor square; capability is equivalent to the
//! vanishing of the exterior centre. Both centres reuse the
//! largest-invariant-subspace fixpoint from the linear-algebra substrate.

use crate::algebra::{ad_matrix, HomLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{unit_vec, Matrix};
use crate::scalar::Scalar;
use crate::subspace::{image, kernel, largest_invariant_subspace, Subspace};
use crate::tensor::{self_exterior_square, self_tensor_square, ExteriorProduct, TensorProduct};

/// `{l : class of l ⊗ e_j vanishes in the tensor square for all j}`,
/// closed under twist preimages.
pub fn tensor_centre<S: Scalar>(l: &HomLieAlgebra<S>, cap: usize) -> Result<Subspace<S>> {
    let t = self_tensor_square(l, cap)?;
    tensor_centre_with(l, &t)
}

pub fn tensor_centre_with<S: Scalar>(
    l: &HomLieAlgebra<S>,
    t: &TensorProduct<S>,
) -> Result<Subspace<S>> {
    let n = l.dim();
    let q = t.space.dim();
    // rows (j*q + r): r-th quotient coordinate of class(e_i ⊗ e_j)
    let mut sys = Matrix::zeros(n * q, n);
    for i in 0..n {
        let ei = unit_vec::<S>(n, i);
        for j in 0..n {
            let class = t.class_of(&ei, &unit_vec::<S>(n, j))?;
            for (r, x) in class.iter().enumerate() {
                sys.set(j * q + r, i, x.clone());
            }
        }
    }
    let annihilator = kernel(&sys)?;
    largest_invariant_subspace(l.twist(), &annihilator)
}

/// `{l : class of l ⋏ e_j vanishes in the exterior square for all j}`,
/// closed under twist preimages. `Z^⋏ = 0` characterizes capability.
pub fn exterior_centre<S: Scalar>(l: &HomLieAlgebra<S>, cap: usize) -> Result<Subspace<S>> {
    let e = self_exterior_square(l, cap)?;
    exterior_centre_with(l, &e)
}

pub fn exterior_centre_with<S: Scalar>(
    l: &HomLieAlgebra<S>,
    e: &ExteriorProduct<S>,
) -> Result<Subspace<S>> {
    let n = l.dim();
    let q = e.dim();
    let mut sys = Matrix::zeros(n * q, n);
    for i in 0..n {
        let ei = unit_vec::<S>(n, i);
        for j in 0..n {
            let class = e.class_of(&ei, &unit_vec::<S>(n, j))?;
            for (r, x) in class.iter().enumerate() {
                sys.set(j * q + r, i, x.clone());
            }
        }
    }
    let annihilator = kernel(&sys)?;
    largest_invariant_subspace(l.twist(), &annihilator)
}

pub fn is_capable<S: Scalar>(l: &HomLieAlgebra<S>, cap: usize) -> Result<bool> {
    Ok(exterior_centre(l, cap)?.is_zero())
}

/// The epicentre of a perfect algebra, which coincides with the exterior
/// centre. The general epicentre needs free presentations and is out of
/// reach here, so non-perfect input is an error rather than a guess.
pub fn epicentre_perfect<S: Scalar>(l: &HomLieAlgebra<S>, cap: usize) -> Result<Subspace<S>> {
    if !l.is_perfect() {
        return Err(Error::NotPerfect(format!(
            "epicentre: {} is not perfect",
            l.name
        )));
    }
    exterior_centre(l, cap)
}

/// Everything the capability pipeline knows about one algebra. The
/// epicentre is populated only for perfect algebras.
#[derive(Debug, Clone)]
pub struct CapabilityReport<S> {
    pub centre: Subspace<S>,
    pub tensor_centre: Subspace<S>,
    pub exterior_centre: Subspace<S>,
    pub capable: bool,
    pub epicentre: Option<Subspace<S>>,
    pub tensor_square_dim: usize,
    pub exterior_square_dim: usize,
}

pub fn capability_report<S: Scalar>(
    l: &HomLieAlgebra<S>,
    cap: usize,
) -> Result<CapabilityReport<S>> {
    let e = self_exterior_square(l, cap)?;
    let zt = tensor_centre_with(l, &e.tensor)?;
    let ze = exterior_centre_with(l, &e)?;
    let capable = ze.is_zero();
    let epicentre = if l.is_perfect() { Some(ze.clone()) } else { None };
    Ok(CapabilityReport {
        centre: l.centre(),
        tensor_centre: zt,
        exterior_centre: ze,
        capable,
        epicentre,
        tensor_square_dim: e.tensor.space.dim(),
        exterior_square_dim: e.dim(),
    })
}

/// For a perfect algebra and a central, twist-invariant ideal `N`: whether
/// `π⋏π : L⋏L → (L/N)⋏(L/N)` is an isomorphism, cross-checked against
/// `N ⊆ Z^⋏(L)`.
#[derive(Debug, Clone)]
pub struct MultiplierCheckReport {
    pub pi_wedge_pi_iso: bool,
    pub n_in_exterior_centre: bool,
    pub dim_l_wedge_l: usize,
    pub dim_quot_wedge: usize,
}

impl MultiplierCheckReport {
    /// The two criteria agree (the content of the characterization).
    pub fn consistent(&self) -> bool {
        self.pi_wedge_pi_iso == self.n_in_exterior_centre
    }
}

pub fn central_ideal_multiplier_check<S: Scalar>(
    l: &HomLieAlgebra<S>,
    n_ideal: &Subspace<S>,
    cap: usize,
) -> Result<MultiplierCheckReport> {
    if !l.is_perfect() {
        return Err(Error::NotPerfect(
            "multiplier check needs a perfect algebra".to_string(),
        ));
    }
    if !n_ideal.leq(&l.centre())? {
        return Err(Error::NotAnIdeal(
            "multiplier check: the ideal is not central".to_string(),
        ));
    }
    if !l.is_twist_invariant(n_ideal)? {
        return Err(Error::NotTwistInvariant(
            "multiplier check: the ideal is not twist-invariant".to_string(),
        ));
    }
    let e_l = self_exterior_square(l, cap)?;
    let quot = l.quotient_algebra(n_ideal)?;
    let e_q = self_exterior_square(&quot.quotient, cap)?;
    let map = crate::tensor::quotient_projection_wedge(&quot, &e_l, &e_q)?;
    let iso = e_l.dim() == e_q.dim() && map.rank() == e_l.dim();
    let zext = exterior_centre_with(l, &e_l)?;
    Ok(MultiplierCheckReport {
        pi_wedge_pi_iso: iso,
        n_in_exterior_centre: n_ideal.leq(&zext)?,
        dim_l_wedge_l: e_l.dim(),
        dim_quot_wedge: e_q.dim(),
    })
}

/// The space of αᵏ-derivations: linear maps with `d∘α = α∘d` and
/// `d[x,y] = [d(x), αᵏ(y)] + [αᵏ(x), d(y)]`, solved as a homogeneous
/// system in the n² matrix entries.
#[derive(Debug, Clone)]
pub struct DerivationSpace<S> {
    pub k: usize,
    pub basis: Vec<Matrix<S>>,
}

pub fn derivations<S: Scalar>(l: &HomLieAlgebra<S>, k: usize) -> Result<DerivationSpace<S>> {
    let n = l.dim();
    let unknowns = n * n;
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<S>> = Vec::new();
    // commutation with the twist: (dA - Ad)[r][c] = 0
    let a = l.twist();
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![S::zero(); unknowns];
            for t in 0..n {
                row[idx(r, t)] = row[idx(r, t)].clone() + a.get(t, c).clone();
                row[idx(t, c)] = row[idx(t, c)].clone() - a.get(r, t).clone();
            }
            rows.push(row);
        }
    }
    // twisted Leibniz rule on basis pairs i < j
    let ak = a.pow(k)?;
    for i in 0..n {
        let aki = ak.col(i);
        for j in (i + 1)..n {
            let akj = ak.col(j);
            let cij = l.basis_bracket(i, j);
            for r in 0..n {
                let mut row = vec![S::zero(); unknowns];
                // d([e_i, e_j])_r = Σ_t c_ij[t] d[r][t]
                for t in 0..n {
                    if !cij[t].is_zero() {
                        row[idx(r, t)] = row[idx(r, t)].clone() + cij[t].clone();
                    }
                }
                // -[d e_i, αᵏ e_j]_r: coefficient of d[t][i] is Σ_u (αᵏe_j)_u c[t][u][r]
                for t in 0..n {
                    let mut coeff = S::zero();
                    for (u, w) in akj.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        coeff = coeff + w.clone() * l.basis_bracket(t, u)[r].clone();
                    }
                    if !coeff.is_zero() {
                        row[idx(t, i)] = row[idx(t, i)].clone() - coeff;
                    }
                }
                // -[αᵏ e_i, d e_j]_r: coefficient of d[u][j] is Σ_t (aᵏe_i)_t c[t][u][r]
                for u in 0..n {
                    let mut coeff = S::zero();
                    for (t, w) in aki.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        coeff = coeff + w.clone() * l.basis_bracket(t, u)[r].clone();
                    }
                    if !coeff.is_zero() {
                        row[idx(u, j)] = row[idx(u, j)].clone() - coeff;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        Matrix::from_rows(rows)
    };
    let sol = kernel(&sys)?;
    let basis = sol
        .basis_rows()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |r, c| v[idx(r, c)].clone()))
        .collect();
    Ok(DerivationSpace { k, basis })
}

/// Inner derivations under the α-identity condition: the map
/// `φ : x ↦ ad(x)` into matrix space, its image, and its kernel (which is
/// asserted to equal the centre).
#[derive(Debug, Clone)]
pub struct InnerDerivations<S> {
    /// Matrix of φ (n² x n), columns are vectorized adjoint maps.
    pub phi: Matrix<S>,
    pub image: Subspace<S>,
    pub kernel: Subspace<S>,
}

pub fn inner_derivations<S: Scalar>(l: &HomLieAlgebra<S>) -> Result<InnerDerivations<S>> {
    if !l.alpha_identity_check() {
        return Err(Error::AlphaIdentityFails(format!(
            "inner derivations of {} need the α-identity condition",
            l.name
        )));
    }
    let n = l.dim();
    let mut phi = Matrix::zeros(n * n, n);
    for i in 0..n {
        let ad = ad_matrix(l, &unit_vec::<S>(n, i))?;
        for r in 0..n {
            for c in 0..n {
                phi.set(r * n + c, i, ad.get(r, c).clone());
            }
        }
    }
    let ker = kernel(&phi)?;
    if ker != l.centre() {
        return Err(Error::AuditFailure(
            "inner derivations: Ker(φ) differs from the centre".to_string(),
        ));
    }
    Ok(InnerDerivations {
        image: image(&phi),
        kernel: ker,
        phi,
    })
}
