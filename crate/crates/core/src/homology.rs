//! The twisted exterior chain complex of a Hom-Lie algebra with trivial
//! coefficients, and its homology in low degrees.
//!
//! `C_n = Λⁿ L` on the basis of strictly increasing index tuples in lex
//! order, and
//!
//! `d_n(x_1∧…∧x_n) = Σ_{i<j} (-1)^{i+j+1} [x_i,x_j] ∧ α(x_1) ∧ … ∧
//!  ĥat{α(x_i)} ∧ … ∧ ĥat{α(x_j)} ∧ … ∧ α(x_n)`.
//!
//! The sign `(-1)^{i+j+1}` (together with the canonical wedge-sorting
//! signs) is required for `d ∘ d = 0` on non-abelian algebras; the unsigned
//! summation breaks the complex property already on simple examples, and
//! [`verify_complex`] is the executable witness for the convention chosen
//! here. `H_0` is the ground field; `d_1 = 0`, so `H_1 = L/[L,L]`.

use std::collections::BTreeMap;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::{image, kernel, QuotientSpace, Subspace};

/// Strictly increasing `k`-tuples from `{0..n}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: usize = 1;
    let mut den: usize = 1;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Accumulate the wedge of `factors` (arbitrary coordinate vectors) into
/// the sorted-tuple coordinates, scaled by `scale`.
fn accumulate_wedge<S: Scalar>(
    out: &mut [S],
    scale: &S,
    factors: &[Vec<S>],
    index_of: &BTreeMap<Vec<usize>, usize>,
    dim: usize,
) {
    let k = factors.len();
    if k == 0 {
        // Λ⁰ has the single basis element 1.
        out[0] = out[0].clone() + scale.clone();
        return;
    }
    let mut idx = vec![0usize; k];
    'outer: loop {
        // product of the chosen coordinates
        let mut coeff = scale.clone();
        let mut zero = false;
        for (t, &a) in idx.iter().enumerate() {
            let x = &factors[t][a];
            if x.is_zero() {
                zero = true;
                break;
            }
            coeff = coeff * x.clone();
        }
        if !zero {
            // sort with parity, reject repeats
            let mut perm: Vec<usize> = idx.clone();
            let mut sign_pos = true;
            let mut distinct = true;
            for a in 0..k {
                for b in (a + 1)..k {
                    match perm[a].cmp(&perm[b]) {
                        std::cmp::Ordering::Greater => {
                            perm.swap(a, b);
                            sign_pos = !sign_pos;
                        }
                        std::cmp::Ordering::Equal => {
                            distinct = false;
                        }
                        std::cmp::Ordering::Less => {}
                    }
                }
            }
            if distinct {
                let pos = index_of[&perm];
                out[pos] = if sign_pos {
                    out[pos].clone() + coeff
                } else {
                    out[pos].clone() - coeff
                };
            }
        }
        // next multi-index
        for t in (0..k).rev() {
            idx[t] += 1;
            if idx[t] < dim {
                continue 'outer;
            }
            idx[t] = 0;
        }
        break;
    }
}

fn boundary_matrix<S: Scalar>(l: &HomLieAlgebra<S>, n: usize, signed: bool) -> Result<Matrix<S>> {
    let dim = l.dim();
    if n < 1 || n > dim {
        return Err(Error::DegreeOutOfRange { degree: n, dim });
    }
    let rows_basis = combinations(dim, n - 1);
    let cols_basis = combinations(dim, n);
    let index_of: BTreeMap<Vec<usize>, usize> = rows_basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(p, t)| (t, p))
        .collect();
    let mut out = Matrix::zeros(rows_basis.len(), cols_basis.len());
    if n == 1 {
        // d_1 : L → 𝕂 is zero
        return Ok(out);
    }
    let twist_cols: Vec<Vec<S>> = (0..dim).map(|c| l.twist().col(c)).collect();
    for (col, tuple) in cols_basis.iter().enumerate() {
        let mut column = vec![S::zero(); rows_basis.len()];
        for i in 0..n {
            for j in (i + 1)..n {
                // positions are 1-based in the sign convention
                // (-1)^{i+j+1} with 1-based positions; the unsigned
                // variant takes every summand with +1
                let sign = if !signed || (i + j + 1) % 2 == 0 {
                    S::one()
                } else {
                    -S::one()
                };
                let b = l.basis_bracket(tuple[i], tuple[j]).to_vec();
                let mut factors = Vec::with_capacity(n - 1);
                factors.push(b);
                for (t, &s) in tuple.iter().enumerate() {
                    if t == i || t == j {
                        continue;
                    }
                    factors.push(twist_cols[s].clone());
                }
                accumulate_wedge(&mut column, &sign, &factors, &index_of, dim);
            }
        }
        for (r, x) in column.into_iter().enumerate() {
            if !x.is_zero() {
                out.set(r, col, x);
            }
        }
    }
    Ok(out)
}

/// `d_n : Λⁿ L → Λⁿ⁻¹ L`. Degree must satisfy `1 ≤ n ≤ dim L`.
pub fn boundary<S: Scalar>(l: &HomLieAlgebra<S>, n: usize) -> Result<Matrix<S>> {
    boundary_matrix(l, n, true)
}

/// The unsigned variant of the differential (no `(-1)^{i+j}` factor). Not
/// a complex in general; kept as the executable record of why the signed
/// convention was adopted.
pub fn boundary_unsigned<S: Scalar>(l: &HomLieAlgebra<S>, n: usize) -> Result<Matrix<S>> {
    boundary_matrix(l, n, false)
}

/// `d_{n-1} ∘ d_n = 0` for all `2 ≤ n ≤ max_degree`.
pub fn verify_complex<S: Scalar>(l: &HomLieAlgebra<S>, max_degree: usize) -> Result<bool> {
    if max_degree > l.dim() {
        return Err(Error::DegreeOutOfRange {
            degree: max_degree,
            dim: l.dim(),
        });
    }
    for n in 2..=max_degree {
        let dn = boundary(l, n)?;
        let dn1 = boundary(l, n - 1)?;
        if !dn1.matmul(&dn)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The chain complex up to a degree, with `d² = 0` checked on construction.
#[derive(Debug, Clone)]
pub struct ChainComplex<S> {
    pub algebra: HomLieAlgebra<S>,
    pub max_degree: usize,
    /// `spaces[k]` is the basis of Λᵏ L as sorted index tuples.
    pub spaces: Vec<Vec<Vec<usize>>>,
    /// `boundaries[k]` is `d_k` for `1 ≤ k ≤ max_degree` (index 0 unused,
    /// stored as the zero map out of Λ⁰).
    pub boundaries: Vec<Matrix<S>>,
}

impl<S: Scalar> ChainComplex<S> {
    pub fn build(l: &HomLieAlgebra<S>, max_degree: usize) -> Result<Self> {
        if max_degree > l.dim() {
            return Err(Error::DegreeOutOfRange {
                degree: max_degree,
                dim: l.dim(),
            });
        }
        let mut spaces = Vec::new();
        let mut boundaries = Vec::new();
        for k in 0..=max_degree {
            spaces.push(combinations(l.dim(), k));
            if k == 0 {
                boundaries.push(Matrix::zeros(0, 1));
            } else {
                boundaries.push(boundary(l, k)?);
            }
        }
        for k in 2..=max_degree {
            if !boundaries[k - 1].matmul(&boundaries[k])?.is_zero() {
                return Err(Error::AuditFailure(format!(
                    "complex property fails at degree {k}"
                )));
            }
        }
        Ok(ChainComplex {
            algebra: l.clone(),
            max_degree,
            spaces,
            boundaries,
        })
    }
}

/// Homology in one degree: dimension, canonical representative cycles, and
/// the dimension of the boundary space that was quotiented out.
#[derive(Debug, Clone)]
pub struct HomologyReport<S> {
    pub degree: usize,
    pub dim: usize,
    pub cycle_basis: Vec<Vec<S>>,
    pub boundary_dim: usize,
}

/// `H_n = Ker d_n / Im d_{n+1}`. Degree 0 is the ground field; degrees
/// above the dimension are zero (empty exterior powers).
pub fn homology<S: Scalar>(l: &HomLieAlgebra<S>, n: usize) -> Result<HomologyReport<S>> {
    let dim = l.dim();
    if n == 0 {
        return Ok(HomologyReport {
            degree: 0,
            dim: 1,
            cycle_basis: vec![vec![S::one()]],
            boundary_dim: 0,
        });
    }
    if n > dim {
        return Ok(HomologyReport {
            degree: n,
            dim: 0,
            cycle_basis: Vec::new(),
            boundary_dim: 0,
        });
    }
    let cn = binomial(dim, n);
    let cycles = kernel(&boundary(l, n)?)?;
    let boundaries = if n + 1 > dim {
        Subspace::zero(cn)
    } else {
        image(&boundary(l, n + 1)?)
    };
    let quot = QuotientSpace::new(boundaries.clone());
    let mut classes = Vec::new();
    for row in cycles.basis_rows() {
        classes.push(quot.project(&row)?);
    }
    let h = Subspace::span(quot.dim(), &classes)?;
    let hdim = h.dim();
    debug_assert_eq!(hdim, cycles.dim() - boundaries.dim());
    let mut cycle_basis = Vec::new();
    for row in h.basis_rows() {
        cycle_basis.push(quot.lift(&row)?);
    }
    Ok(HomologyReport {
        degree: n,
        dim: hdim,
        cycle_basis,
        boundary_dim: boundaries.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{dim4_alpha_iteration, e2, heisenberg3, sl2};
    use crate::matrix::vec_is_zero;
    use crate::scalar::Rat;
    use num_traits::Zero;

    #[test]
    fn combination_bases() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3).len(), 0);
        let c = combinations(4, 2);
        assert_eq!(c[0], vec![0, 1]);
        assert_eq!(c[5], vec![2, 3]);
    }

    #[test]
    fn heisenberg_boundaries() {
        let h = heisenberg3();
        let d2 = boundary(&h, 2).unwrap();
        // d₂(x∧y) = [x,y] = z, other wedges die
        assert_eq!(d2.rank(), 1);
        let d3 = boundary(&h, 3).unwrap();
        assert!(d3.is_zero()); // z∧z collapses every summand
    }

    #[test]
    fn abelian_boundaries_vanish() {
        let a = HomLieAlgebra::<Rat>::abelian("a", 3, Matrix::identity(3)).unwrap();
        for n in 1..=3 {
            assert!(boundary(&a, n).unwrap().is_zero());
        }
    }

    #[test]
    fn complex_property_holds_signed() {
        for l in [e2(), heisenberg3(), sl2(), dim4_alpha_iteration()] {
            let deg = l.dim().min(4);
            assert!(verify_complex(&l, deg).unwrap(), "fails on {}", l.name);
        }
    }

    #[test]
    fn unsigned_variant_breaks_the_complex_on_sl2() {
        let l = sl2();
        let d2 = boundary_unsigned(&l, 2).unwrap();
        let d3 = boundary_unsigned(&l, 3).unwrap();
        assert!(!d2.matmul(&d3).unwrap().is_zero());
    }

    #[test]
    fn h1_matches_the_abelianisation() {
        for l in [e2(), heisenberg3(), sl2(), dim4_alpha_iteration()] {
            let h1 = homology(&l, 1).unwrap();
            assert_eq!(h1.dim, l.dim() - l.derived().dim(), "H1 of {}", l.name);
        }
    }

    #[test]
    fn h2_values() {
        let a2 = HomLieAlgebra::<Rat>::abelian("a", 2, Matrix::identity(2)).unwrap();
        assert_eq!(homology(&a2, 2).unwrap().dim, 1);
        assert_eq!(homology(&heisenberg3(), 2).unwrap().dim, 2);
        assert_eq!(homology(&sl2(), 2).unwrap().dim, 0);
        assert_eq!(homology(&e2(), 2).unwrap().dim, 0);
        assert_eq!(homology(&dim4_alpha_iteration(), 2).unwrap().dim, 4);
    }

    #[test]
    fn h0_is_the_ground_field_and_high_degrees_vanish() {
        let l = heisenberg3();
        assert_eq!(homology(&l, 0).unwrap().dim, 1);
        let high = homology(&l, 5).unwrap();
        assert_eq!(high.dim, 0);
        assert!(high.cycle_basis.is_empty());
    }

    #[test]
    fn representative_cycles_are_cycles() {
        let l = heisenberg3();
        let d2 = boundary(&l, 2).unwrap();
        let h2 = homology(&l, 2).unwrap();
        assert_eq!(h2.cycle_basis.len(), h2.dim);
        for c in &h2.cycle_basis {
            assert!(vec_is_zero(&d2.mul_vec(c).unwrap()));
        }
    }

    #[test]
    fn chain_complex_builds_and_checks() {
        let c = ChainComplex::build(&sl2(), 3).unwrap();
        assert_eq!(c.spaces[2].len(), 3);
        assert!(ChainComplex::build(&sl2(), 5).is_err());
    }

    /// Independent classical oracle: the untwisted exterior differential,
    /// written directly against tuple bases. For identity twists the
    /// twisted differential must coincide with it.
    fn classical_boundary(l: &HomLieAlgebra<Rat>, n: usize) -> Matrix<Rat> {
        let dim = l.dim();
        let rows = combinations(dim, n - 1);
        let cols = combinations(dim, n);
        let pos: BTreeMap<Vec<usize>, usize> =
            rows.iter().cloned().enumerate().map(|(p, t)| (t, p)).collect();
        let mut out: Matrix<Rat> = Matrix::zeros(rows.len(), cols.len());
        for (c, tuple) in cols.iter().enumerate() {
            for i in 0..n {
                for j in (i + 1)..n {
                    let b = l.basis_bracket(tuple[i], tuple[j]);
                    let rest: Vec<usize> = tuple
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != i && *t != j)
                        .map(|(_, &s)| s)
                        .collect();
                    for (k, coeff) in b.iter().enumerate() {
                        if coeff.is_zero() || rest.contains(&k) {
                            continue;
                        }
                        let mut t = rest.clone();
                        // insertion sign for k into the sorted remainder
                        let insert_at = t.iter().filter(|&&x| x < k).count();
                        let mut sign = if (i + j + 1) % 2 == 0 { 1i64 } else { -1 };
                        if insert_at % 2 == 1 {
                            sign = -sign;
                        }
                        t.insert(insert_at, k);
                        let r = pos[&t];
                        let v = out.get(r, c).clone()
                            + coeff.clone() * Rat::from_int(sign);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn identity_twist_matches_classical_chevalley_eilenberg() {
        for l in [heisenberg3(), sl2()] {
            for n in 2..=l.dim() {
                assert_eq!(
                    boundary(&l, n).unwrap(),
                    classical_boundary(&l, n),
                    "degree {n} of {}",
                    l.name
                );
            }
        }
    }
}
