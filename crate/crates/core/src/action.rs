//! Hom-actions, compatibility, and (pre)crossed modules.
//!
//! An action of `(L, α_L)` on `(M, α_M)` is stored as the coefficient
//! tensor `t[i][j]` with `^{e_i} f_j = Σ_k t[i][j][k] f_k` in the actee's
//! own basis. All axiom checks enumerate basis tuples, which is complete
//! because every law is multilinear.

use crate::algebra::{HomLieAlgebra, Homomorphism};
use crate::error::{Error, Result};
use crate::matrix::{unit_vec, vec_add, vec_is_zero, vec_sub, Matrix};
use crate::scalar::Scalar;
use crate::subspace::{image, kernel, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAction<S> {
    pub actor: HomLieAlgebra<S>,
    pub actee: HomLieAlgebra<S>,
    /// `coeffs[i][j]` is `^{e_i} f_j` in actee coordinates.
    coeffs: Vec<Vec<Vec<S>>>,
}

/// Axiom check outcome; each failure records the first bad basis tuple
/// (actor indices first, then actee indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    pub axiom_a: bool,
    pub axiom_a_failure: Option<(usize, usize, usize)>,
    pub axiom_b: bool,
    pub axiom_b_failure: Option<(usize, usize, usize)>,
    pub axiom_c: bool,
    pub axiom_c_failure: Option<(usize, usize)>,
}

impl ActionReport {
    pub fn all_pass(&self) -> bool {
        self.axiom_a && self.axiom_b && self.axiom_c
    }
}

impl<S: Scalar> HomAction<S> {
    pub fn new(
        actor: HomLieAlgebra<S>,
        actee: HomLieAlgebra<S>,
        coeffs: Vec<Vec<Vec<S>>>,
    ) -> Result<Self> {
        let (nl, nm) = (actor.dim(), actee.dim());
        if coeffs.len() != nl
            || coeffs
                .iter()
                .any(|row| row.len() != nm || row.iter().any(|v| v.len() != nm))
        {
            return Err(Error::DimensionMismatch(format!(
                "action tensor must be {nl}x{nm}x{nm}"
            )));
        }
        Ok(HomAction {
            actor,
            actee,
            coeffs,
        })
    }

    pub fn trivial(actor: HomLieAlgebra<S>, actee: HomLieAlgebra<S>) -> Self {
        let coeffs = vec![vec![vec![S::zero(); actee.dim()]; actee.dim()]; actor.dim()];
        HomAction {
            actor,
            actee,
            coeffs,
        }
    }

    pub fn coeffs(&self) -> &Vec<Vec<Vec<S>>> {
        &self.coeffs
    }

    pub fn basis_act(&self, i: usize, j: usize) -> &[S] {
        &self.coeffs[i][j]
    }

    /// Bilinear extension: `^x m` for coordinate vectors.
    pub fn eval(&self, x: &[S], m: &[S]) -> Result<Vec<S>> {
        if x.len() != self.actor.dim() || m.len() != self.actee.dim() {
            return Err(Error::DimensionMismatch(format!(
                "action eval: actor len {} (dim {}), actee len {} (dim {})",
                x.len(),
                self.actor.dim(),
                m.len(),
                self.actee.dim()
            )));
        }
        let mut out = vec![S::zero(); self.actee.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate() {
                if mj.is_zero() {
                    continue;
                }
                let c = xi.clone() * mj.clone();
                for k in 0..self.actee.dim() {
                    let t = &self.coeffs[i][j][k];
                    if t.is_zero() {
                        continue;
                    }
                    out[k] = out[k].clone() + c.clone() * t.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs
            .iter()
            .all(|row| row.iter().all(|v| vec_is_zero(v)))
    }

    /// The three Hom-action axioms on all basis tuples.
    pub fn verify(&self) -> ActionReport {
        let l = &self.actor;
        let m = &self.actee;
        let mut report = ActionReport {
            axiom_a: true,
            axiom_a_failure: None,
            axiom_b: true,
            axiom_b_failure: None,
            axiom_c: true,
            axiom_c_failure: None,
        };
        // a) ^{[x,y]} α_M(m) = ^{α_L(x)}(^y m) - ^{α_L(y)}(^x m)
        'a: for i in 0..l.dim() {
            let ai = l.twist().col(i);
            for j in 0..l.dim() {
                let aj = l.twist().col(j);
                let bij = l.basis_bracket(i, j);
                for k in 0..m.dim() {
                    let am = m.twist().col(k);
                    let lhs = self.eval(bij, &am).expect("dims");
                    let t1 = self.eval(&ai, &self.coeffs[j][k]).expect("dims");
                    let t2 = self.eval(&aj, &self.coeffs[i][k]).expect("dims");
                    if lhs != vec_sub(&t1, &t2) {
                        report.axiom_a = false;
                        report.axiom_a_failure = Some((i, j, k));
                        break 'a;
                    }
                }
            }
        }
        // b) ^{α_L(x)} [m, m'] = [^x m, α_M(m')] + [α_M(m), ^x m']
        'b: for i in 0..l.dim() {
            let ai = l.twist().col(i);
            for a in 0..m.dim() {
                let ama = m.twist().col(a);
                for b in 0..m.dim() {
                    let amb = m.twist().col(b);
                    let lhs = self.eval(&ai, m.basis_bracket(a, b)).expect("dims");
                    let t1 = m.bracket_eval(&self.coeffs[i][a], &amb).expect("dims");
                    let t2 = m.bracket_eval(&ama, &self.coeffs[i][b]).expect("dims");
                    if lhs != vec_add(&t1, &t2) {
                        report.axiom_b = false;
                        report.axiom_b_failure = Some((i, a, b));
                        break 'b;
                    }
                }
            }
        }
        // c) α_M(^x m) = ^{α_L(x)} α_M(m)
        'c: for i in 0..l.dim() {
            let ai = l.twist().col(i);
            for a in 0..m.dim() {
                let ama = m.twist().col(a);
                let lhs = m.twist_eval(&self.coeffs[i][a]).expect("dims");
                let rhs = self.eval(&ai, &ama).expect("dims");
                if lhs != rhs {
                    report.axiom_c = false;
                    report.axiom_c_failure = Some((i, a));
                    break 'c;
                }
            }
        }
        report
    }
}

/// The Hom-Lie structure a twist-invariant subalgebra inherits, in the
/// coordinates of its canonical (RREF) basis.
pub fn sub_structure<S: Scalar>(
    l: &HomLieAlgebra<S>,
    w: &Subspace<S>,
    name: impl Into<String>,
) -> Result<HomLieAlgebra<S>> {
    if !l.is_subalgebra(w)? {
        return Err(Error::NotAnIdeal(
            "sub_structure: subspace is not a subalgebra".to_string(),
        ));
    }
    let k = w.dim();
    let rows = w.basis_rows();
    let mut bracket = vec![vec![vec![S::zero(); k]; k]; k];
    for a in 0..k {
        for b in 0..k {
            let v = l.bracket_eval(&rows[a], &rows[b])?;
            bracket[a][b] = w.coords_of(&v)?;
        }
    }
    let mut twist = Matrix::zeros(k, k);
    for a in 0..k {
        let img = l.twist_eval(&rows[a])?;
        let coords = w.coords_of(&img)?;
        for r in 0..k {
            twist.set(r, a, coords[r].clone());
        }
    }
    let names = w
        .pivot_cols()
        .iter()
        .map(|&c| l.basis_names[c].clone())
        .collect();
    HomLieAlgebra::new(name, names, bracket, twist)
}

/// Action of `L` on an ideal `K ⊆ L` by the bracket, in the ideal's own
/// coordinates.
pub fn action_from_ideal<S: Scalar>(
    l: &HomLieAlgebra<S>,
    k: &Subspace<S>,
) -> Result<HomAction<S>> {
    if !l.is_ideal(k)? {
        return Err(Error::NotAnIdeal(
            "action_from_ideal: subspace is not an ideal".to_string(),
        ));
    }
    let actee = sub_structure(l, k, format!("{}_ideal{}", l.name, k.dim()))?;
    let rows = k.basis_rows();
    let mut coeffs = vec![vec![vec![S::zero(); k.dim()]; k.dim()]; l.dim()];
    for i in 0..l.dim() {
        let ei = unit_vec::<S>(l.dim(), i);
        for (a, row) in rows.iter().enumerate() {
            let v = l.bracket_eval(&ei, row)?;
            coeffs[i][a] = k.coords_of(&v)?;
        }
    }
    HomAction::new(l.clone(), actee, coeffs)
}

/// The adjoint action of `L` on itself.
pub fn adjoint_action<S: Scalar>(l: &HomLieAlgebra<S>) -> HomAction<S> {
    let n = l.dim();
    let mut coeffs = vec![vec![vec![S::zero(); n]; n]; n];
    for (i, row) in coeffs.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = l.basis_bracket(i, j).to_vec();
        }
    }
    HomAction {
        actor: l.clone(),
        actee: l.clone(),
        coeffs,
    }
}

/// Action induced by a homomorphism `f : L → M`, namely `^x m = [f(x), m]`.
pub fn action_from_hom<S: Scalar>(f: &Homomorphism<S>) -> Result<HomAction<S>> {
    let l = &f.source;
    let m = &f.target;
    let mut coeffs = vec![vec![vec![S::zero(); m.dim()]; m.dim()]; l.dim()];
    for i in 0..l.dim() {
        let fx = f.matrix.col(i);
        for j in 0..m.dim() {
            coeffs[i][j] = m.bracket_eval(&fx, &unit_vec::<S>(m.dim(), j))?;
        }
    }
    HomAction::new(l.clone(), m.clone(), coeffs)
}

/// Compatibility of a pair of mutual actions:
/// `^{(^m n)} m' = [m', ^n m]` and `^{(^n m)} n' = [n', ^m n]`.
pub fn verify_compatible<S: Scalar>(
    m_on_n: &HomAction<S>,
    n_on_m: &HomAction<S>,
) -> Result<bool> {
    let m = &m_on_n.actor;
    let n = &m_on_n.actee;
    if !n_on_m.actor.same_structure(n) || !n_on_m.actee.same_structure(m) {
        return Err(Error::DimensionMismatch(
            "verify_compatible: actions are not a mutual pair".to_string(),
        ));
    }
    for i in 0..m.dim() {
        for j in 0..n.dim() {
            let mn = m_on_n.basis_act(i, j); // ^{e_i} f_j ∈ N
            let nm = n_on_m.basis_act(j, i); // ^{f_j} e_i ∈ M
            for k in 0..m.dim() {
                let ek = unit_vec::<S>(m.dim(), k);
                let lhs = n_on_m.eval(mn, &ek)?;
                let rhs = m.bracket_eval(&ek, nm)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            for k in 0..n.dim() {
                let fk = unit_vec::<S>(n.dim(), k);
                let lhs = m_on_n.eval(nm, &fk)?;
                let rhs = n.bracket_eval(&fk, mn)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A crossed module `μ : (M, α_M) → (L, α_L)` with the action of `L` on `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule<S> {
    pub module: HomLieAlgebra<S>,
    pub base: HomLieAlgebra<S>,
    /// Matrix of μ (base.dim x module.dim).
    pub mu: Matrix<S>,
    pub action: HomAction<S>,
}

impl<S: Scalar> CrossedModule<S> {
    /// Builds and fully verifies: μ is a homomorphism, the action satisfies
    /// the Hom-action axioms, and both crossed-module conditions hold.
    pub fn new(
        module: HomLieAlgebra<S>,
        base: HomLieAlgebra<S>,
        mu: Matrix<S>,
        action: HomAction<S>,
    ) -> Result<Self> {
        Homomorphism::new(module.clone(), base.clone(), mu.clone())?;
        if !action.actor.same_structure(&base) || !action.actee.same_structure(&module) {
            return Err(Error::DimensionMismatch(
                "crossed module: action must be of the base on the module".to_string(),
            ));
        }
        let ar = action.verify();
        if !ar.all_pass() {
            return Err(Error::InvalidAction(format!("{ar:?}")));
        }
        let xm = CrossedModule {
            module,
            base,
            mu,
            action,
        };
        if !xm.verify_precrossed()? {
            return Err(Error::NotACrossedModule(
                "precrossed condition μ(^x m) = [x, μ(m)] fails".to_string(),
            ));
        }
        if !xm.verify_crossed()? {
            return Err(Error::NotACrossedModule(
                "Peiffer condition ^{μ(m)} m' = [m, m'] fails".to_string(),
            ));
        }
        Ok(xm)
    }

    /// `(L, L, id)` with the adjoint action.
    pub fn identity(l: &HomLieAlgebra<S>) -> Self {
        CrossedModule {
            module: l.clone(),
            base: l.clone(),
            mu: Matrix::identity(l.dim()),
            action: adjoint_action(l),
        }
    }

    /// Inclusion of an ideal with the bracket action.
    pub fn inclusion(l: &HomLieAlgebra<S>, ideal: &Subspace<S>) -> Result<Self> {
        let action = action_from_ideal(l, ideal)?;
        let module = action.actee.clone();
        let mut mu = Matrix::zeros(l.dim(), module.dim());
        for (a, row) in ideal.basis_rows().iter().enumerate() {
            for r in 0..l.dim() {
                mu.set(r, a, row[r].clone());
            }
        }
        Self::new(module, l.clone(), mu, action)
    }

    /// Zero map on an abelian module carrying a verified action.
    pub fn zero(
        module: HomLieAlgebra<S>,
        base: HomLieAlgebra<S>,
        action: HomAction<S>,
    ) -> Result<Self> {
        let mu = Matrix::zeros(base.dim(), module.dim());
        Self::new(module, base, mu, action)
    }

    /// Condition a): μ(^x m) = [x, μ(m)] on basis tuples.
    pub fn verify_precrossed(&self) -> Result<bool> {
        for i in 0..self.base.dim() {
            let ei = unit_vec::<S>(self.base.dim(), i);
            for j in 0..self.module.dim() {
                let lhs = self.mu.mul_vec(self.action.basis_act(i, j))?;
                let rhs = self.base.bracket_eval(&ei, &self.mu.col(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Condition b): ^{μ(m)} m' = [m, m'] on basis tuples.
    pub fn verify_crossed(&self) -> Result<bool> {
        for i in 0..self.module.dim() {
            let mui = self.mu.col(i);
            for j in 0..self.module.dim() {
                let fj = unit_vec::<S>(self.module.dim(), j);
                let lhs = self.action.eval(&mui, &fj)?;
                let rhs = self.module.basis_bracket(i, j);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Structure facts about a crossed module: the image is an ideal of the
/// base, the kernel sits inside the centre of the module.
#[derive(Debug, Clone)]
pub struct XModStructureReport<S> {
    pub image: Subspace<S>,
    pub image_is_ideal: bool,
    pub kernel: Subspace<S>,
    pub kernel_in_centre: bool,
}

pub fn xmod_structure_report<S: Scalar>(xm: &CrossedModule<S>) -> Result<XModStructureReport<S>> {
    let im = image(&xm.mu);
    let ker = kernel(&xm.mu)?;
    Ok(XModStructureReport {
        image_is_ideal: xm.base.is_ideal(&im)?,
        kernel_in_centre: ker.leq(&xm.module.centre())?,
        image: im,
        kernel: ker,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{e2, heisenberg3, sl2};
    use crate::matrix::vec_from_ints;
    use crate::scalar::Rat;
    use crate::subspace::Subspace;

    fn v(xs: &[i64]) -> Vec<Rat> {
        vec_from_ints(xs)
    }

    #[test]
    fn trivial_action_passes() {
        let a = HomAction::trivial(sl2(), heisenberg3());
        assert!(a.verify().all_pass());
    }

    #[test]
    fn adjoint_action_passes() {
        for l in [e2(), heisenberg3(), sl2()] {
            assert!(adjoint_action(&l).verify().all_pass());
        }
    }

    #[test]
    fn corrupted_action_fails_axiom_c() {
        // needs a non-identity twist, otherwise axiom c is vacuous
        let e = e2();
        let mut coeffs = adjoint_action(&e).coeffs().clone();
        coeffs[0][0] = v(&[0, 1]); // ^{e1} e1 should be [e1,e1] = 0
        let a = HomAction::new(e.clone(), e, coeffs).unwrap();
        let report = a.verify();
        assert!(!report.all_pass());
        assert!(!report.axiom_c);
    }

    #[test]
    fn ideal_action_cases() {
        let l = sl2();
        let full = Subspace::full(3);
        let a = action_from_ideal(&l, &full).unwrap();
        assert!(a.verify().all_pass());
        assert_eq!(a.coeffs(), adjoint_action(&l).coeffs());

        let h = heisenberg3();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let az = action_from_ideal(&h, &z).unwrap();
        assert!(az.is_trivial()); // z central

        let ab = HomLieAlgebra::<Rat>::abelian("ab", 2, Matrix::identity(2)).unwrap();
        let i = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert!(action_from_ideal(&ab, &i).unwrap().is_trivial());

        // non-ideal rejected
        let e = e2();
        let not_ideal = Subspace::span(2, &[v(&[0, 1])]).unwrap();
        assert!(action_from_ideal(&e, &not_ideal).is_err());
    }

    #[test]
    fn hom_action_cases() {
        let l = sl2();
        let idm = Homomorphism::new(l.clone(), l.clone(), Matrix::identity(3)).unwrap();
        let a = action_from_hom(&idm).unwrap();
        assert_eq!(a.coeffs(), adjoint_action(&l).coeffs());
        assert!(a.verify().all_pass());

        let zero = Homomorphism::new(l.clone(), l.clone(), Matrix::zeros(3, 3)).unwrap();
        assert!(action_from_hom(&zero).unwrap().is_trivial());

        // inclusion of span{e1} into E2: ^{e1} e2 = [e1, e2] = e1
        let e = e2();
        let k = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let sub = sub_structure(&e, &k, "K").unwrap();
        let mut inc = Matrix::zeros(2, 1);
        inc.set(0, 0, Rat::from_int(1));
        let f = Homomorphism::new(sub, e.clone(), inc).unwrap();
        let act = action_from_hom(&f).unwrap();
        assert_eq!(act.basis_act(0, 0), &v(&[0, 0])[..]); // [e1, e1] = 0
        assert_eq!(act.basis_act(0, 1), &v(&[1, 0])[..]); // [e1, e2] = e1
        assert!(act.verify().all_pass());
    }

    /// Action of one ideal on another by the ambient bracket, both taken
    /// with their inherited structure.
    fn sub_action(
        l: &HomLieAlgebra<Rat>,
        actor_sp: &Subspace<Rat>,
        actee_sp: &Subspace<Rat>,
    ) -> HomAction<Rat> {
        let actor = sub_structure(l, actor_sp, "H").unwrap();
        let actee = sub_structure(l, actee_sp, "K").unwrap();
        let arows = actor_sp.basis_rows();
        let brows = actee_sp.basis_rows();
        let mut coeffs =
            vec![vec![vec![Rat::from_int(0); actee.dim()]; actee.dim()]; actor.dim()];
        for (i, ar) in arows.iter().enumerate() {
            for (j, br) in brows.iter().enumerate() {
                let w = l.bracket_eval(ar, br).unwrap();
                coeffs[i][j] = actee_sp.coords_of(&w).unwrap();
            }
        }
        HomAction::new(actor, actee, coeffs).unwrap()
    }

    #[test]
    fn mutual_ideal_actions_are_compatible() {
        let h = heisenberg3();
        let full = Subspace::full(3);
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let m_on_n = sub_action(&h, &full, &z);
        let n_on_m = sub_action(&h, &z, &full);
        assert!(verify_compatible(&m_on_n, &n_on_m).unwrap());

        // trivial mutual actions on abelian algebras are compatible
        let a = HomLieAlgebra::<Rat>::abelian("a", 2, Matrix::identity(2)).unwrap();
        let b = HomLieAlgebra::<Rat>::abelian("b", 1, Matrix::identity(1)).unwrap();
        let t1 = HomAction::trivial(a.clone(), b.clone());
        let t2 = HomAction::trivial(b, a);
        assert!(verify_compatible(&t1, &t2).unwrap());

        // corrupting one side breaks compatibility
        let l = sl2();
        let adj = adjoint_action(&l);
        let mut corrupt = adj.coeffs().clone();
        corrupt[0][1] = v(&[1, 1, 1]);
        let bad = HomAction::new(l.clone(), l.clone(), corrupt).unwrap();
        assert!(!verify_compatible(&adj, &bad).unwrap());
    }

    #[test]
    fn inclusion_crossed_module_of_ideal() {
        let h = heisenberg3();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]).unwrap();
        let xm = CrossedModule::inclusion(&h, &z).unwrap();
        assert!(xm.verify_precrossed().unwrap());
        assert!(xm.verify_crossed().unwrap());

        let report = xmod_structure_report(&xm).unwrap();
        assert_eq!(report.image, z);
        assert!(report.image_is_ideal);
        assert!(report.kernel.is_zero());
        assert!(report.kernel_in_centre);
    }

    #[test]
    fn identity_crossed_module() {
        for l in [e2(), heisenberg3(), sl2()] {
            let xm = CrossedModule::identity(&l);
            assert!(xm.verify_precrossed().unwrap());
            assert!(xm.verify_crossed().unwrap());
        }
        let l = sl2();
        let report = xmod_structure_report(&CrossedModule::identity(&l)).unwrap();
        assert!(report.kernel.is_zero());
        assert_eq!(report.image, Subspace::full(3));
    }

    #[test]
    fn zero_crossed_module_on_abelian_module() {
        // abelian M with the trivial action is a Hom-module; μ = 0 works.
        let l = sl2();
        let m = HomLieAlgebra::<Rat>::abelian("m", 2, Matrix::identity(2)).unwrap();
        let act = HomAction::trivial(l.clone(), m.clone());
        let xm = CrossedModule::zero(m.clone(), l, act).unwrap();
        let report = xmod_structure_report(&xm).unwrap();
        assert_eq!(report.kernel, Subspace::full(2)); // Ker = M = Z(M)
        assert!(report.kernel_in_centre);
        assert!(report.image.is_zero());
    }

    #[test]
    fn non_crossed_module_is_rejected() {
        // The zero map out of a NON-abelian module fails the Peiffer
        // condition: ^{0} m' = 0 but [m, m'] ≠ 0.
        let h = heisenberg3();
        let act = HomAction::trivial(h.clone(), h.clone());
        assert!(matches!(
            CrossedModule::zero(h.clone(), h, act),
            Err(Error::NotACrossedModule(_))
        ));
    }
}
