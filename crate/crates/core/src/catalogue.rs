//! Built-in example algebras with provenance-tagged expected values.
//!
//! Every test suite and CLI demo draws from here. Each entry carries a map
//! of named expected results; each value is tagged with how it was
//! obtained (hand derivation, an independent oracle, or a trivial
//! consequence of the definitions), so a failing comparison always points
//! at a specific claim.
//!
//! Concrete over ℚ; the generic layers are instantiated once here.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{direct_sum, yau_twist, HomLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{vec_from_ints, Matrix};
use crate::scalar::{Rat, Scalar};

pub type QAlgebra = HomLieAlgebra<Rat>;
type QMat = Matrix<Rat>;

/// Where an entry (or expected value) comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Worked example reproduced from the source material.
    PaperExample,
    /// Classical object (Heisenberg, sl2, abelian spaces).
    Classical,
    /// Constructed for this artifact.
    Constructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Paper,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedValue {
    Int(i64),
    Bool(bool),
}

/// One frozen expectation: a named quantity, its value, and the oracle
/// that produced it.
#[derive(Debug, Clone)]
pub struct Expected {
    pub key: &'static str,
    pub value: ExpectedValue,
    pub tag: Tag,
    pub oracle: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub id: &'static str,
    pub algebra: QAlgebra,
    pub provenance: Provenance,
    pub expected: Vec<Expected>,
}

impl CatalogueEntry {
    pub fn expect_int(&self, key: &str) -> Option<i64> {
        self.expected.iter().find(|e| e.key == key).and_then(|e| match e.value {
            ExpectedValue::Int(v) => Some(v),
            ExpectedValue::Bool(_) => None,
        })
    }

    pub fn expect_bool(&self, key: &str) -> Option<bool> {
        self.expected.iter().find(|e| e.key == key).and_then(|e| match e.value {
            ExpectedValue::Bool(v) => Some(v),
            ExpectedValue::Int(_) => None,
        })
    }
}

fn ints(xs: &[i64]) -> Vec<Rat> {
    vec_from_ints(xs)
}

fn exp_int(key: &'static str, value: i64, tag: Tag, oracle: &'static str) -> Expected {
    Expected {
        key,
        value: ExpectedValue::Int(value),
        tag,
        oracle,
    }
}

fn exp_bool(key: &'static str, value: bool, tag: Tag, oracle: &'static str) -> Expected {
    Expected {
        key,
        value: ExpectedValue::Bool(value),
        tag,
        oracle,
    }
}

fn abelian_entry(id: &'static str, dim: usize, twist: QMat, nilpotent_twist: bool) -> CatalogueEntry {
    let algebra = QAlgebra::abelian(id, dim, twist).unwrap();
    let d = dim as i64;
    let choose2 = d * (d - 1) / 2;
    let capable = dim >= 2;
    CatalogueEntry {
        id,
        algebra,
        provenance: if nilpotent_twist {
            Provenance::Constructed
        } else {
            Provenance::Classical
        },
        expected: vec![
            exp_int("centre_dim", d, Tag::Trivial, "zero bracket, every subspace twist-stable in the full space"),
            exp_int("derived_dim", 0, Tag::Trivial, "zero bracket"),
            exp_bool("perfect", false, Tag::Trivial, "derived subalgebra is zero"),
            exp_int("h1_dim", d, Tag::Trivial, "all differentials vanish"),
            exp_int("h2_dim", choose2, Tag::Trivial, "all differentials vanish, dim Λ² = C(n,2)"),
            exp_int("tensor_square_dim", d * d, Tag::Trivial, "every relation generator vanishes"),
            exp_int("exterior_square_dim", choose2, Tag::Derived, "box of the diagonal pullback has dim n(n+1)/2; hand count"),
            exp_bool("capable", capable, Tag::Derived, "exterior annihilator by hand; matches the classical verdict for abelian Lie algebras"),
            exp_bool("alpha_identity", true, Tag::Trivial, "zero bracket"),
        ],
    }
}

fn e2_entry() -> CatalogueEntry {
    // the 2-dimensional example: [e1,e2] = e1 with twist [[1,1],[0,1]],
    // realized as the Yau twist of the solvable 2-dim Lie algebra
    let lie = QAlgebra::from_brackets(
        "aff1",
        vec!["e1".into(), "e2".into()],
        &[(0, 1, ints(&[1, 0]))],
        QMat::identity(2),
    )
    .unwrap();
    let endo = QMat::from_int_rows(&[&[1, 1], &[0, 1]]);
    let mut algebra = yau_twist(&lie, &endo).unwrap();
    algebra.name = "E2".to_string();
    CatalogueEntry {
        id: "E2",
        algebra,
        provenance: Provenance::PaperExample,
        expected: vec![
            exp_int("centre_dim", 0, Tag::Derived, "[ae1+be2, e1] = -b e1, [ae1+be2, e2] = a e1 force a = b = 0"),
            exp_int("derived_dim", 1, Tag::Derived, "only nonzero bracket is [e1,e2] = e1"),
            exp_bool("perfect", false, Tag::Trivial, "derived has dim 1 < 2"),
            exp_int("h1_dim", 1, Tag::Derived, "dim L - dim [L,L]"),
            exp_int("h2_dim", 0, Tag::Derived, "d₂(e1∧e2) = e1 ≠ 0, so no 2-cycles"),
            exp_int("tensor_square_dim", 2, Tag::Derived, "hand row-reduction: D = span{e1⊗e1, e1⊗e2 + e2⊗e1}"),
            exp_int("exterior_square_dim", 1, Tag::Derived, "box adds the class of e2⊗e2 to D"),
            exp_bool("capable", true, Tag::Derived, "Z ⊆ centre = 0; any algebra with trivial centre is its own quotient by the centre"),
            exp_bool("alpha_identity", false, Tag::Derived, "(α-id)e2 = e1 and [e2, e1] = -e1 ≠ 0"),
        ],
    }
}

fn heisenberg_entry() -> CatalogueEntry {
    let algebra = QAlgebra::from_brackets(
        "heisenberg3",
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, ints(&[0, 0, 1]))],
        QMat::identity(3),
    )
    .unwrap();
    CatalogueEntry {
        id: "heisenberg3",
        algebra,
        provenance: Provenance::Classical,
        expected: vec![
            exp_int("centre_dim", 1, Tag::Derived, "z spans the annihilator of the bracket"),
            exp_int("derived_dim", 1, Tag::Derived, "[x,y] = z spans"),
            exp_bool("perfect", false, Tag::Trivial, "derived has dim 1"),
            exp_int("h1_dim", 2, Tag::Derived, "dim L - dim [L,L]"),
            exp_int("h2_dim", 2, Tag::Derived, "ker d₂ = span{x∧z, y∧z}, d₃ = 0"),
            exp_int("tensor_square_dim", 6, Tag::Derived, "hand row-reduction: D = span{x⊗z+z⊗x, y⊗z+z⊗y, z⊗z}"),
            exp_int("exterior_square_dim", 3, Tag::Derived, "box = span{xx, yy, xy+yx} classes on top of D"),
            exp_bool("capable", true, Tag::Derived, "exterior annihilator vanishes by hand; classically h3 is capable"),
            exp_bool("alpha_identity", true, Tag::Trivial, "identity twist"),
        ],
    }
}

/// A non-identity multiplicative twist on the Heisenberg bracket:
/// diag(1, 2, 2). The naive z ↦ 0 variant is NOT multiplicative
/// (α[x,y] = 0 but [αx, αy] = z) and is excluded; see the catalogue tests.
fn heisenberg_scaled_entry() -> CatalogueEntry {
    let algebra = QAlgebra::from_brackets(
        "heisenberg3_scaled",
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, ints(&[0, 0, 1]))],
        QMat::from_int_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
    )
    .unwrap();
    CatalogueEntry {
        id: "heisenberg3_scaled",
        algebra,
        provenance: Provenance::Constructed,
        expected: vec![
            exp_int("centre_dim", 1, Tag::Derived, "span{z} is twist-stable"),
            exp_int("derived_dim", 1, Tag::Trivial, "same bracket as heisenberg3"),
            exp_bool("perfect", false, Tag::Trivial, "derived has dim 1"),
            exp_int("h1_dim", 2, Tag::Derived, "dim L - dim [L,L]"),
            exp_int("h2_dim", 2, Tag::Derived, "d₂ unchanged; d₃(x∧y∧z) lands on z∧(scaled z) = 0"),
            exp_int("tensor_square_dim", 6, Tag::Derived, "hand enumeration of the generator families with the scaled twist"),
            exp_int("exterior_square_dim", 3, Tag::Derived, "same box classes as the identity-twist case"),
            exp_bool("capable", true, Tag::Derived, "exterior annihilator vanishes by hand"),
            exp_bool("alpha_identity", false, Tag::Derived, "(α-id)y = y and [x, y] = z ≠ 0"),
        ],
    }
}

fn sl2_entry() -> CatalogueEntry {
    let algebra = QAlgebra::from_brackets(
        "sl2",
        vec!["e".into(), "f".into(), "h".into()],
        &[
            (0, 1, ints(&[0, 0, 1])),
            (0, 2, ints(&[-2, 0, 0])),
            (1, 2, ints(&[0, 2, 0])),
        ],
        QMat::identity(3),
    )
    .unwrap();
    CatalogueEntry {
        id: "sl2",
        algebra,
        provenance: Provenance::Classical,
        expected: vec![
            exp_int("centre_dim", 0, Tag::Derived, "simple Lie algebra"),
            exp_int("derived_dim", 3, Tag::Derived, "brackets span all basis vectors"),
            exp_bool("perfect", true, Tag::Derived, "derived = L"),
            exp_int("h1_dim", 0, Tag::Derived, "perfect"),
            exp_int("h2_dim", 0, Tag::Derived, "homology pipeline and Ker θ pipeline agree (Whitehead classically)"),
            exp_int("tensor_square_dim", 3, Tag::Derived, "dim D = 6 by row reduction; cross-checked by dim Ker θ + dim [L,L] = 0 + 3"),
            exp_int("exterior_square_dim", 3, Tag::Derived, "box vanishes for perfect algebras"),
            exp_bool("capable", true, Tag::Derived, "Z^⋏ ⊆ Z = 0"),
            exp_bool("alpha_identity", true, Tag::Trivial, "identity twist"),
            exp_int("uce_kernel_dim", 0, Tag::Derived, "Ker θ = H₂ = 0 via both pipelines"),
        ],
    }
}

fn sl2_plus_sl2_entry() -> CatalogueEntry {
    let single = sl2_entry().algebra;
    let mut algebra = direct_sum(&single, &single).unwrap();
    algebra.name = "sl2_plus_sl2".to_string();
    CatalogueEntry {
        id: "sl2_plus_sl2",
        algebra,
        provenance: Provenance::Classical,
        expected: vec![
            exp_int("centre_dim", 0, Tag::Derived, "direct sum of centreless algebras"),
            exp_int("derived_dim", 6, Tag::Derived, "blockwise perfect"),
            exp_bool("perfect", true, Tag::Derived, "direct sum of perfect algebras"),
            exp_int("h1_dim", 0, Tag::Derived, "perfect"),
            exp_int("h2_dim", 0, Tag::Derived, "Künneth at identity twist: H₂(g⊕g) = H₂(g)² ⊕ H₁(g)⊗H₁(g) = 0"),
            exp_int("tensor_square_dim", 6, Tag::Derived, "dim Ker θ + dim [L,L] = 0 + 6"),
            exp_int("exterior_square_dim", 6, Tag::Derived, "box vanishes for perfect algebras"),
            exp_bool("capable", true, Tag::Derived, "Z^⋏ ⊆ Z = 0"),
            exp_bool("alpha_identity", true, Tag::Trivial, "identity twist"),
            exp_int("uce_kernel_dim", 0, Tag::Derived, "vanishing multiplier of a product of perfect algebras"),
        ],
    }
}

fn dim4_entry() -> CatalogueEntry {
    let algebra = QAlgebra::from_brackets(
        "dim4_alpha_iteration",
        vec!["e1".into(), "e2".into(), "e3".into(), "e4".into()],
        &[(2, 3, ints(&[1, 0, 0, 0]))],
        QMat::from_int_rows(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 1, 1, 0],
            &[0, 0, 0, 0],
        ]),
    )
    .unwrap();
    CatalogueEntry {
        id: "dim4_alpha_iteration",
        algebra,
        provenance: Provenance::Constructed,
        expected: vec![
            exp_int("naive_centre_dim", 2, Tag::Derived, "[x, e3] and [x, e4] kill the e3, e4 coordinates"),
            exp_int("centre_dim", 1, Tag::Derived, "two fixpoint steps by hand: α(e2) = e3 falls outside the naive centre"),
            exp_int("derived_dim", 1, Tag::Trivial, "[e3,e4] = e1 is the only bracket"),
            exp_bool("perfect", false, Tag::Trivial, "derived has dim 1"),
            exp_int("h1_dim", 3, Tag::Derived, "dim L - dim [L,L]"),
            exp_int("h2_dim", 4, Tag::Derived, "ker d₂ has dim 5; d₃(e2∧e3∧e4) = e1∧e3 spans the image"),
            exp_int("tensor_square_dim", 13, Tag::Derived, "hand enumeration: D = span{e1⊗e1, e1⊗e3, e3⊗e1}"),
            exp_int("exterior_square_dim", 5, Tag::Derived, "8 nonzero diagonal/symmetrized classes on top of D"),
            exp_bool("capable", true, Tag::Derived, "exterior annihilator vanishes by hand"),
            exp_bool("alpha_identity", false, Tag::Derived, "(α-id)e4 = -e4 and [e3, e4] = e1 ≠ 0"),
        ],
    }
}

/// All entries, in a fixed order.
pub fn list_catalogue() -> Vec<CatalogueEntry> {
    vec![
        abelian_entry("abelian_1", 1, QMat::identity(1), false),
        abelian_entry("abelian_2", 2, QMat::identity(2), false),
        abelian_entry("abelian_3", 3, QMat::identity(3), false),
        abelian_entry("abelian_4", 4, QMat::identity(4), false),
        abelian_entry(
            "abelian_2_nilpotent",
            2,
            QMat::from_int_rows(&[&[0, 1], &[0, 0]]),
            true,
        ),
        abelian_entry(
            "abelian_3_nilpotent",
            3,
            QMat::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
            true,
        ),
        e2_entry(),
        heisenberg_entry(),
        heisenberg_scaled_entry(),
        sl2_entry(),
        sl2_plus_sl2_entry(),
        dim4_entry(),
    ]
}

pub fn get(id: &str) -> Result<CatalogueEntry> {
    list_catalogue()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCatalogueId(id.to_string()))
}

/// The rejected non-multiplicative twist candidate on the Heisenberg
/// bracket (x, y fixed, z ↦ 0): kept so the exclusion stays checkable.
pub fn heisenberg_z_killing_twist_candidate() -> QAlgebra {
    QAlgebra::from_brackets(
        "heisenberg3_z_to_zero",
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, ints(&[0, 0, 1]))],
        QMat::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
    )
    .unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKind {
    Identity,
    Nilpotent,
    Diagonal,
    Generic,
}

/// Rejection-sample a multiplicative Hom-Lie structure. Deterministic for
/// a fixed seed; reports budget exhaustion instead of looping forever.
pub fn random_homlie(
    dim: usize,
    bracket_density: f64,
    twist_kind: TwistKind,
    seed: u64,
) -> Result<QAlgebra> {
    if dim > 4 {
        return Err(Error::DimensionMismatch(
            "random_homlie supports dim ≤ 4".to_string(),
        ));
    }
    const BUDGET: usize = 4000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..BUDGET {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                if rng.gen_bool(bracket_density) {
                    let v: Vec<Rat> = (0..dim)
                        .map(|_| {
                            if rng.gen_bool(0.5) {
                                Rat::zero()
                            } else {
                                Rat::from_int(*[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap())
                            }
                        })
                        .collect();
                    entries.push((i, j, v));
                }
            }
        }
        let twist = match twist_kind {
            TwistKind::Identity => QMat::identity(dim),
            TwistKind::Nilpotent => QMat::from_fn(dim, dim, |r, c| {
                if c > r && rng.gen_bool(0.5) {
                    Rat::from_int(1)
                } else {
                    Rat::zero()
                }
            }),
            TwistKind::Diagonal => QMat::from_fn(dim, dim, |r, c| {
                if r == c {
                    Rat::from_int(*[-1, 0, 1, 2].get(rng.gen_range(0..4)).unwrap())
                } else {
                    Rat::zero()
                }
            }),
            TwistKind::Generic => QMat::from_fn(dim, dim, |_, _| {
                Rat::from_int(*[-1, 0, 0, 1].get(rng.gen_range(0..4)).unwrap())
            }),
        };
        let names = (0..dim).map(|i| format!("e{}", i + 1)).collect();
        let candidate =
            QAlgebra::from_brackets(format!("random_{seed}_{attempt}"), names, &entries, twist)?;
        if candidate.verify_axioms().all_pass() {
            return Ok(candidate);
        }
    }
    Err(Error::RejectionBudgetExhausted { attempts: BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_pass_the_axioms() {
        for entry in list_catalogue() {
            assert!(
                entry.algebra.verify_axioms().all_pass(),
                "{} fails the axioms",
                entry.id
            );
        }
    }

    #[test]
    fn lookup_and_unknown_id() {
        let e2 = get("E2").unwrap();
        assert_eq!(e2.algebra.basis_bracket(0, 1), &ints(&[1, 0])[..]);
        assert_eq!(e2.algebra.twist(), &QMat::from_int_rows(&[&[1, 1], &[0, 1]]));
        assert!(matches!(get("nope"), Err(Error::UnknownCatalogueId(_))));
        assert_eq!(get("abelian_1").unwrap().expect_bool("capable"), Some(false));
        assert_eq!(get("sl2").unwrap().expect_int("h2_dim"), Some(0));
    }

    #[test]
    fn first_order_expected_values_hold() {
        for entry in list_catalogue() {
            let a = &entry.algebra;
            if let Some(v) = entry.expect_int("centre_dim") {
                assert_eq!(a.centre().dim() as i64, v, "centre of {}", entry.id);
            }
            if let Some(v) = entry.expect_int("naive_centre_dim") {
                assert_eq!(a.naive_centre().dim() as i64, v, "naive centre of {}", entry.id);
            }
            if let Some(v) = entry.expect_int("derived_dim") {
                assert_eq!(a.derived().dim() as i64, v, "derived of {}", entry.id);
            }
            if let Some(v) = entry.expect_bool("perfect") {
                assert_eq!(a.is_perfect(), v, "perfection of {}", entry.id);
            }
            if let Some(v) = entry.expect_bool("alpha_identity") {
                assert_eq!(a.alpha_identity_check(), v, "α-identity of {}", entry.id);
            }
        }
    }

    #[test]
    fn rejected_heisenberg_twist_is_not_multiplicative() {
        // records why the z ↦ 0 variant is excluded from the catalogue
        let candidate = heisenberg_z_killing_twist_candidate();
        let report = candidate.verify_axioms();
        assert!(report.skew && report.hom_jacobi);
        assert!(!report.multiplicative);
    }

    #[test]
    fn random_dim1_is_abelian() {
        let a = random_homlie(1, 0.8, TwistKind::Generic, 7).unwrap();
        assert!(a.is_abelian());
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let a = random_homlie(3, 0.4, TwistKind::Identity, 42).unwrap();
        let b = random_homlie(3, 0.4, TwistKind::Identity, 42).unwrap();
        assert!(a.same_structure(&b));
        let c = random_homlie(3, 0.4, TwistKind::Identity, 43).unwrap();
        // different seed: almost surely different data; only check validity
        assert!(c.verify_axioms().all_pass());
    }

    #[test]
    fn random_dim2_identity_twist_classification() {
        // 2-dim Lie algebras are abelian or the solvable [e1,e2] = e1 up
        // to isomorphism; the derived dimension separates the two classes.
        for seed in 0..20 {
            let a = random_homlie(2, 0.7, TwistKind::Identity, seed).unwrap();
            assert!(a.derived().dim() <= 1);
        }
    }

    #[test]
    fn random_samples_verify_across_twist_kinds() {
        for (seed, kind) in [
            (1, TwistKind::Identity),
            (2, TwistKind::Nilpotent),
            (3, TwistKind::Diagonal),
            (4, TwistKind::Generic),
        ] {
            let a = random_homlie(3, 0.3, kind, seed).unwrap();
            assert!(a.verify_axioms().all_pass());
        }
    }
}
