//! Exact computer algebra for finite-dimensional multiplicative Hom-Lie
//! algebras over ℚ.
//!
//! The crate builds and verifies Hom-Lie structures, Hom-actions and
//! crossed modules, computes non-abelian tensor and exterior products,
//! homology of the twisted exterior complex, tensor/exterior centres, and
//! capability verdicts. All arithmetic is exact rational arithmetic; every
//! structural check is decidable equality, never a tolerance.
//!
//! The math layers are generic over the [`scalar::Scalar`] field; the
//! shipped instantiation is ℚ via the `Q*` aliases below.

pub mod action;
pub mod algebra;
pub mod capability;
pub mod catalogue;
pub mod error;
pub mod homology;
pub mod matrix;
pub mod scalar;
pub mod subspace;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{format_rat, parse_rat, Rat, Scalar};

/// Concrete instantiations over ℚ, the only field the toolkit ships.
pub type QMatrix = matrix::Matrix<Rat>;
pub type QSubspace = subspace::Subspace<Rat>;
pub type QQuotientSpace = subspace::QuotientSpace<Rat>;
pub type QHomLie = algebra::HomLieAlgebra<Rat>;
pub type QHomomorphism = algebra::Homomorphism<Rat>;
pub type QAction = action::HomAction<Rat>;
pub type QCrossedModule = action::CrossedModule<Rat>;
pub type QTensorProduct = tensor::TensorProduct<Rat>;
pub type QExteriorProduct = tensor::ExteriorProduct<Rat>;
