use thiserror::Error;

/// Errors surfaced by the library.
///
/// Everything here is a *structural* failure (wrong shapes, violated
/// preconditions, capped enumerations). Mathematical verdicts — axiom
/// failures, non-exact sequences — are reported through the report types,
/// not through this enum, except where an internal consistency audit fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("subspace is not twist-invariant: {0}")]
    NotTwistInvariant(String),

    #[error("map is not an endomorphism: {0}")]
    NotAnEndomorphism(String),

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("map is not surjective: {0}")]
    NotSurjective(String),

    #[error("action axioms fail: {0}")]
    InvalidAction(String),

    #[error("actions are not compatible: {0}")]
    IncompatibleActions(String),

    #[error("crossed-module conditions fail: {0}")]
    NotACrossedModule(String),

    #[error("algebra does not satisfy the alpha-identity condition: {0}")]
    AlphaIdentityFails(String),

    #[error("algebra is not perfect: {0}")]
    NotPerfect(String),

    #[error("well-definedness audit failed: {0}")]
    AuditFailure(String),

    #[error("enumeration cap exceeded: factor dimension {dim} > cap {cap}")]
    EnumerationCapExceeded { dim: usize, cap: usize },

    #[error("degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("rejection budget exhausted after {attempts} attempts")]
    RejectionBudgetExhausted { attempts: usize },

    #[error("unknown catalogue id: {0}")]
    UnknownCatalogueId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
