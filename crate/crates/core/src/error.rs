use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("form must be square and symmetric")]
    InvalidForm,

    #[error("invalid Cartan type `{0}`")]
    InvalidCartanType(String),

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("roots must not be proportional (alpha = +/- beta)")]
    ProportionalRoots,

    #[error("Weyl group order exceeds cap {cap}")]
    WeylCapExceeded { cap: usize },

    #[error("invalid Weyl word `{0}`")]
    InvalidWord(String),

    #[error("elements belong to different root systems or algebras")]
    Mismatch,

    #[error("subspace is not contained in the Cartan subalgebra")]
    NotInCartan,

    #[error("subspace is not a Lagrangian subalgebra")]
    NotLagrangian,

    #[error("Lagrangian subalgebra is not coisotropic")]
    NotCoisotropic,

    #[error("coisotropy criteria disagree (splitting: {splitting}, projection: {projection})")]
    CriteriaDisagree { splitting: bool, projection: bool },

    #[error("{0} is not a long root")]
    NotLongRoot(String),

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("malformed subspace specification `{0}`")]
    InvalidSubspaceSpec(String),

    #[error("malformed rational `{0}`")]
    InvalidRational(String),

    #[error("malformed root specification `{0}`")]
    InvalidRootSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
