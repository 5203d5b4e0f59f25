use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("not a monomial matrix")]
    NotMonomial,
    #[error("{0} is not in the Weyl group of the model")]
    NotInWeylGroup(String),
    #[error("permutation is not block diagonal for the model")]
    NotBlockDiagonal,
    #[error("matrix is not a member of {0}")]
    NotAMember(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("characteristic 2 is not supported here: {0}")]
    CharTwoUnsupported(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("non-canonical rational: {0}")]
    NonCanonicalRational(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
