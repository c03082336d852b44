use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("desk-scale bound exceeded: {what} is {actual}, limit {limit}")]
    Bound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone is not simplicial")]
    NotSimplicial,
    #[error("monoid is not sharp")]
    NotSharp,
    #[error("monoid is not saturated")]
    NotSaturated,
    #[error("groupification has torsion")]
    Torsion,
    #[error("element is not a member of the monoid")]
    NotMember,
    #[error("not a face of the monoid")]
    NotAFace,
    #[error("face must be proper")]
    ImproperFace,
    #[error("monoid must be nonzero")]
    ZeroMonoid,
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("point is not in the support of the fan")]
    NotInSupport,
    #[error("fans have different supports")]
    SupportMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
