use thiserror::Error;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no leading term")]
    NoLeadingTerm,
    #[error("no branch: polynomial does not depend on y")]
    NoBranch,
    #[error("insufficient precision at term limit {term_limit}; retry with {suggested}")]
    InsufficientPrecision { term_limit: usize, suggested: usize },
    #[error("non-rational branch: characteristic equation has irrational real roots")]
    NonRationalBranch,
    #[error("degenerate tentacle: both boundaries define the same branch")]
    DegenerateTentacle,
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("{target} is not representable in the value group")]
    NotRepresentable { target: Rat },
    #[error("degenerate region: boundary constants coincide")]
    DegenerateRegion,
    #[error("bound too small: extreme ray needs coordinate {needed}, search bound is {bound}")]
    BoundTooSmall { needed: u64, bound: u64 },
    #[error("degenerate sample: polynomial vanishes on every sampled point")]
    DegenerateSample,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
