use thiserror::Error;

use crate::algebra::Algebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed composition literal `{0}`")]
    MalformedComposition(String),
    #[error("unknown basis token `{0}`")]
    UnknownBasis(String),
    #[error("malformed element literal: {0}")]
    MalformedElement(String),
    #[error("operands live in different algebras ({0} and {1})")]
    CrossAlgebra(Algebra, Algebra),
    #[error("{0} is not a partition")]
    NotPartition(String),
    #[error("near-concatenation needs two nonempty compositions")]
    EmptyOperand,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("transition matrix {0} is singular")]
    Singular(String),
    #[error("inverse of {0} has a non-integral entry")]
    NonIntegral(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
