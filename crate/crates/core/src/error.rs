use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a weight needs at least one entry")]
    EmptyWeight,

    #[error("transposition index {index} out of range for a weight of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0:?} is not a partition (parts must be non-increasing and non-negative)")]
    NotPartition(Vec<i64>),

    #[error("partition {parts:?} has {rows} nonzero rows but the ambient rank is {max}")]
    TooManyRows {
        parts: Vec<i64>,
        rows: usize,
        max: usize,
    },

    #[error("weight {0} is not non-increasing")]
    NotDominant(Weight),

    #[error("expected a weight of length {expected}, got length {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid Grassmannian G({k},{n}): need 1 <= k <= n-1")]
    InvalidContext { k: usize, n: usize },

    #[error("the collection must contain at least one weight")]
    EmptyCollection,

    #[error(
        "tensor product of {left} and {right} lost dimension: expected {expected}, got {found}"
    )]
    DimensionMismatch {
        left: Weight,
        right: Weight,
        expected: String,
        found: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
