use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {dim} (supported here: {supported})")]
    UnsupportedDimension { dim: usize, supported: &'static str },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("the zero vector has no direction")]
    ZeroVector,

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: i64 },

    #[error("empty point set")]
    Empty,

    #[error("polytope is not full-dimensional (ambient dimension {dim}, affine dimension {affine_dim})")]
    Degenerate { dim: usize, affine_dim: usize },

    #[error("candidate pool exceeds the limit of {limit} vectors; raise the pool limit to continue")]
    ResourceLimit { limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
