use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("zero vector has no canonical ray")]
    ZeroVector,

    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("not a representation pair: negative slack at ({row}, {col})")]
    NotRepresentationPair { row: usize, col: usize },

    #[error("point {point} violates inequality {inequality}")]
    NotContained { point: usize, inequality: usize },

    #[error("polyhedron is empty")]
    Empty,

    #[error("origin is not an interior point")]
    OriginNotInterior,

    #[error("rank {rank} is below 2")]
    RankTooSmall { rank: usize },

    #[error("matrix is not a slack matrix of a cone")]
    NotConeSlack,

    #[error("matrix is not a slack matrix of a polytope")]
    NotPolytopeSlack,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("factorization does not reproduce the matrix")]
    BadFactorization,
}
