//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by group algebra, class bookkeeping and trace computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator index fell outside `1..=rank`.
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i64, rank: usize },

    /// Two values from different groups were combined.
    #[error("descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },

    /// A group rank of zero was requested.
    #[error("group rank must be at least 1")]
    InvalidRank,

    /// Generator images do not define a homomorphism of the stated shape.
    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),

    /// Trace of a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    /// Matrix dimensions do not match the operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// det(g.A - f.A) = 0: the coincidence set is not isolated.
    #[error("singular difference matrix: coincidence points are not isolated")]
    SingularDifference,

    /// A point claimed as a coincidence point fails the defining congruence.
    #[error("not a coincidence point of the given pair")]
    NotACoincidencePoint,

    /// Internal consistency failure: g̃(x̃) - f̃(x̃) was not an integer vector
    /// at a genuine coincidence point.
    #[error("non-integer translation at a coincidence point (internal inconsistency)")]
    NonIntegerTranslation,

    /// A preferred-lift translation vector had an entry outside [0, 1).
    #[error("translation entry {entry} outside [0,1)")]
    InvalidTranslation { entry: String },

    /// A region referenced a coincidence point id that does not exist.
    #[error("region references unknown coincidence point id {0}")]
    UnknownPointId(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
