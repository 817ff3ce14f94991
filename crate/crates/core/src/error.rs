use thiserror::Error;

/// Everything that can go wrong inside the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension {0} out of range (supported: 1..=16)")]
    DimOutOfRange(usize),

    #[error("mixed algebra dimensions: {0} vs {1}")]
    DimMismatch(u8, u8),

    #[error("generator index {index} out of range for dimension {dim}")]
    BadGenerator { index: usize, dim: u8 },

    #[error("blade indices must be strictly ascending")]
    UnsortedIndices,

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: u8 },

    #[error("operation requires the exact rational scalar mode")]
    ExactScalarRequired,

    #[error("cochain must map the unit blade to 1")]
    CochainUnitNotOne,

    #[error("bracket needs at least one factor")]
    EmptyBracket,

    #[error("matrix must be {dim}x{dim}")]
    BadMatrixShape { dim: u8 },
}
