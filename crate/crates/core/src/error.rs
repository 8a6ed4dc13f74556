use alloc::string::String;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements live over different index universes")]
    UniverseMismatch,
    #[error("generator order is not a permutation of the matrix units")]
    BadOrder,
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
    #[error("tensor factor counts differ: {0} vs {1}")]
    FactorMismatch(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix does not preserve the even/odd block split")]
    NotEven,
}

/// Errors raised when building or querying a colored rectangle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RectangleError {
    #[error("sequence {seq:?} must contain {m} delta and {n} epsilon symbols")]
    MalformedSequence { seq: String, m: usize, n: usize },
    #[error("unknown symbol {0:?} in epsilon-delta sequence (use d/e)")]
    BadSymbol(char),
    #[error("rectangle is too large for the dense generator tables")]
    TooLarge,
    #[error("row {row} or column {col} outside the rectangle")]
    OutOfRange { row: usize, col: usize },
    #[error("the PBW order does not place every m-generator after every p-generator")]
    OrderNotMLast,
    #[error("element is not in m")]
    NotInM,
    #[error("element is not in U(p)")]
    NotInP,
    #[error("this check requires level 2, got {0}")]
    NeedsLevelTwo(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
