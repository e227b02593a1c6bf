use thiserror::Error;

/// Errors surfaced by the public operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable partition must contain at least one variable")]
    EmptyPartition,
    #[error("variable labels must be pairwise distinct: `{0}` repeats")]
    DuplicateLabel(String),
    #[error("monomial does not match the variable partition ({expected_m} x / {expected_n} y variables)")]
    MixedPartition { expected_m: usize, expected_n: usize },
    #[error("exponent index {index} out of range for axis with {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation requires a squarefree monomial ideal")]
    NotSquarefree,
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("face is not a subset of the y-vertex set W")]
    NotSubsetOfW,
    #[error("negative entry where a nonnegative exponent vector is required")]
    NegativeExponent,
    #[error("face family is not closed under subsets")]
    NotDownwardClosed,
    #[error("too many vertices for explicit face enumeration ({0} > 24)")]
    TooManyVertices(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("degree vector has wrong length (expected {expected}, got {got})")]
    DegreeLength { expected: usize, got: usize },
    #[error("series has an unsupported factor for this operation: {0}")]
    UnsupportedSeries(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
