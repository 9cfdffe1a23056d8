use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: u32, actual: u32 },

    #[error("arity {arity} exceeds the limit of {limit} for this operation")]
    ArityTooLarge { arity: u32, limit: u32 },

    #[error("bits set above arity {arity}: {bits:#x}")]
    BitsOutOfRange { arity: u32, bits: u64 },

    #[error("coordinate {index} out of range for arity {arity}")]
    CoordinateOutOfRange { index: u32, arity: u32 },

    #[error("operation requires a truth-table backed function")]
    RequiresTable,

    #[error("oracle-backed function needs an explicit candidate set")]
    CandidatesRequired,

    #[error("oracle-backed function has no memo cache")]
    MissingMemo,

    #[error("function carries no vertex count")]
    NotAGraphFunction,

    #[error("vertex count {n} outside supported range 1..={limit}")]
    VertexCountOutOfRange { n: usize, limit: usize },

    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },

    #[error("invalid edge {{{i}, {j}}} for n = {n}")]
    InvalidEdge { n: usize, i: usize, j: usize },

    #[error("not a permutation of 0..{n}: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },

    #[error("signature {signature} is not a canonical class for n = {n}")]
    ForeignSignature { n: usize, signature: String },

    #[error("function is constant")]
    TrivialFunction,

    #[error("function is not invariant under vertex relabeling")]
    NotAGraphProperty,

    #[error("function is 1 on the empty graph; complement it first")]
    NotNormalized,

    #[error("arithmetic on an infinite value")]
    InfiniteArithmetic,

    #[error("parameter k must be at least 1")]
    ZeroTruncation,

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("graph is not minimal for the function")]
    NotMinimal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
