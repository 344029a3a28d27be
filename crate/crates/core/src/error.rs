use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    LetterOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("orbit size exceeds cap {cap}")]
    OrbitCapExceeded { cap: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("weight {weight} is not a character of the isogeny form {form}")]
    NotACharacter { weight: String, form: String },

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("no self-dual representative found for class {class} within bound {bound}")]
    NoSelfDualRepresentative { class: String, bound: i64 },

    #[error("dimension {dim} exceeds the configured bound {bound}")]
    DimensionBoundExceeded { dim: String, bound: u64 },

    #[error("descriptor outside class S: {0}")]
    NotClassS(String),

    #[error("invalid quadratic field discriminant {0}")]
    InvalidDiscriminant(i64),

    #[error("malformed module: {0}")]
    MalformedModule(String),

    #[error("malformed endomorphism algebra: {0}")]
    MalformedAlgebra(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("inconsistent multiplicity data: {0}")]
    InconsistentMultiplicity(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("corrupt data file {file}: {reason}")]
    CorruptData { file: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
