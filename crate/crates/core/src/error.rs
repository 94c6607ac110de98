use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("polynomial is not monic of degree >= 1: {0}")]
    NotMonic(String),

    #[error("polynomial {0} is reducible over the prime field, quotient is not a field")]
    Reducible(String),

    #[error("multiplication is not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: String, b: String },

    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: String, b: String, c: String },

    #[error("basis element 0 is not a multiplicative identity: 1*{0} != {0}")]
    NotUnital(String),

    #[error("ring of size {size} exceeds the size cap {cap}")]
    RingTooLarge { size: usize, cap: usize },

    #[error("ideals belong to different rings")]
    MixedRings,

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal lattice exceeds the cap of {cap} ideals")]
    LatticeTooLarge { cap: usize },

    #[error("vdim precondition violated: {0}")]
    Vdim(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown catalog entry `{name}`; available: {available}")]
    UnknownCatalog { name: String, available: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
