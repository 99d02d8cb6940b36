use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime below 65536")]
    InvalidModulus(u32),

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring contexts differ")]
    ContextMismatch,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator `{0}` has a nonzero constant term")]
    ConstantTerm(String),

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("generator #{index} `{generator}` is redundant")]
    RedundantGenerator { index: usize, generator: String },

    #[error("element `{element}` is not regular: `{witness}` is outside the ideal but its product with the element lies inside")]
    NotRegular { element: String, witness: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration bound {bound} too large (about {estimate} ideals); the limit is 7")]
    BoundTooLarge { bound: u32, estimate: u64 },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}
