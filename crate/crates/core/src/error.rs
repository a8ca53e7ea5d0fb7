use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("invalid window {0:?}")]
    InvalidWindow(Vec<i64>),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("word {0:?} does not end in s0")]
    MissingFinalS0(Vec<usize>),

    #[error("variable environments differ")]
    EnvMismatch,

    #[error("exponent {exp} of {var} is not below {bound}")]
    ExponentTooLarge { var: String, exp: u32, bound: u32 },

    #[error("leading coefficient of generator {0} is not a unit")]
    NonUnitLeading(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,

    #[error("pipeline size m = {m} exceeds the limit {limit}")]
    TooLarge { m: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
