use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {0} is negative")]
    NegativeIndex(i64),

    #[error("sequence order p must be at least 1 (got {0})")]
    InvalidOrder(u32),

    #[error("the Francois sequence is only defined for p = 1 (got p = {0})")]
    FrancoisOrder(u32),

    #[error("invalid index range {start}..{end}")]
    InvertedRange { start: i64, end: i64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("modulus must be at least 2 (got {0})")]
    ModulusTooSmall(u64),

    #[error("algebra parameters a and b must be nonzero")]
    ZeroParameter,

    #[error("operands belong to different quaternion algebras")]
    AlgebraMismatch,

    #[error("zero divisors and inverses are only defined over a prime field here")]
    NotFiniteField,

    #[error("quaternion has norm zero and is not invertible")]
    NotInvertible,

    #[error("{0}")]
    Domain(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
