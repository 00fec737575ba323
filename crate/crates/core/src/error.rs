use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what}: n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("key {0:?} contains a zero letter, which {1} does not allow")]
    ZeroLetterKey(Vec<u32>, &'static str),

    #[error("constant term is not a unit")]
    NonUnitConstant,

    #[error("{0:?} is not a nondecreasing parking function")]
    NotNondecreasingParking(Vec<u32>),

    #[error("{0:?} is not a generalized composition of parking type")]
    NotParkingType(Vec<u32>),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
