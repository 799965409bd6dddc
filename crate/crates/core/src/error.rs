use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: u64 },
    #[error("generators do not share one realization: {0}")]
    IncompatibleGenerators(String),
    #[error("matrix generator is singular: {0}")]
    SingularMatrix(String),
    #[error("unsupported modulus {0}")]
    UnsupportedModulus(u64),
    #[error("index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),
    #[error("character sum is not a nonnegative integer: {0}")]
    NonIntegerResult(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
