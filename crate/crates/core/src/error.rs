use thiserror::Error;

use crate::algebra::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("symbol index {0} is not part of the signature")]
    SymbolOutOfRange(usize),

    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("element {element} is outside the universe of size {size}")]
    ElementOutOfRange { element: Element, size: usize },

    #[error("element is not in the carrier")]
    NotInCarrier,

    #[error("table for `{symbol}` has {found} entries, expected {expected}")]
    TableLength {
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("universe size must be at least 1")]
    EmptyUniverse,

    #[error("signatures do not match")]
    SignatureMismatch,

    #[error("{what}: {required} exceeds the limit {limit} (use force to override)")]
    GuardExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("symbol `{0}` is not unary")]
    NotUnary(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),

    #[error("homomorphism map: {0}")]
    InvalidMap(String),

    #[error("extension fill: {0}")]
    InvalidFill(String),

    #[error("unknown catalog algebra `{0}`")]
    UnknownCatalog(String),

    #[error("bad parameters for `{name}`: {message}")]
    BadParams { name: String, message: String },

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("malformed reduction witness: {0}")]
    MalformedWitness(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("rules disagree with the declared fixed points at {0}")]
    HintMismatch(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
