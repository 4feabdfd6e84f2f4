use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The array does not have `q^n` entries.
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    SymbolOutOfRange {
        symbol: usize,
        q: usize,
    },
    CoordinateOutOfRange {
        position: usize,
        value: usize,
        q: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// `(n, q)` outside the supported desk-scale bound.
    ScaleExceeded {
        n: usize,
        q: usize,
    },
    /// The operation is only defined for a particular order.
    UnsupportedOrder {
        q: usize,
        required: usize,
    },
    ArityMismatch {
        expected: usize,
        found: usize,
    },
    OrderMismatch {
        expected: usize,
        found: usize,
    },
    NotAPermutation,
    NotLatin,
    MalformedTree(String),
    Precondition(&'static str),
    /// The exact search refuses inputs outside its envelope.
    EnvelopeExceeded {
        n: usize,
        q: usize,
    },
    NotSemilinear,
    InvalidTransversal,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { expected, found } => {
                write!(f, "expected {expected} values, found {found}")
            }
            Error::SymbolOutOfRange { symbol, q } => {
                write!(f, "symbol {symbol} out of range for order {q}")
            }
            Error::CoordinateOutOfRange { position, value, q } => {
                write!(
                    f,
                    "coordinate {position} has value {value}, must be below {q}"
                )
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 0..{len}")
            }
            Error::ScaleExceeded { n, q } => {
                write!(f, "arity {n} and order {q} exceed the supported scale")
            }
            Error::UnsupportedOrder { q, required } => {
                write!(
                    f,
                    "order {q} is not supported here, order {required} required"
                )
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::OrderMismatch { expected, found } => {
                write!(f, "order mismatch: expected {expected}, found {found}")
            }
            Error::NotAPermutation => f.write_str("not a permutation"),
            Error::NotLatin => f.write_str("array is not latin"),
            Error::MalformedTree(msg) => write!(f, "malformed composition tree: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::EnvelopeExceeded { n, q } => write!(
                f,
                "arity {n} and order {q} are outside the exact-search envelope"
            ),
            Error::NotSemilinear => f.write_str("hypercube is not standardly semilinear"),
            Error::InvalidTransversal => f.write_str("invalid transversal"),
        }
    }
}

impl core::error::Error for Error {}
