use thiserror::Error;

/// Errors raised by the finite-model toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier mismatch: {context} (expected size {expected}, found {found})")]
    CarrierMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("carrier size {size} exceeds the configured bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("equivalence relation is not compatible with operation `{op}` at {args:?}")]
    IncompatibleCongruence { op: String, args: Vec<usize> },

    #[error("relation is not an equivalence relation: {0}")]
    NotEquivalence(String),

    #[error("connector table is incomplete: missing value at {0:?}")]
    IncompleteTable((usize, usize, usize)),

    #[error("invalid connector: {0}")]
    InvalidConnector(String),

    #[error("double relation is not centralizing: {0}")]
    NotCentralizing(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("kernels are not compatible with the graph structure: {0}")]
    IncompatibleKernels(String),

    #[error("square does not commute: {0}")]
    NonCommutingSquare(String),

    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, size: usize) -> Result<()> {
    if index < size {
        Ok(())
    } else {
        Err(Error::OutOfRange { index, size })
    }
}

pub(crate) fn check_size(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::CarrierMismatch {
            context,
            expected,
            found,
        })
    }
}
