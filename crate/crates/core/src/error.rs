use thiserror::Error;

/// Errors raised by the library. Counting paths never fail on
/// out-of-range arguments inside sums; these are for malformed inputs
/// and refused work.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {parts:?}: parts must be weakly decreasing")]
    InvalidPartition { parts: Vec<i64> },

    #[error("invalid skew shape: inner {inner:?} is not contained in outer {outer:?}")]
    InvalidSkewShape { outer: Vec<usize>, inner: Vec<usize> },

    #[error("shape has {cells} cells, brute force is limited to {limit}")]
    TooManyCells { cells: usize, limit: usize },

    #[error("invalid type vector {m:?}: {reason}")]
    InvalidTypeVector { m: Vec<i64>, reason: String },

    #[error("invalid placement: {0}")]
    InvalidPlacement(String),

    #[error("invalid multiline queue: {0}")]
    InvalidQueue(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(
        "refusing to enumerate: N = {total} exceeds the guard {guard} \
         (about {placements} placements)"
    )]
    GuardExceeded {
        total: usize,
        guard: usize,
        placements: String,
    },

    #[error("{op}: arguments {args:?} are outside the domain ({reason})")]
    Domain {
        op: &'static str,
        args: Vec<i64>,
        reason: &'static str,
    },

    #[error("unknown formula identifier `{0}`")]
    UnknownFormula(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, args: &[i64], reason: &'static str) -> Error {
    Error::Domain {
        op,
        args: args.to_vec(),
        reason,
    }
}
