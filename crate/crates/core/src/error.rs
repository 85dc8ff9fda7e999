//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by construction, validation and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no leading generator of zero")]
    ZeroVector,

    #[error("generator index {index} out of range for ambient of size {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("mismatched generator sets: left has {left} generators, right has {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),

    #[error("invalid scalar `{0}`: expected `p` or `p/q` with nonzero q")]
    InvalidScalar(String),

    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error(
        "reduction-matrix condition {condition} violated at row {row}, column {col}: {detail}"
    )]
    MatrixCondition {
        condition: u8,
        row: usize,
        col: usize,
        detail: String,
    },

    #[error("image of generator {generator} is not strictly smaller: its support contains {offending}")]
    ImageNotSmaller { generator: usize, offending: usize },

    #[error("image of generator {generator} touches non-reduced generator {offending}")]
    ImageNotReduced { generator: usize, offending: usize },

    #[error("operator is not idempotent at generator {0}")]
    NotIdempotent(usize),

    #[error("family must be nonempty")]
    EmptyFamily,

    #[error("pair not confluent; dual braided products disagree")]
    PairNotConfluent,

    #[error("alternating product did not stabilise within {cap} steps")]
    StepCapExceeded { cap: usize },

    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(char),

    #[error("letter `{0}` is not in the alphabet")]
    ForeignLetter(char),

    #[error("rule `{lhs}` is mis-oriented: `{word}` is not smaller than `{lhs}` in deglex")]
    MisorientedRule { lhs: String, word: String },

    #[error("degree bound {bound} is smaller than the degree {needed} of rule `{lhs}`")]
    DegreeBoundTooSmall {
        bound: usize,
        needed: usize,
        lhs: String,
    },

    #[error("monomial `{word}` exceeds the degree bound {bound}")]
    DegreeOverflow { word: String, bound: usize },

    #[error("completion did not stabilise within {cap} rounds")]
    CompletionCapExceeded { cap: usize },

    #[error("order relation has a cycle through generator {0}")]
    OrderCycle(usize),

    #[error("family not completable; confluence undefined")]
    NotCompletable,

    #[error("instance too large: {got} generators exceeds the bound {bound}")]
    TooLarge { got: usize, bound: usize },

    #[error("operator file must contain exactly one of `matrix` or `kernel`")]
    AmbiguousOperatorForm,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
