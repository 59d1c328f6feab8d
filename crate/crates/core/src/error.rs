use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Verdicts (levelable or not) are
/// never errors; these are malformed inputs or exhausted resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("more than {cap} maximal independent sets")]
    TooManySets { cap: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight at vertex {0} is not positive")]
    NonPositiveWeight(usize),

    #[error("maximal independent sets {first:?} (sum {first_sum}) and {second:?} (sum {second_sum}) differ")]
    UnequalSums {
        first: Vec<usize>,
        first_sum: u64,
        second: Vec<usize>,
        second_sum: u64,
    },

    #[error("empty family of maximal independent sets")]
    EmptyFamily,

    #[error("simplex exceeded {0} pivots")]
    LpIterationCap(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("exponent at index {index} is {value}; every exponent must be at least 2")]
    InvalidExponent { index: usize, value: u32 },

    #[error("monomial enumeration needs {needed} candidate tuples, cap is {cap}")]
    MonomialCap { needed: u128, cap: u128 },

    #[error("integer weight does not fit in 64 bits")]
    WeightOverflow,

    #[error("{0}")]
    InvalidConstruction(String),
}

impl Error {
    /// Short machine-readable tag, used by the CLI's error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::InvalidFamily(_) => "invalid_family",
            Error::TooManySets { .. } => "too_many_sets",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::NonPositiveWeight(_) => "non_positive_weight",
            Error::UnequalSums { .. } => "unequal_sums",
            Error::EmptyFamily => "empty_family",
            Error::LpIterationCap(_) => "lp_iteration_cap",
            Error::NotATree => "not_a_tree",
            Error::InvalidExponent { .. } => "invalid_exponent",
            Error::MonomialCap { .. } => "monomial_cap",
            Error::WeightOverflow => "weight_overflow",
            Error::InvalidConstruction(_) => "invalid_construction",
        }
    }
}
