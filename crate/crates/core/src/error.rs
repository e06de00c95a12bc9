use thiserror::Error;

/// Errors raised by constructors, predicates with preconditions and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value violates a structural invariant of its type.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Two objects of different rank were combined.
    #[error("rank mismatch: expected n={expected}, found n={found}")]
    RankMismatch { expected: usize, found: usize },

    /// An index fell outside the range where the quantity is defined.
    #[error("index out of range: {0}")]
    Range(String),

    /// An input lies outside the domain of a map (e.g. negative pattern entries).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Integrating a derived array did not reproduce the prescribed border.
    #[error(
        "reconstruction mismatch at h[{a},{b}]: integrated {found}, border requires {expected}"
    )]
    Reconstruction {
        a: usize,
        b: usize,
        expected: i64,
        found: i64,
    },

    /// Boundary data is inconsistent (e.g. |lambda| != |mu| + |nu|).
    #[error("inconsistent boundary: {0}")]
    Inconsistent(String),

    /// Integer arithmetic left the supported range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// Input polynomial is not symmetric in its variables.
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    /// Schur-basis elimination produced a negative coefficient.
    #[error("polynomial is not Schur-positive: coefficient {coefficient} at {partition:?}")]
    NotSchurPositive {
        partition: Vec<i64>,
        coefficient: i64,
    },

    /// Malformed JSON or other parse failure.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
