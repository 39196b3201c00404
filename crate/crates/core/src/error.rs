use thiserror::Error;

/// Errors raised by the library. Every variant names the invariant or
/// precondition that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance outside theorem hypotheses: {0}")]
    OutsideHypotheses(String),

    #[error("invalid exponent tuple: {0}")]
    InvalidTuple(String),

    #[error("exponent tuple {tuple:?} is not admissible for s = {s} (needs first entry 0 and last entry s-1)")]
    NotAdmissible { tuple: Vec<u32>, s: u32 },

    #[error("invalid delta vector: {0}")]
    InvalidDelta(String),

    #[error("h_p denominator p^{denom_exp} exceeds p^(s-1) = p^{max}")]
    InconsistentValue { denom_exp: u32, max: u32 },

    #[error("operation undefined: {0}")]
    Undefined(String),

    #[error("move precondition violated: {0}")]
    MovePrecondition(String),

    #[error("filter {0} refused: its soundness argument needs p >= 3")]
    FilterRefused(&'static str),

    #[error("filtered candidate set is empty")]
    EmptyCandidateSet,

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
