use thiserror::Error;

/// Errors raised by permutation arithmetic and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("permutation must be even")]
    OddPermutation,
}

/// Errors raised while assembling or verifying structures.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("degree {0} out of supported range {1}..={2}")]
    DegreeOutOfRange(usize, usize, usize),
    #[error("{0}")]
    IllegalParams(String),
    #[error("k = {k} exceeds the feasibility cap {cap}")]
    InfeasibleK { k: usize, cap: usize },
    #[error("k = {k} exceeds d_2(A_{n}) = {d2}")]
    ExceedsClassCount { k: usize, n: usize, d2: usize },
    #[error("pool exhausted: requested {requested}, only {available} inequivalent classes available")]
    PoolExhausted { requested: usize, available: usize },
    #[error("search exhausted for {0}")]
    SearchExhausted(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
