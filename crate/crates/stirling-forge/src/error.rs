use thiserror::Error;

/// Error type shared by the whole crate. Every variant is a rejected
/// precondition; internal invariant violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} needs a nonempty sequence")]
    EmptySequence(&'static str),
    #[error("hockey stick sum needs k <= n, got n = {n}, k = {k}")]
    HockeyStick { n: usize, k: usize },
    #[error("set partition enumeration is capped at m <= {limit}, got m = {m}")]
    EnumerationLimit { m: usize, limit: usize },
    #[error("tables are capped at max_m <= {limit}, got max_m = {max_m}")]
    TableLimit { max_m: usize, limit: usize },
    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientIndex { index: usize, order: usize },
    #[error("{op} needs a zero constant term")]
    ConstantTermNotZero { op: &'static str },
    #[error("{op} needs a nonzero constant term")]
    ConstantTermZero { op: &'static str },
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
