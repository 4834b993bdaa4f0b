use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size {0}: a permutation needs at least one element")]
    InvalidSize(usize),
    #[error("not a bijection of 1..={m}: {detail}")]
    NotBijection { m: usize, detail: String },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("value {value} out of range 1..={m}")]
    OutOfRange { value: usize, m: usize },
    #[error("repeated value {0} in cycle")]
    RepeatedValue(usize),
    #[error("invalid transposition ({0} {1})")]
    DegenerateTransposition(usize, usize),
    #[error("cache size {c} out of range 1..={m}")]
    CacheSize { c: usize, m: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("m = {m} exceeds the cap of {cap} for this operation")]
    CapExceeded { m: usize, cap: usize },
    #[error("constraint ({0}, {1}) relates an element to itself")]
    SelfConstraint(usize, usize),
    #[error("constraints are cyclic; no re-traversal satisfies them")]
    CyclicConstraints,
    #[error("starting permutation {0} violates the feasibility constraints")]
    InfeasibleStart(String),
    #[error("invalid labeling parameters: {0}")]
    Scheme(String),
    #[error("{src} -> {dst} is not a covering edge")]
    NotCover { src: String, dst: String },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
