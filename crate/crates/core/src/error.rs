use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("entries are not weakly decreasing: {0}")]
    NotMonotone(String),
    #[error("{what} = {length} exceeds the bound {bound}")]
    TooLong {
        what: &'static str,
        length: usize,
        bound: usize,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("constant term must be {expected}, found {found}")]
    BadConstantTerm {
        expected: &'static str,
        found: String,
    },
    #[error("factor for k = {k} is not 1 + O(t^{k})")]
    NonConvergentFactor { k: usize },
    #[error("series is not integer-valued at t^{degree}: {value}")]
    NotIntegral { degree: usize, value: String },
    #[error("negative coefficient at t^{degree}: {value}")]
    Negative { degree: usize, value: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("unsupported case pairing: {0}")]
    UnsupportedPair(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
