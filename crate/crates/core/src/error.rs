use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coefficient at exponent {exponent} requested but series is only known below {prec}")]
    BeyondPrecision { exponent: String, prec: String },

    #[error("linear system is singular (rank {rank} < {unknowns} unknowns)")]
    Singular { rank: usize, unknowns: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("integrality violated: {0}")]
    NonIntegral(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("serialization: {0}")]
    Serialization(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
