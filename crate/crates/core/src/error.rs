use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{partition} is not {h}-strict")]
    NotHStrict { partition: String, h: usize },

    #[error("{partition} is not a {modulus}-core")]
    NotCore { partition: String, modulus: usize },

    #[error("{partition} is not a {h}-bar-core")]
    NotBarCore { partition: String, h: usize },

    #[error("{partition} is not restricted for modulus {modulus}")]
    NotRestricted { partition: String, modulus: usize },

    #[error("{partition} is not {w}-Rouquier for modulus {modulus}")]
    NotRouquier { partition: String, w: usize, modulus: usize },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("outside the domain of {map}: {detail}")]
    Domain { map: &'static str, detail: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("canonical basis construction failed: {0}")]
    CanonicalBasis(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
