use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(
        "defect count mismatch: top has {top}, bottom has {bottom}, label sequence has {labels}"
    )]
    DefectMismatch {
        top: usize,
        bottom: usize,
        labels: usize,
    },
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("algebra is not a Verlinde algebra")]
    NotVerlinde,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget {
        what: String,
        needed: u128,
        cap: u128,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
