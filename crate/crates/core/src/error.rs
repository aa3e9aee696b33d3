use thiserror::Error;

use crate::roots::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("root closure did not terminate after {0} roots (bad Cartan data)")]
    NonTerminating(usize),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different root systems")]
    SystemMismatch,
    #[error("operation needs a classical type, got {0}")]
    TypeMismatch(CartanType),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("group of order {order} exceeds the element budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },
    #[error("window has no peak")]
    NoPeak,
    #[error("star involution not applicable: |position of n| is 1 or n")]
    NotApplicable,
    #[error("window is already a chessboard element")]
    IsChessboard,
    #[error("polynomial variable lists differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("unknown profile `{0}`")]
    UnknownProfile(String),
    #[error("unknown restriction `{0}`")]
    UnknownRestriction(String),
    #[error("profile `{profile}` is not available for {ctype}")]
    UnsupportedProfile { profile: String, ctype: CartanType },
    #[error("restriction `{restriction}` is not available for {ctype}")]
    UnsupportedRestriction {
        restriction: String,
        ctype: CartanType,
    },
    #[error("no closed-form prediction for {0}")]
    NoPrediction(CartanType),
    #[error("{theorem} is stated only for {range}, got n = {n}")]
    OutOfStatedRange {
        theorem: String,
        range: String,
        n: usize,
    },
    #[error("checkpoint is corrupt: {0}")]
    CheckpointCorrupt(String),
    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),
    #[error("part {part} failed twice: {message}")]
    WorkerFailure { part: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
