use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("t = {0} is outside the supported range 3..=29")]
    TOutOfRange(i64),
    #[error("linkage violated: m(t+1) = {lhs} but n + s - 1 = {rhs}")]
    Linkage { lhs: i64, rhs: i64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T, E = SearchError> = std::result::Result<T, E>;
