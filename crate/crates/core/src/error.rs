use thiserror::Error;

use crate::intervals::IntervalId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty instance")]
    EmptyInstance,
    #[error("infeasible ply: target {target} exceeds n = {n}")]
    InfeasiblePly { target: usize, n: usize },
    #[error("invalid generator argument: {0}")]
    InvalidArgument(&'static str),
    #[error("invalid interval {id}: [{left}, {right}]")]
    InvalidInterval { id: IntervalId, left: f64, right: f64 },
    #[error("duplicate interval id {0}")]
    DuplicateId(IntervalId),
    #[error("unknown interval {0}")]
    UnknownInterval(IntervalId),
    #[error("unit length required: interval {id} has length {length}")]
    UnitLengthRequired { id: IntervalId, length: f64 },
    #[error("value {value} of {id} lies outside its interval")]
    ValueOutsideInterval { id: IntervalId, value: f64 },
    #[error("realization does not cover interval {0}")]
    MissingValue(IntervalId),
    #[error("unrealized interval {0}")]
    UnrealizedInterval(IntervalId),
    #[error("exhaustive check refused for m = {0} (limit 8)")]
    ExhaustiveCheckRefused(usize),
    #[error("search refused for m = {0} (limit 4)")]
    SearchRefused(usize),
    #[error("need two intervals")]
    NeedTwoIntervals,
    #[error("need two points")]
    NeedTwoPoints,
    #[error("need two kept intervals")]
    NeedTwoKept,
    #[error("not hidden-sorted: {0}")]
    NotHiddenSorted(String),
    #[error("smoothness violated: {0}")]
    SmoothnessViolated(String),
    #[error("sequence does not match its source set: {0}")]
    SequenceMismatch(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: u64, column: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: u64, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }

    /// True for malformed input files as opposed to contract violations.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io(_) | Error::Json(_))
    }
}
