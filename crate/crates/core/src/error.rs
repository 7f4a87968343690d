use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input sequence")]
    EmptyInput,
    #[error("{what} must be in {range}, got {got}")]
    OutOfRange {
        what: &'static str,
        range: &'static str,
        got: i64,
    },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("expected {expected} inputs, got {got}")]
    WrongInputCount { expected: usize, got: usize },
    #[error("not a chain map: fails on {input}")]
    NotChainMap { input: String },
    #[error("malformed cube word: {0}")]
    MalformedWord(String),
    #[error("ill-typed formal tree: {0}")]
    IllTyped(String),
    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
