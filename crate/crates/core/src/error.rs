use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc {0}->{1} joins two vertices of the same colour class")]
    SameClassArc(Vertex, Vertex),
    #[error("vertex {0} out of range")]
    IndexOutOfRange(Vertex),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("colour classes must have equal size (got {a} and {b})")]
    UnbalancedInput { a: usize, b: usize },
    #[error("not a Hall violator: {0}")]
    NotAViolator(String),
    #[error("no unforbidden vertex left to grow a path from")]
    EmptyRegion,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("path and cycle share vertex {0}")]
    NotDisjoint(Vertex),
    #[error("no move applies, cycle of length {cycle_len} does not span, and no witness exists")]
    TheoremViolation { cycle_len: usize },
    #[error("no complete matching from X to Y exists")]
    MatchingAbsent,
    #[error("bad cycle length {length} for classes of size {a} and {b}")]
    BadLength { length: usize, a: usize, b: usize },
    #[error("instance space 2^{bits} is too large to enumerate")]
    TooLarge { bits: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("internal error: {0}")]
    Internal(String),
}
