use thiserror::Error;

/// Errors reported by the library.
///
/// `Internal` is reserved for invariant violations that should never occur
/// (for example a generated solution failing its own re-verification); the
/// CLI maps it to a distinct exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be at least 1, got 0")]
    ZeroOperand,

    #[error("segment [{lo}, {hi}) is {len} values long, over the block limit of {max}")]
    SegmentTooLong { lo: u64, hi: u64, len: u64, max: u64 },

    #[error("empty segment: lo = {lo} must be strictly below hi = {hi}")]
    EmptySegment { lo: u64, hi: u64 },

    #[error("negative index {index} needs Q in {{-1, 1}}, got Q = {q}")]
    NegativeIndex { index: i64, q: i64 },

    #[error("relation id must lie in 1..=6, got {0}")]
    RelationId(u8),

    #[error("this identity variant requires v = {expected}, got v = {got}")]
    WrongV { expected: i64, got: i64 },

    #[error("need 1 <= r <= n, got r = {r}, n = {n}")]
    RankOutOfRange { r: i64, n: i64 },

    #[error("index {index} is negative after substitution; increase n")]
    IndexUnderflow { index: i64 },

    #[error("D = {d} is a perfect square; x^2 - D*y^2 = +/-4 needs a non-square D")]
    SquareDiscriminant { d: u64 },

    #[error("D = {d} is neither P^2 + 4 nor P^2 - 4 for an admissible P; no solution family applies")]
    UnsupportedShape { d: u64 },

    #[error("right-hand side -4 is only solvable for D = P^2 + 4; D = {d} has the P^2 - 4 shape")]
    MinusFourOnMinusShape { d: u64 },

    #[error("count must be at least 1")]
    ZeroCount,

    #[error("(A, B) = ({a}, {b}) is excluded: {reason}")]
    ExcludedInstance { a: String, b: String, reason: String },

    #[error("invalid argument {flag}: {reason}")]
    InvalidArgument { flag: String, reason: String },

    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
