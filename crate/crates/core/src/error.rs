use thiserror::Error;

use crate::braid::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a half-integer exponent where an integer power of t is required")]
    HalfIntegerExponent,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("invalid polynomial text at byte {position}: {message}")]
    PolyParse { position: usize, message: String },
    #[error(transparent)]
    BraidParse(#[from] ParseError),
    #[error("exponent sum {0} is odd, so the closure is not a knot")]
    OddExponentSum(i64),
    #[error("closure has {0} components, not a knot")]
    NotAKnot(u8),
    #[error("torus knot parameters ({p}, {q}) are not coprime nonzero integers")]
    TorusParameters { p: i64, q: i64 },
    #[error("coefficient closed forms need p > 1 and q > 1 (got p = {p}, q = {q})")]
    OutsideHypotheses { p: u64, q: u64 },
    #[error("syllable exponents must be positive")]
    NonPositiveSyllable,
    #[error("coefficient window of width {0} is too narrow (need at least 3)")]
    WindowTooNarrow(usize),
}
