//! Crate-wide error type. Validation verdicts (window / instance rejections)
//! are separate structured types in `seq`; this enum wraps them for the
//! operations whose preconditions they guard.

use thiserror::Error;

use crate::rat::Rat;
use crate::seq::{InstanceReject, WindowReject};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational")]
    ZeroDenominator,

    #[error("cannot parse {0:?} as a rational (expected \"p/q\" or an integer)")]
    RationalParse(String),

    #[error("invalid curve profile (d={d}, g={g}): violated {constraint}")]
    InvalidProfile { d: i64, g: i64, constraint: &'static str },

    #[error("window rejected: {0}")]
    Window(#[from] WindowReject),

    #[error("instance rejected: {0}")]
    Instance(#[from] InstanceReject),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("sequence too short: need at least {min} entries, got {n}")]
    SequenceTooShort { n: usize, min: usize },

    #[error("sequence length {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("index {i} outside the admissible set [2, {s}] ∪ [{t}, {n}]")]
    IndexOutsideDomain { i: usize, s: usize, t: usize, n: usize },

    #[error("degenerate vertex at index {index}: e_{index} = 0")]
    DegenerateVertex { index: usize },

    #[error("degenerate sequence: every admissible entry is zero")]
    DegenerateSequence,

    #[error("chain-minimum routes disagree: hull gave {hull}, enumeration gave {brute}")]
    OracleMismatch { hull: Rat, brute: Rat },

    #[error("minima must be nondecreasing: violated at index {index}")]
    MinimaNotSorted { index: usize },

    #[error("minima length {got} does not match rank {expected}")]
    MinimaLength { expected: usize, got: usize },

    #[error("multiplier list length {got} does not match window size t-1-s = {expected}")]
    MultiplierLength { expected: usize, got: usize },

    #[error("multiplier n_{index} = {value} exceeds the cap {cap}")]
    MultiplierCap { index: usize, value: i64, cap: i64 },

    #[error("norm at index {index} must be positive")]
    NonPositiveNorm { index: usize },

    #[error("norms must be nonincreasing: violated at index {index}")]
    NormsNotSorted { index: usize },

    #[error("norm list length {got} does not match dimension {expected}")]
    NormLength { expected: usize, got: usize },

    #[error("inflation factor must be at least 1, got {0}")]
    InflationBelowOne(Rat),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}
