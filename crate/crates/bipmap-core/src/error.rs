use alloc::string::String;

/// Failures reported by the engine. `Structural` means an identity that must
/// hold exactly did not; the message names it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coordinate systems differ")]
    ChartMismatch,
    #[error("coefficient at order {order} requested beyond truncation {trunc}")]
    BeyondTruncation { order: u32, trunc: u32 },
    #[error("substitution has a nonzero constant term")]
    DivergentSubstitution,
    #[error("census size {0} out of range: 1..=7, or up to 8 with --allow-large")]
    CensusRange(usize),
    #[error("unknown Greek variable `{0}`")]
    UnknownGreek(String),
    #[error("expected an odd Laurent polynomial vanishing at s = 1")]
    NotOdd,
    #[error("leading coefficient is not a unit")]
    NotUnit,
    #[error("pole of order {found} exceeds the bound {bound}")]
    PoleBound { found: i32, bound: i32 },
    #[error("logarithmic terms do not cancel: {0}")]
    LogObstruction(String),
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("truncation too low: {0}")]
    InsufficientTruncation(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("structural identity failed: {0}")]
    Structural(String),
}

pub type Result<T> = core::result::Result<T, Error>;
