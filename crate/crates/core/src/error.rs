use thiserror::Error;

/// Errors produced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set must be non-empty")]
    EmptyPointSet,

    #[error("mixed arities in point set: expected {expected}, found {found}")]
    MixedArity { expected: usize, found: usize },

    #[error("down-set enumeration would exceed the cap of {cap} points")]
    EnumerationCap { cap: u64 },

    #[error("factor size {small} must not exceed the largest factor size {large}")]
    FactorTooLarge { small: u32, large: u32 },

    #[error("parameters must be positive and ascending")]
    BadParameters,

    #[error("band count {bands} does not match private block count {blocks}")]
    BandMismatch { bands: usize, blocks: usize },

    #[error("half-space row has {found} coefficients, expected {expected}")]
    RowLength { expected: usize, found: usize },

    #[error("volume oracle supports dimension <= {max}, got {got}")]
    DimensionCap { max: usize, got: usize },

    #[error("polytope could not be verified bounded")]
    Unbounded,

    #[error(
        "subset search over {size} generators exceeds the cap of {cap}; \
         use the closed form or the upper bound instead"
    )]
    SubsetCap { size: u64, cap: u32 },

    #[error("not an O-sequence: violation at index {index}")]
    InvalidOSequence { index: usize },

    #[error("O-sequence levels must be positive for the ratio comparison")]
    NonPositiveLevel,

    #[error("h_1 = {h1} exceeds n + 1 = {bound}")]
    FirstLevelTooLarge { h1: u64, bound: u64 },
}
