//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Cartan type / rank combination that is not implemented.
    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    /// A simple-reflection index outside `1..=rank`.
    #[error("reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Two elements from different root systems were combined.
    #[error("elements belong to different root systems")]
    MixedRootSystems,

    /// An interval operation was requested for a pair with u not <= v.
    #[error("elements are not comparable in the Bruhat order")]
    NotComparable,

    /// A z -> infinity limit does not exist (numerator degree too large).
    #[error("no limit: numerator degree exceeds denominator degree")]
    NoLimit,

    /// A modular sample point makes a required denominator vanish.
    #[error("bad modular sample: a denominator factor vanishes")]
    BadSample,

    /// An operation that requires a simply-laced root system was called on
    /// one with roots of different lengths.
    #[error("operation requires a simply-laced root system")]
    NotSimplyLaced,
}
