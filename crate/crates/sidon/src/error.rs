//! Error types shared by the set, representation, and checker modules.

use thiserror::Error;

/// Contract violations in the combinatorial core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("fold order h must be at least 1")]
    ZeroFold,
    #[error("multiplicity bound g must be at least 1")]
    ZeroBound,
    #[error("h*n = {h}*{n} does not fit in 64-bit sums")]
    SumOverflow { h: u32, n: u64 },
    #[error("element {element} lies outside the universe [1, {universe}]")]
    ElementOutOfRange { element: u64, universe: u64 },
    #[error("pushed element {element} must exceed the current maximum {current_max}")]
    NonIncreasingPush { element: u64, current_max: u64 },
    #[error("pop on an empty checker")]
    EmptyPop,
    #[error("compositions require 1 <= r <= h, got r={r}, h={h}")]
    CompositionRange { h: u32, r: u32 },
    #[error("malformed representation: {0}")]
    MalformedRepresentation(String),
    #[error("malformed triple: {0}")]
    MalformedTriple(String),
}
