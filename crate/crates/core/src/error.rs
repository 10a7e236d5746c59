// SPDX-License-Identifier: MIT OR Apache-2.0

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Validation and computation errors.
///
/// Every variant names the offending field and value so callers can report
/// actionable messages without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Rand Index over C(n,2) pairs needs at least one pair.
    #[error("series length n must be at least 2, got {n}")]
    SeriesTooShort { n: u64 },

    /// Lengths above 2^31-1 would overflow the exact pair count.
    #[error("series length n must be at most {max}, got {n}")]
    SeriesTooLarge { n: u64, max: u64 },

    /// Interior change-points live in `1..=n-1`; the endpoints 0 and n are
    /// implied and never stored.
    #[error("change-point {point} is outside the valid range 1..={} for series length {n}", .n - 1)]
    PointOutOfRange { point: u64, n: u64 },

    #[error("change-points must be strictly increasing, got {prev} followed by {next}")]
    PointsNotIncreasing { prev: u64, next: u64 },

    #[error("label vector must contain at least 2 labels, got {len}")]
    TooFewLabels { len: usize },

    /// A label that reappears after a different label describes clusters
    /// that are not contiguous, which has no change-point representation.
    #[error("label {label} reappears at position {position} after a different label; clusters must be contiguous")]
    NonContiguousLabels { label: i64, position: usize },

    #[error("series lengths differ: {left} vs {right}")]
    SeriesLengthMismatch { left: u64, right: u64 },

    #[error("segment index ({i}, {j}) is outside the {rows}x{cols} segment grid")]
    SegmentIndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("cannot place {k} distinct change-points in a series of length {n}; at most {} fit", .n - 1)]
    TooManyChangePoints { k: usize, n: u64 },

    #[error("benchmark trials must be at least 1")]
    ZeroTrials,

    #[error("benchmark size sweep must not be empty")]
    EmptySizes,

    #[error("baseline cutoff {cutoff} exceeds the largest sweep size {max_size}")]
    BaselineCutoffBeyondSizes { cutoff: usize, max_size: usize },
}
