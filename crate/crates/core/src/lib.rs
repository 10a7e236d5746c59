// SPDX-License-Identifier: MIT OR Apache-2.0

#![forbid(unsafe_code)]

//! Rand Index computation for change-point segmentations.
//!
//! A segmentation of `1..=N` into contiguous clusters is fully described by
//! its interior change-points. For two such segmentations with `r` and `s`
//! change-points, [`rand_index_cpd`] computes the Rand Index in O(r+s) time
//! and constant auxiliary space, without materializing a contingency table.
//! Two independent routes to the same quantity are provided as cross-checks:
//! [`rand_index_contingency`] evaluates the classical O(rs+N) contingency
//! formula, and [`rand_index_pairwise`] evaluates the O(N²) definition over
//! all index pairs.
//!
//! All three routes return exact integer disagreement counts; the floating
//! quotient is derived at the end, so results can be compared for equality
//! without a float tolerance.
//!
//! ```
//! use ricpd_core::{rand_index_cpd, ChangePointSet};
//!
//! let detected = ChangePointSet::new(10, vec![3, 8])?;
//! let truth = ChangePointSet::new(10, vec![5])?;
//! let ri = rand_index_cpd(&detected, &truth)?;
//! assert_eq!(ri.disagreements(), 18);
//! assert_eq!(ri.total_pairs(), 45);
//! assert_eq!(ri.value(), 0.6);
//! # Ok::<(), ricpd_core::Error>(())
//! ```

pub mod bench;
mod error;
mod metrics;
mod segmentation;

pub use error::{Error, Result};
pub use metrics::{
    contingency_table, disagreement_sum, overlap_count, rand_index_contingency, rand_index_cpd,
    rand_index_pairwise, ContingencyTable, IterationStats, RandIndexResult,
};
pub use segmentation::{ChangePointSet, LabelVector, Partition, MAX_SERIES_LEN};
