// SPDX-License-Identifier: MIT OR Apache-2.0

//! The three Rand Index computations.
//!
//! * [`rand_index_cpd`] — walks the two boundary sequences with a resumable
//!   inner loop; O(r+s) time, no auxiliary allocation.
//! * [`rand_index_contingency`] — the classical formula over a contingency
//!   table built by a full O(n) pass; O(rs+n) time, O(rs) memory. Kept
//!   deliberately naive as the baseline.
//! * [`rand_index_pairwise`] — the O(n²) definition over all index pairs,
//!   used as ground truth. Accepts arbitrary (even non-contiguous) labels.
//!
//! All routes produce identical exact integers for the same inputs.

use crate::error::{Error, Result};
use crate::segmentation::{ChangePointSet, LabelVector};

/// Exact outcome of a Rand Index computation.
///
/// Carries the integer disagreement count `d` and pair count C(n,2); the
/// floating value is always derived from them, never stored, so equality of
/// results can be tested on integers alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandIndexResult {
    disagreements: u64,
    total_pairs: u64,
}

impl RandIndexResult {
    fn new(disagreements: u64, total_pairs: u64) -> Self {
        debug_assert!(disagreements <= total_pairs);
        Self {
            disagreements,
            total_pairs,
        }
    }

    /// Number of index pairs the two segmentations classify differently.
    pub fn disagreements(&self) -> u64 {
        self.disagreements
    }

    /// C(n,2), the number of unordered index pairs.
    pub fn total_pairs(&self) -> u64 {
        self.total_pairs
    }

    /// The Rand Index `1 - disagreements / total_pairs`, in `[0, 1]`.
    /// Equals 1 exactly when `disagreements == 0`.
    pub fn value(&self) -> f64 {
        1.0 - self.disagreements as f64 / self.total_pairs as f64
    }
}

/// Inner-loop effort of one [`disagreement_sum`] call.
///
/// `inner_iterations` never exceeds `segments_a + segments_b`, which is the
/// operational form of the O(r+s) time bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationStats {
    /// Number of inner-loop bodies executed.
    pub inner_iterations: u64,
    /// Segment count `r + 1` of the first input.
    pub segments_a: usize,
    /// Segment count `s + 1` of the second input.
    pub segments_b: usize,
}

/// Dense table of segment-overlap counts between two segmentations.
///
/// Cell `(i, j)` holds `n_ij`, the number of positions shared by segment `i`
/// of the first input and segment `j` of the second. Row sums are the first
/// input's segment sizes, column sums the second's, and all cells sum to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    counts: Vec<u64>,
    n: u64,
}

impl ContingencyTable {
    /// Number of rows, `r + 1`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, `s + 1`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Series length `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Overlap count `n_ij`. Panics if `i >= rows()` or `j >= cols()`.
    pub fn count(&self, i: usize, j: usize) -> u64 {
        assert!(i < self.rows && j < self.cols, "cell index out of range");
        self.counts[i * self.cols + j]
    }

    /// Row-major cell storage.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of stored cells, exactly `(r+1) * (s+1)`.
    pub fn num_cells(&self) -> usize {
        self.counts.len()
    }

    /// Structural memory footprint of the table: cell count times cell width.
    pub fn aux_bytes(&self) -> u64 {
        self.num_cells() as u64 * std::mem::size_of::<u64>() as u64
    }

    /// Per-row totals, i.e. segment sizes of the first input.
    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|i| self.counts[i * self.cols..(i + 1) * self.cols].iter().sum())
            .collect()
    }

    /// Per-column totals, i.e. segment sizes of the second input.
    pub fn col_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.cols];
        for i in 0..self.rows {
            for (j, sum) in sums.iter_mut().enumerate() {
                *sum += self.counts[i * self.cols + j];
            }
        }
        sums
    }
}

fn check_same_n(a: &ChangePointSet, b: &ChangePointSet) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SeriesLengthMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

fn pair_count(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// Size of the intersection of segment `i` of `a` with segment `j` of `b`,
/// computed as `max(0, min(upper_i, upper_j) - max(lower_i, lower_j))` on the
/// boundary sequences.
pub fn overlap_count(i: usize, j: usize, a: &ChangePointSet, b: &ChangePointSet) -> Result<u64> {
    check_same_n(a, b)?;
    if i >= a.num_segments() || j >= b.num_segments() {
        return Err(Error::SegmentIndexOutOfRange {
            i,
            j,
            rows: a.num_segments(),
            cols: b.num_segments(),
        });
    }
    let lo = a.boundary(i).max(b.boundary(j));
    let hi = a.boundary(i + 1).min(b.boundary(j + 1));
    Ok(hi.saturating_sub(lo))
}

/// The exact disagreement count `d = Σ_ij n_ij · |upper_i - upper_j|` over
/// the segment grid, together with the iteration count that produced it.
///
/// The double loop resumes the inner index where the previous row stopped
/// (`begj`) and breaks as soon as the current segment of `a` ends before the
/// current segment of `b`; every iteration therefore either breaks or
/// advances `begj`, so the inner body runs at most `(r+1) + (s+1)` times.
/// No allocation is performed and no state grows with the input.
pub fn disagreement_sum(a: &ChangePointSet, b: &ChangePointSet) -> Result<(u64, IterationStats)> {
    check_same_n(a, b)?;
    let r = a.num_change_points();
    let s = b.num_change_points();

    let mut d = 0u64;
    let mut inner_iterations = 0u64;
    let mut begj = 0usize;
    for i in 0..=r {
        let a_lo = a.boundary(i);
        let a_hi = a.boundary(i + 1);
        // Updating begj mid-loop leaves the current range untouched; it
        // positions the *next* row's start.
        #[allow(clippy::mut_range_bound)]
        for j in begj..=s {
            inner_iterations += 1;
            let b_hi = b.boundary(j + 1);
            let overlap = a_hi.min(b_hi).saturating_sub(a_lo.max(b.boundary(j)));
            d += overlap * a_hi.abs_diff(b_hi);
            if a_hi < b_hi {
                break;
            }
            begj = j + 1;
        }
    }

    let stats = IterationStats {
        inner_iterations,
        segments_a: r + 1,
        segments_b: s + 1,
    };
    Ok((d, stats))
}

/// Rand Index via the change-point walk: O(r+s) time, constant auxiliary
/// space. Symmetric in its arguments.
pub fn rand_index_cpd(a: &ChangePointSet, b: &ChangePointSet) -> Result<RandIndexResult> {
    let (d, _) = disagreement_sum(a, b)?;
    Ok(RandIndexResult::new(d, pair_count(a.n())))
}

/// Builds the overlap table by the traditional full pass over positions
/// `1..=n`: O(n) time on top of the O(rs) table itself.
///
/// Each cell equals the corresponding [`overlap_count`], which provides an
/// independent cross-check of this construction.
pub fn contingency_table(a: &ChangePointSet, b: &ChangePointSet) -> Result<ContingencyTable> {
    check_same_n(a, b)?;
    let rows = a.num_segments();
    let cols = b.num_segments();
    let mut counts = vec![0u64; rows * cols];

    let mut i = 0usize;
    let mut j = 0usize;
    for x in 1..=a.n() {
        if x > a.boundary(i + 1) {
            i += 1;
        }
        if x > b.boundary(j + 1) {
            j += 1;
        }
        counts[i * cols + j] += 1;
    }

    Ok(ContingencyTable {
        rows,
        cols,
        counts,
        n: a.n(),
    })
}

/// Rand Index from a contingency table:
/// `1 - [ (Σ row² + Σ col²) / 2 - Σ n_ij² ] / C(n,2)`.
///
/// The bracketed numerator is the exact integer disagreement count; the sum
/// of squared row and column totals is always even, so the division is exact.
pub fn rand_index_contingency(table: &ContingencyTable) -> RandIndexResult {
    // Row totals, column totals, and the cell-square sum all come out of a
    // single pass over the table.
    let mut col_sums = vec![0u64; table.cols];
    let mut sum_sq_rows: u128 = 0;
    let mut sum_sq_cells: u128 = 0;
    for row in table.counts.chunks_exact(table.cols) {
        let mut row_sum = 0u64;
        for (&cell, col_sum) in row.iter().zip(col_sums.iter_mut()) {
            row_sum += cell;
            *col_sum += cell;
            sum_sq_cells += (cell as u128) * (cell as u128);
        }
        sum_sq_rows += (row_sum as u128) * (row_sum as u128);
    }
    let sum_sq_cols: u128 = col_sums.iter().map(|&v| (v as u128) * (v as u128)).sum();

    let disagreements = (sum_sq_rows + sum_sq_cols) / 2 - sum_sq_cells;
    RandIndexResult::new(disagreements as u64, pair_count(table.n()))
}

/// Rand Index straight from its definition: iterates all C(n,2) index pairs
/// and counts agreements (same cluster in both, or different cluster in
/// both). O(n²); this is the ground-truth oracle for the other two routes.
pub fn rand_index_pairwise(la: &LabelVector, lb: &LabelVector) -> Result<RandIndexResult> {
    if la.len() != lb.len() {
        return Err(Error::SeriesLengthMismatch {
            left: la.len() as u64,
            right: lb.len() as u64,
        });
    }
    let a = la.labels();
    let b = lb.labels();
    let n = a.len();

    let mut agreements = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let same_a = a[i] == a[j];
            let same_b = b[i] == b[j];
            if same_a == same_b {
                agreements += 1;
            }
        }
    }

    let total_pairs = pair_count(n as u64);
    Ok(RandIndexResult::new(total_pairs - agreements, total_pairs))
}
