// SPDX-License-Identifier: MIT OR Apache-2.0

//! Domain types for contiguous segmentations and conversions between the
//! three equivalent representations: change-point set, partition into
//! contiguous index ranges, and per-index label vector.
//!
//! Indices are 1-based everywhere in the public contract: a series of length
//! `n` covers positions `1..=n`, and a change-point `c` marks a distribution
//! change between positions `c` and `c+1`.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest supported series length.
///
/// Capped so that the pair count C(n,2) stays below 2^62 and all disagreement
/// arithmetic fits exactly in `u64`.
pub const MAX_SERIES_LEN: u64 = (1 << 31) - 1;

/// A validated set of interior change-points over a series of length `n`.
///
/// Only the interior points `c_1 < c_2 < … < c_k` (each in `1..=n-1`) are
/// stored; the sentinel boundaries `0` and `n` are derived on demand, so a
/// stored set can never disagree with its own series length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangePointSet {
    n: u64,
    points: Vec<u64>,
}

impl ChangePointSet {
    /// Builds a set from already sorted, duplicate-free interior points.
    ///
    /// Fails on `n < 2`, `n >` [`MAX_SERIES_LEN`], points outside `1..=n-1`,
    /// and points that are out of order or duplicated.
    pub fn new(n: u64, points: Vec<u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::SeriesTooShort { n });
        }
        if n > MAX_SERIES_LEN {
            return Err(Error::SeriesTooLarge {
                n,
                max: MAX_SERIES_LEN,
            });
        }
        for (idx, &point) in points.iter().enumerate() {
            if point < 1 || point > n - 1 {
                return Err(Error::PointOutOfRange { point, n });
            }
            if idx > 0 && points[idx - 1] >= point {
                return Err(Error::PointsNotIncreasing {
                    prev: points[idx - 1],
                    next: point,
                });
            }
        }
        Ok(Self { n, points })
    }

    /// Like [`ChangePointSet::new`], but sorts and deduplicates the input
    /// first. Range checks still apply. Idempotent: feeding the resulting
    /// points back yields the same set.
    pub fn normalized(n: u64, mut points: Vec<u64>) -> Result<Self> {
        points.sort_unstable();
        points.dedup();
        Self::new(n, points)
    }

    /// Recovers the change-point set from a label vector.
    ///
    /// Label values are arbitrary; only the block structure matters. Fails
    /// with [`Error::NonContiguousLabels`] when a label reappears after a
    /// different label, since such a clustering is not contiguous.
    pub fn from_labels(labels: &LabelVector) -> Result<Self> {
        let values = labels.labels();
        let mut points = Vec::new();
        let mut closed_blocks = HashSet::new();
        for i in 1..values.len() {
            if values[i] != values[i - 1] {
                closed_blocks.insert(values[i - 1]);
                if closed_blocks.contains(&values[i]) {
                    return Err(Error::NonContiguousLabels {
                        label: values[i],
                        position: i + 1,
                    });
                }
                points.push(i as u64);
            }
        }
        Self::new(values.len() as u64, points)
    }

    /// Series length `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Interior change-points, strictly increasing, each in `1..=n-1`.
    pub fn points(&self) -> &[u64] {
        &self.points
    }

    /// Number of interior change-points `k`.
    pub fn num_change_points(&self) -> usize {
        self.points.len()
    }

    /// Number of contiguous segments, `k + 1`.
    pub fn num_segments(&self) -> usize {
        self.points.len() + 1
    }

    /// The `t`-th element of the boundary sequence `0, c_1, …, c_k, n`
    /// without materializing it.
    ///
    /// Panics if `t > num_segments()`.
    #[inline]
    pub fn boundary(&self, t: usize) -> u64 {
        if t == 0 {
            0
        } else if t == self.points.len() + 1 {
            self.n
        } else {
            self.points[t - 1]
        }
    }

    /// The boundary sequence `[0, c_1, …, c_k, n]`, strictly increasing,
    /// with `k + 2` elements.
    pub fn boundaries(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.points.len() + 2);
        out.push(0);
        out.extend_from_slice(&self.points);
        out.push(self.n);
        out
    }

    /// The equivalent partition: segment `t` covers positions
    /// `boundary(t)+1 ..= boundary(t+1)`.
    pub fn to_partition(&self) -> Partition {
        let segments = (0..self.num_segments())
            .map(|t| (self.boundary(t) + 1, self.boundary(t + 1)))
            .collect();
        Partition { segments }
    }

    /// The equivalent label vector: position `i` gets the index of the
    /// segment containing it. Round-trips through
    /// [`ChangePointSet::from_labels`].
    pub fn to_labels(&self) -> LabelVector {
        let mut labels = Vec::with_capacity(self.n as usize);
        for t in 0..self.num_segments() {
            let len = (self.boundary(t + 1) - self.boundary(t)) as usize;
            labels.extend(std::iter::repeat_n(t as i64, len));
        }
        LabelVector { labels }
    }
}

/// A partition of `1..=n` into contiguous, 1-based inclusive ranges.
///
/// Only constructible through [`ChangePointSet::to_partition`], so the
/// covering invariants always hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    segments: Vec<(u64, u64)>,
}

impl Partition {
    /// The `(lo, hi)` ranges in order; `lo` of the first is 1, `hi` of the
    /// last is `n`, and consecutive ranges are adjacent.
    pub fn segments(&self) -> &[(u64, u64)] {
        &self.segments
    }

    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    /// Series length, i.e. the upper end of the last segment.
    pub fn n(&self) -> u64 {
        self.segments.last().expect("partition is never empty").1
    }
}

/// Per-index cluster labels: `labels()[i]` is the cluster id of position
/// `i + 1`.
///
/// Labels are arbitrary integers and, unlike [`ChangePointSet`], the blocks
/// need not be contiguous; this is the input type of the pairwise oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    labels: Vec<i64>,
}

impl LabelVector {
    /// Fails when fewer than 2 labels are given or the length exceeds
    /// [`MAX_SERIES_LEN`].
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::TooFewLabels { len: labels.len() });
        }
        if labels.len() as u64 > MAX_SERIES_LEN {
            return Err(Error::SeriesTooLarge {
                n: labels.len() as u64,
                max: MAX_SERIES_LEN,
            });
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_accepts_sorted_interior_points() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        assert_eq!(cps.n(), 10);
        assert_eq!(cps.points(), &[3, 8]);
        assert_eq!(cps.num_change_points(), 2);
        assert_eq!(cps.num_segments(), 3);
    }

    #[test]
    fn new_accepts_empty_point_set() {
        let cps = ChangePointSet::new(10, vec![]).unwrap();
        assert_eq!(cps.points(), &[] as &[u64]);
        assert_eq!(cps.num_segments(), 1);
    }

    #[test]
    fn new_rejects_short_series() {
        assert_eq!(
            ChangePointSet::new(1, vec![]),
            Err(Error::SeriesTooShort { n: 1 })
        );
        assert_eq!(
            ChangePointSet::new(0, vec![]),
            Err(Error::SeriesTooShort { n: 0 })
        );
    }

    #[test]
    fn new_rejects_series_beyond_cap() {
        let err = ChangePointSet::new(MAX_SERIES_LEN + 1, vec![]).unwrap_err();
        assert_eq!(
            err,
            Error::SeriesTooLarge {
                n: MAX_SERIES_LEN + 1,
                max: MAX_SERIES_LEN
            }
        );
        assert!(ChangePointSet::new(MAX_SERIES_LEN, vec![]).is_ok());
    }

    #[test]
    fn new_rejects_out_of_range_points() {
        assert_eq!(
            ChangePointSet::new(10, vec![0]),
            Err(Error::PointOutOfRange { point: 0, n: 10 })
        );
        assert_eq!(
            ChangePointSet::new(10, vec![10]),
            Err(Error::PointOutOfRange { point: 10, n: 10 })
        );
        assert!(ChangePointSet::new(10, vec![9]).is_ok());
    }

    #[test]
    fn new_rejects_unsorted_or_duplicated_points() {
        assert_eq!(
            ChangePointSet::new(10, vec![8, 3]),
            Err(Error::PointsNotIncreasing { prev: 8, next: 3 })
        );
        assert_eq!(
            ChangePointSet::new(10, vec![3, 3]),
            Err(Error::PointsNotIncreasing { prev: 3, next: 3 })
        );
    }

    #[test]
    fn normalized_sorts_and_dedups() {
        let cps = ChangePointSet::normalized(10, vec![8, 3, 3]).unwrap();
        assert_eq!(cps.points(), &[3, 8]);
        // Strict constructor rejects the same input.
        assert!(ChangePointSet::new(10, vec![8, 3, 3]).is_err());
    }

    #[test]
    fn normalized_still_range_checks() {
        assert_eq!(
            ChangePointSet::normalized(10, vec![12, 3]),
            Err(Error::PointOutOfRange { point: 12, n: 10 })
        );
    }

    #[test]
    fn normalized_is_idempotent() {
        let once = ChangePointSet::normalized(20, vec![7, 2, 7, 19]).unwrap();
        let twice = ChangePointSet::normalized(20, once.points().to_vec()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn boundaries_wrap_points_with_sentinels() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        assert_eq!(cps.boundaries(), vec![0, 3, 8, 10]);

        let empty = ChangePointSet::new(5, vec![]).unwrap();
        assert_eq!(empty.boundaries(), vec![0, 5]);

        let full = ChangePointSet::new(10, (1..=9).collect()).unwrap();
        assert_eq!(full.boundaries(), (0..=10).collect::<Vec<_>>());
    }

    #[test]
    fn boundary_matches_materialized_sequence() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        let materialized = cps.boundaries();
        for (t, &expected) in materialized.iter().enumerate() {
            assert_eq!(cps.boundary(t), expected);
        }
    }

    #[test]
    fn to_partition_covers_the_series() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        assert_eq!(cps.to_partition().segments(), &[(1, 3), (4, 8), (9, 10)]);

        let single = ChangePointSet::new(4, vec![]).unwrap();
        assert_eq!(single.to_partition().segments(), &[(1, 4)]);

        let singletons = ChangePointSet::new(3, vec![1, 2]).unwrap();
        assert_eq!(
            singletons.to_partition().segments(),
            &[(1, 1), (2, 2), (3, 3)]
        );
    }

    #[test]
    fn to_labels_reads_off_segment_indices() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        assert_eq!(cps.to_labels().labels(), &[0, 0, 0, 1, 1, 1, 1, 1, 2, 2]);

        let pair = ChangePointSet::new(2, vec![]).unwrap();
        assert_eq!(pair.to_labels().labels(), &[0, 0]);

        let early = ChangePointSet::new(3, vec![1]).unwrap();
        assert_eq!(early.to_labels().labels(), &[0, 1, 1]);
    }

    #[test]
    fn from_labels_inverts_to_labels() {
        let labels = LabelVector::new(vec![0, 0, 0, 1, 1, 1, 1, 1, 2, 2]).unwrap();
        let cps = ChangePointSet::from_labels(&labels).unwrap();
        assert_eq!(cps, ChangePointSet::new(10, vec![3, 8]).unwrap());
    }

    #[test]
    fn from_labels_ignores_label_values() {
        let labels = LabelVector::new(vec![5, 5, 5]).unwrap();
        let cps = ChangePointSet::from_labels(&labels).unwrap();
        assert_eq!(cps, ChangePointSet::new(3, vec![]).unwrap());

        let negative = LabelVector::new(vec![-7, -7, 4, 4]).unwrap();
        let cps = ChangePointSet::from_labels(&negative).unwrap();
        assert_eq!(cps.points(), &[2]);
    }

    #[test]
    fn from_labels_rejects_non_contiguous_clusters() {
        let labels = LabelVector::new(vec![0, 1, 0]).unwrap();
        assert_eq!(
            ChangePointSet::from_labels(&labels),
            Err(Error::NonContiguousLabels {
                label: 0,
                position: 3
            })
        );
    }

    #[test]
    fn label_vector_rejects_short_input() {
        assert_eq!(
            LabelVector::new(vec![0]),
            Err(Error::TooFewLabels { len: 1 })
        );
        assert_eq!(
            LabelVector::new(vec![]),
            Err(Error::TooFewLabels { len: 0 })
        );
    }

    #[test]
    fn partition_reports_series_length() {
        let cps = ChangePointSet::new(10, vec![3, 8]).unwrap();
        let partition = cps.to_partition();
        assert_eq!(partition.n(), 10);
        assert_eq!(partition.num_segments(), 3);
    }
}
