// SPDX-License-Identifier: MIT OR Apache-2.0

//! Scaling-experiment harness for the complexity claims: O(r+s) time and
//! constant auxiliary memory for the change-point walk versus O(rs+n) time
//! and O(rs) memory for the contingency baseline.
//!
//! The harness generates deterministic random inputs, times each method with
//! a median over repeated trials, and emits machine-readable CSV rows of the
//! form `r,s,method,wall_nanos_median,inner_iterations,peak_aux_bytes`.

use std::fmt;
use std::io::{self, Write};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::metrics::{contingency_table, disagreement_sum, rand_index_contingency, rand_index_cpd};
use crate::segmentation::ChangePointSet;

/// Default cap on the baseline's change-point count: keeps the (r+1)x(s+1)
/// table near 10^7 cells.
pub const DEFAULT_BASELINE_CUTOFF: usize = 3163;

/// Which implementation a [`BenchRow`] measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    /// The O(r+s) change-point walk.
    Fast,
    /// The O(rs+n) contingency-table formula.
    Contingency,
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchMethod::Fast => f.write_str("fast"),
            BenchMethod::Contingency => f.write_str("contingency"),
        }
    }
}

/// Parameters of one scaling sweep.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Series length shared by every generated input.
    pub n: u64,
    /// Change-point counts to sweep, used for both sides of each pair.
    pub sizes: Vec<usize>,
    /// Timed repetitions per (size, method); the median is reported.
    pub trials: usize,
    /// Seed for deterministic input generation.
    pub seed: u64,
    /// Whether to run the contingency baseline at all.
    pub include_baseline: bool,
    /// Largest size at which the baseline is still run.
    pub baseline_cutoff: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n: 1_000_000,
            sizes: vec![1_000, 10_000, 100_000],
            trials: 5,
            seed: 0x5eed,
            include_baseline: true,
            baseline_cutoff: DEFAULT_BASELINE_CUTOFF,
        }
    }
}

impl BenchConfig {
    /// Checks the structural invariants: a non-empty sweep, every size below
    /// `n`, at least one trial, and a cutoff no larger than the largest size.
    pub fn validate(&self) -> Result<()> {
        let max_size = *self.sizes.iter().max().ok_or(Error::EmptySizes)?;
        for &size in &self.sizes {
            if size as u64 >= self.n {
                return Err(Error::TooManyChangePoints { k: size, n: self.n });
            }
        }
        if self.trials == 0 {
            return Err(Error::ZeroTrials);
        }
        if self.baseline_cutoff > max_size {
            return Err(Error::BaselineCutoffBeyondSizes {
                cutoff: self.baseline_cutoff,
                max_size,
            });
        }
        Ok(())
    }
}

/// One measurement: a (size, method) cell of the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    /// Change-point count of the first input.
    pub r: usize,
    /// Change-point count of the second input.
    pub s: usize,
    pub method: BenchMethod,
    /// Median wall time of the metric computation, in nanoseconds, floored
    /// at 1 to absorb clock granularity.
    pub wall_nanos_median: u64,
    /// Inner-loop count of the fast method; absent for the baseline.
    pub inner_iterations: Option<u64>,
    /// Structural auxiliary memory: 0 for the fast method, table cells times
    /// cell width for the baseline.
    pub peak_aux_bytes: Option<u64>,
}

/// Draws `k` distinct change-points uniformly from `1..=n-1`, deterministic
/// in `seed`. The result always passes [`ChangePointSet`] validation.
pub fn random_change_point_set(n: u64, k: usize, seed: u64) -> Result<ChangePointSet> {
    if n < 2 || (k as u64) >= n {
        return Err(Error::TooManyChangePoints { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<u64> = rand::seq::index::sample(&mut rng, (n - 1) as usize, k)
        .into_iter()
        .map(|idx| idx as u64 + 1)
        .collect();
    points.sort_unstable();
    ChangePointSet::new(n, points)
}

/// Visit order of one measurement round: even rounds ascending, odd rounds
/// descending, so drift that is roughly linear in time cancels per size.
fn round_order(round: usize, len: usize) -> Box<dyn Iterator<Item = usize>> {
    if round.is_multiple_of(2) {
        Box::new(0..len)
    } else {
        Box::new((0..len).rev())
    }
}

fn median_nanos(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    let median = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    };
    median.max(1)
}

/// Runs the sweep: for each size, generates a deterministic input pair
/// (seeds `seed + 2t` and `seed + 2t + 1` for sweep position `t`), times the
/// fast method, and — up to `baseline_cutoff` — the contingency baseline.
///
/// Input generation and validation happen outside the timed sections, and
/// timed sections run strictly sequentially on the calling thread. Within a
/// method, trials are interleaved round-robin across sizes (after one warmup
/// call per size), so slow drift in machine load lands on every size instead
/// of skewing whichever size was measured during the bad stretch.
pub fn run_scaling_experiment(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.validate()?;
    let pairs = cfg
        .sizes
        .iter()
        .enumerate()
        .map(|(t, &k)| {
            let a = random_change_point_set(cfg.n, k, cfg.seed.wrapping_add(2 * t as u64))?;
            let b = random_change_point_set(cfg.n, k, cfg.seed.wrapping_add(2 * t as u64 + 1))?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut fast_samples = vec![Vec::with_capacity(cfg.trials); pairs.len()];
    for (a, b) in &pairs {
        std::hint::black_box(rand_index_cpd(a, b))?;
    }
    for round in 0..cfg.trials {
        for idx in round_order(round, pairs.len()) {
            let (a, b) = &pairs[idx];
            let start = Instant::now();
            std::hint::black_box(rand_index_cpd(
                std::hint::black_box(a),
                std::hint::black_box(b),
            ))?;
            fast_samples[idx].push(start.elapsed().as_nanos() as u64);
        }
    }

    let baseline_indexes: Vec<usize> = if cfg.include_baseline {
        (0..cfg.sizes.len())
            .filter(|&idx| cfg.sizes[idx] <= cfg.baseline_cutoff)
            .collect()
    } else {
        Vec::new()
    };
    let mut baseline_samples = vec![Vec::with_capacity(cfg.trials); pairs.len()];
    let mut baseline_aux = vec![0u64; pairs.len()];
    for &idx in &baseline_indexes {
        let (a, b) = &pairs[idx];
        baseline_aux[idx] = contingency_table(a, b)?.aux_bytes();
    }
    for round in 0..cfg.trials {
        for pos in round_order(round, baseline_indexes.len()) {
            let idx = baseline_indexes[pos];
            let (a, b) = &pairs[idx];
            let start = Instant::now();
            let table = contingency_table(std::hint::black_box(a), std::hint::black_box(b))?;
            std::hint::black_box(rand_index_contingency(&table));
            baseline_samples[idx].push(start.elapsed().as_nanos() as u64);
        }
    }

    let mut rows = Vec::new();
    for (idx, &k) in cfg.sizes.iter().enumerate() {
        let (a, b) = &pairs[idx];
        let (_, stats) = disagreement_sum(a, b)?;
        rows.push(BenchRow {
            r: k,
            s: k,
            method: BenchMethod::Fast,
            wall_nanos_median: median_nanos(std::mem::take(&mut fast_samples[idx])),
            inner_iterations: Some(stats.inner_iterations),
            peak_aux_bytes: Some(0),
        });
        if baseline_indexes.contains(&idx) {
            rows.push(BenchRow {
                r: k,
                s: k,
                method: BenchMethod::Contingency,
                wall_nanos_median: median_nanos(std::mem::take(&mut baseline_samples[idx])),
                inner_iterations: None,
                peak_aux_bytes: Some(baseline_aux[idx]),
            });
        }
    }
    Ok(rows)
}

/// Writes the rows as CSV with header
/// `r,s,method,wall_nanos_median,inner_iterations,peak_aux_bytes`.
/// Absent fields are left empty.
pub fn write_csv<W: Write>(rows: &[BenchRow], mut out: W) -> io::Result<()> {
    writeln!(
        out,
        "r,s,method,wall_nanos_median,inner_iterations,peak_aux_bytes"
    )?;
    for row in rows {
        let iterations = row
            .inner_iterations
            .map(|v| v.to_string())
            .unwrap_or_default();
        let aux = row
            .peak_aux_bytes
            .map(|v| v.to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.r, row.s, row.method, row.wall_nanos_median, iterations, aux
        )?;
    }
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`.
///
/// Meaningful only for at least two points with distinct positive `x`;
/// degenerate inputs yield NaN.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let count = points.len() as f64;
    let mean_x = points.iter().map(|&(x, _)| x.ln()).sum::<f64>() / count;
    let mean_y = points.iter().map(|&(_, y)| y.ln()).sum::<f64>() / count;
    let mut covariance = 0.0;
    let mut variance = 0.0;
    for &(x, y) in points {
        let dx = x.ln() - mean_x;
        covariance += dx * (y.ln() - mean_y);
        variance += dx * dx;
    }
    covariance / variance
}
