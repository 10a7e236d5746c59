// SPDX-License-Identifier: MIT OR Apache-2.0

//! Subcommand implementations and the exit-code policy.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use ricpd_core::bench::{run_scaling_experiment, write_csv, BenchConfig, DEFAULT_BASELINE_CUTOFF};
use ricpd_core::{
    contingency_table, disagreement_sum, rand_index_contingency, rand_index_cpd,
    rand_index_pairwise, ChangePointSet, RandIndexResult,
};

use crate::files::parse_segmentation_file;
use crate::Method;

/// Error carrying the process exit code alongside the message.
///
/// Code 2 covers parse/validation/configuration problems, code 3 a series
/// length mismatch between the two inputs, code 1 a self-test counterexample.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn prefixed(self, path: &Path) -> Self {
        Self {
            code: self.code,
            message: format!("{}: {}", path.display(), self.message),
        }
    }
}

impl From<ricpd_core::Error> for CliError {
    fn from(err: ricpd_core::Error) -> Self {
        let code = match err {
            ricpd_core::Error::SeriesLengthMismatch { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        Self::invalid(err.to_string())
    }
}

fn load_set(path: &Path, normalize: bool) -> Result<ChangePointSet, CliError> {
    parse_segmentation_file(path)?
        .into_change_point_set(normalize)
        .map_err(|err| CliError::from(err).prefixed(path))
}

fn compute_with(
    method: Method,
    a: &ChangePointSet,
    b: &ChangePointSet,
) -> ricpd_core::Result<RandIndexResult> {
    match method {
        Method::Fast => rand_index_cpd(a, b),
        Method::Contingency => Ok(rand_index_contingency(&contingency_table(a, b)?)),
        Method::Pairwise => rand_index_pairwise(&a.to_labels(), &b.to_labels()),
    }
}

pub fn compute(
    file_a: &Path,
    file_b: &Path,
    method: Method,
    normalize: bool,
) -> Result<u8, CliError> {
    let a = load_set(file_a, normalize)?;
    let b = load_set(file_b, normalize)?;
    let result = compute_with(method, &a, &b)?;
    println!("{}", result.value());
    println!("{}/{}", result.disagreements(), result.total_pairs());
    Ok(0)
}

pub fn batch(manifest: &Path, out: Option<&Path>) -> Result<u8, CliError> {
    let mut reader = csv::Reader::from_path(manifest).map_err(|err| {
        CliError::invalid(format!(
            "cannot read manifest {}: {err}",
            manifest.display()
        ))
    })?;
    let headers = reader
        .headers()
        .map_err(|err| CliError::invalid(format!("{}: {err}", manifest.display())))?
        .clone();
    let expected = ["id", "truth_path", "pred_path"];
    let names: Vec<&str> = headers.iter().map(str::trim).collect();
    if names != expected {
        return Err(CliError::invalid(format!(
            "{}: manifest header must be id,truth_path,pred_path, got {}",
            manifest.display(),
            names.join(",")
        )));
    }

    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).map_err(|err| {
            CliError::invalid(format!("cannot create {}: {err}", path.display()))
        })?),
        None => Box::new(io::stdout()),
    };
    let mut writer = csv::Writer::from_writer(sink);
    writer
        .write_record(["id", "rand_index", "disagreements", "total_pairs", "error"])
        .map_err(|err| CliError::invalid(err.to_string()))?;

    let mut any_failed = false;
    for (row_index, record) in reader.records().enumerate() {
        let (id, outcome) = match record {
            Ok(fields) if fields.len() == 3 => {
                let id = fields[0].to_string();
                let result = score_pair(Path::new(&fields[1]), Path::new(&fields[2]));
                (id, result)
            }
            Ok(fields) => (
                fields.get(0).unwrap_or_default().to_string(),
                Err(CliError::invalid(format!(
                    "manifest row has {} fields, expected 3",
                    fields.len()
                ))),
            ),
            Err(err) => (
                format!("row{}", row_index + 2),
                Err(CliError::invalid(format!("malformed manifest row: {err}"))),
            ),
        };
        let record = match outcome {
            Ok(result) => [
                id,
                result.value().to_string(),
                result.disagreements().to_string(),
                result.total_pairs().to_string(),
                String::new(),
            ],
            Err(err) => {
                any_failed = true;
                [id, String::new(), String::new(), String::new(), err.message]
            }
        };
        writer
            .write_record(&record)
            .map_err(|err| CliError::invalid(err.to_string()))?;
    }
    writer.flush()?;
    Ok(u8::from(any_failed))
}

fn score_pair(truth: &Path, pred: &Path) -> Result<RandIndexResult, CliError> {
    let a = load_set(truth, false)?;
    let b = load_set(pred, false)?;
    Ok(rand_index_cpd(&a, &b)?)
}

#[allow(clippy::too_many_arguments)]
pub fn bench(
    n: u64,
    sizes: Vec<usize>,
    trials: usize,
    seed: u64,
    include_baseline: bool,
    baseline_cutoff: Option<usize>,
    out: Option<&Path>,
) -> Result<u8, CliError> {
    let max_size = sizes.iter().copied().max().unwrap_or(0);
    let cfg = BenchConfig {
        n,
        sizes,
        trials,
        seed,
        include_baseline,
        baseline_cutoff: baseline_cutoff.unwrap_or_else(|| DEFAULT_BASELINE_CUTOFF.min(max_size)),
    };
    let rows = run_scaling_experiment(&cfg)?;
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|err| {
                CliError::invalid(format!("cannot create {}: {err}", path.display()))
            })?;
            write_csv(&rows, file)?;
        }
        None => write_csv(&rows, io::stdout())?,
    }
    Ok(0)
}

pub fn selftest(max_n: u32) -> Result<u8, CliError> {
    if !(2..=12).contains(&max_n) {
        return Err(CliError::invalid(format!(
            "selftest --max-n must be in 2..=12, got {max_n}"
        )));
    }
    let mut total = 0u64;
    for n in 2..=u64::from(max_n) {
        let sets = all_change_point_sets(n);
        for a in &sets {
            for b in &sets {
                check_pair(a, b)?;
                total += 1;
            }
        }
        println!("n={n}: {} ordered pairs agree", sets.len() * sets.len());
    }
    println!("selftest passed: {total} ordered pairs checked, all three methods agree");
    Ok(0)
}

/// Every subset of `1..=n-1` as a change-point set, in bitmask order.
fn all_change_point_sets(n: u64) -> Vec<ChangePointSet> {
    let width = (n - 1) as u32;
    (0u32..(1 << width))
        .map(|mask| {
            let points = (0..width)
                .filter(|bit| mask & (1 << bit) != 0)
                .map(|bit| u64::from(bit) + 1)
                .collect();
            ChangePointSet::new(n, points).expect("enumerated sets are valid")
        })
        .collect()
}

fn check_pair(a: &ChangePointSet, b: &ChangePointSet) -> Result<(), CliError> {
    let (d_fast, stats) = disagreement_sum(a, b)?;
    let d_table = rand_index_contingency(&contingency_table(a, b)?).disagreements();
    let d_pairs = rand_index_pairwise(&a.to_labels(), &b.to_labels())?.disagreements();
    let bound = (stats.segments_a + stats.segments_b) as u64;
    if d_fast != d_table || d_fast != d_pairs || stats.inner_iterations > bound {
        let render = |set: &ChangePointSet| {
            serde_json::json!({"n": set.n(), "changepoints": set.points()}).to_string()
        };
        return Err(CliError {
            code: 1,
            message: format!(
                "methods disagree: fast d={d_fast}, contingency d={d_table}, pairwise d={d_pairs}, \
                 inner_iterations={} (bound {bound}); inputs:\n{}\n{}",
                stats.inner_iterations,
                render(a),
                render(b)
            ),
        });
    }
    Ok(())
}
