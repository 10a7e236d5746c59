// SPDX-License-Identifier: MIT OR Apache-2.0

#![forbid(unsafe_code)]

//! `ricpd` — Rand Index for change-point segmentations.
//!
//! Subcommands: `compute` scores one pair of segmentation files, `batch`
//! evaluates a CSV manifest of pairs, `bench` runs the scaling sweep, and
//! `selftest` exhaustively cross-checks the three computation methods on
//! small series.
//!
//! Exit codes: 0 success; 1 per-row or self-test failure; 2 parse, validation
//! or configuration error; 3 series-length mismatch. Every error prints a
//! single `error:`-prefixed line on stderr.

mod commands;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "ricpd",
    version,
    about = "Rand Index for change-point segmentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Method {
    /// O(r+s) change-point walk.
    #[default]
    Fast,
    /// O(rs+n) contingency-table formula.
    Contingency,
    /// O(n²) pairwise definition.
    Pairwise,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Rand Index between two segmentation files.
    ///
    /// Prints the index value on the first line and the exact
    /// disagreements/total_pairs fraction on the second.
    Compute {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Implementation to use; all three print identical output.
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        /// Sort and deduplicate change-points instead of rejecting
        /// unsorted input.
        #[arg(long)]
        normalize: bool,
    },
    /// Score every `id,truth_path,pred_path` row of a manifest CSV.
    ///
    /// Writes `id,rand_index,disagreements,total_pairs,error` rows; per-row
    /// failures fill the error column without aborting the batch.
    Batch {
        manifest: PathBuf,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the scaling sweep and emit one CSV row per (size, method).
    Bench {
        /// Series length for every generated input.
        #[arg(long, default_value_t = 1_000_000)]
        n: u64,
        /// Comma-separated change-point counts to sweep.
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        /// Timed repetitions per measurement; the median is reported.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Seed for deterministic input generation.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Skip the contingency baseline entirely.
        #[arg(long)]
        no_baseline: bool,
        /// Largest size at which the baseline still runs
        /// (default: min(3163, largest size)).
        #[arg(long)]
        baseline_cutoff: Option<usize>,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check all three methods on every pair of change-point sets
    /// for each series length up to --max-n.
    Selftest {
        /// Largest series length to enumerate (2..=12).
        #[arg(long, default_value_t = 7)]
        max_n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute {
            file_a,
            file_b,
            method,
            normalize,
        } => commands::compute(&file_a, &file_b, method, normalize),
        Command::Batch { manifest, out } => commands::batch(&manifest, out.as_deref()),
        Command::Bench {
            n,
            sizes,
            trials,
            seed,
            no_baseline,
            baseline_cutoff,
            out,
        } => commands::bench(
            n,
            sizes,
            trials,
            seed,
            !no_baseline,
            baseline_cutoff,
            out.as_deref(),
        ),
        Command::Selftest { max_n } => commands::selftest(max_n),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
