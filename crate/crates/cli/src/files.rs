// SPDX-License-Identifier: MIT OR Apache-2.0

//! Segmentation file parsing.
//!
//! Two on-disk forms are accepted:
//!
//! * JSON: `{"n": <int>, "changepoints": [<int>...]}` or
//!   `{"labels": [<int>...]}` — exactly one of the two shapes.
//! * Plain text: line 1 is the series length `n`, line 2 the space-separated
//!   interior change-points (empty or missing for none).
//!
//! Change-points are interior only (`1..=n-1`); the endpoints 0 and n are
//! never written to files.

use std::path::Path;

use ricpd_core::{ChangePointSet, LabelVector};
use serde::Deserialize;

use crate::commands::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegmentation {
    n: Option<u64>,
    changepoints: Option<Vec<u64>>,
    labels: Option<Vec<i64>>,
}

/// Parsed form of a segmentation file, before domain validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentationFile {
    ChangePoints { n: u64, points: Vec<u64> },
    Labels(Vec<i64>),
}

impl SegmentationFile {
    /// Validates into a [`ChangePointSet`]. `normalize` sorts and
    /// deduplicates change-point input; label input is unaffected by it.
    pub fn into_change_point_set(self, normalize: bool) -> ricpd_core::Result<ChangePointSet> {
        match self {
            SegmentationFile::ChangePoints { n, points } => {
                if normalize {
                    ChangePointSet::normalized(n, points)
                } else {
                    ChangePointSet::new(n, points)
                }
            }
            SegmentationFile::Labels(labels) => {
                ChangePointSet::from_labels(&LabelVector::new(labels)?)
            }
        }
    }
}

/// Reads and parses a segmentation file, sniffing JSON by a leading `{`.
pub fn parse_segmentation_file(path: &Path) -> Result<SegmentationFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::invalid(format!("cannot read {}: {err}", path.display())))?;
    let parsed = if text.trim_start().starts_with('{') {
        parse_json(&text)
    } else {
        parse_plain_text(&text)
    };
    parsed.map_err(|msg| CliError::invalid(format!("{}: {msg}", path.display())))
}

fn parse_json(text: &str) -> Result<SegmentationFile, String> {
    let raw: RawSegmentation =
        serde_json::from_str(text).map_err(|err| format!("invalid segmentation JSON: {err}"))?;
    match (raw.n, raw.changepoints, raw.labels) {
        (Some(n), Some(points), None) => Ok(SegmentationFile::ChangePoints { n, points }),
        (None, None, Some(labels)) => Ok(SegmentationFile::Labels(labels)),
        (None, Some(_), None) => Err("field n is required alongside changepoints".into()),
        (Some(_), None, Some(_)) => Err("field n is not allowed alongside labels".into()),
        (_, Some(_), Some(_)) => {
            Err("fields changepoints and labels are mutually exclusive".into())
        }
        (_, None, None) => Err("expected either changepoints (with n) or labels".into()),
    }
}

fn parse_plain_text(text: &str) -> Result<SegmentationFile, String> {
    let mut lines = text.lines();
    let first = lines
        .next()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .ok_or("first line must contain the series length n")?;
    let n: u64 = first
        .parse()
        .map_err(|err| format!("invalid series length {first:?}: {err}"))?;
    let points = match lines.next() {
        None => Vec::new(),
        Some(line) => line
            .split_whitespace()
            .map(|token| {
                token
                    .parse::<u64>()
                    .map_err(|err| format!("invalid change-point {token:?}: {err}"))
            })
            .collect::<Result<Vec<u64>, String>>()?,
    };
    for extra in lines {
        if !extra.trim().is_empty() {
            return Err(format!("unexpected content after line 2: {extra:?}"));
        }
    }
    Ok(SegmentationFile::ChangePoints { n, points })
}
