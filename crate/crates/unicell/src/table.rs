//! Rows of rooted and unrooted counts by genus, in markdown, CSV and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicell_core::{eps4_rooted, eps4_unrooted, BigCount};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub genus: u64,
    pub labelled: BigCount,
    pub unlabelled: BigCount,
}

impl OutputRecord {
    /// Panics for genus 0.
    pub fn compute(genus: u64) -> Self {
        OutputRecord {
            genus,
            labelled: eps4_rooted(genus).expect("genus >= 1"),
            unlabelled: eps4_unrooted(genus).expect("genus >= 1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    genus: u64,
    labelled: String,
    unlabelled: String,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("bad header {0:?}")]
    Header(String),
    #[error("line {line}: {reason}")]
    Row { line: usize, reason: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub const CSV_HEADER: &str = "genus,labelled,unlabelled";

pub fn render(records: &[OutputRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Md => {
            out.push_str("| g | Labelled | Unlabelled |\n|---|---:|---:|\n");
            for r in records {
                writeln!(out, "| {} | {} | {} |", r.genus, r.labelled, r.unlabelled).unwrap();
            }
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in records {
                writeln!(out, "{},{},{}", r.genus, r.labelled, r.unlabelled).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<_> = records
                .iter()
                .map(|r| JsonRow { genus: r.genus, labelled: r.labelled.to_string(), unlabelled: r.unlabelled.to_string() })
                .collect();
            out = serde_json::to_string(&rows).expect("strings serialize");
            out.push('\n');
        }
    }
    out
}

fn count(text: &str, line: usize) -> Result<BigCount, TableError> {
    BigCount::from_str(text).map_err(|e| TableError::Row { line, reason: format!("{text:?}: {e}") })
}

pub fn parse_csv(text: &str) -> Result<Vec<OutputRecord>, TableError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != CSV_HEADER {
        return Err(TableError::Header(header.to_owned()));
    }
    lines
        .enumerate()
        .map(|(i, l)| {
            let line = i + 2;
            let cells: Vec<_> = l.split(',').collect();
            let [g, lab, unl] = cells[..] else {
                return Err(TableError::Row { line, reason: format!("expected 3 cells, got {}", cells.len()) });
            };
            let genus = g.parse().map_err(|e| TableError::Row { line, reason: format!("genus {g:?}: {e}") })?;
            Ok(OutputRecord { genus, labelled: count(lab, line)?, unlabelled: count(unl, line)? })
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<OutputRecord>, TableError> {
    let rows: Vec<JsonRow> = serde_json::from_str(text)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| {
            Ok(OutputRecord { genus: r.genus, labelled: count(&r.labelled, i + 1)?, unlabelled: count(&r.unlabelled, i + 1)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<OutputRecord> {
        (1..=15).map(OutputRecord::compute).collect()
    }

    #[test]
    fn first_row_json() {
        assert_eq!(render(&rows()[..1], Format::Json), "[{\"genus\":1,\"labelled\":\"1\",\"unlabelled\":\"1\"}]\n");
    }

    #[test]
    fn csv_and_json_round_trip() {
        let r = rows();
        assert_eq!(parse_csv(&render(&r, Format::Csv)).unwrap(), r);
        assert_eq!(parse_json(&render(&r, Format::Json)).unwrap(), r);
    }

    #[test]
    fn markdown_has_one_line_per_row() {
        let md = render(&rows(), Format::Md);
        assert_eq!(md.lines().count(), 17);
        assert!(md.contains("| 2 | 45 | 6 |"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_csv("g,l,u\n"), Err(TableError::Header(_))));
        assert!(matches!(parse_csv("genus,labelled,unlabelled\n1,1e3,1\n"), Err(TableError::Row { line: 2, .. })));
        assert!(matches!(parse_json(r#"[{"genus":1,"labelled":1,"unlabelled":"1"}]"#), Err(TableError::Json(_))));
    }
}
