//! CSV and JSON report writers. Output depends only on the rows, so reports
//! are byte-identical across runs and thread counts.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use super::{rank_two_disagrees, status_summary, CensusRow, Status, TheoremReport, VerifyRecord};
use crate::family::Fraction;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

fn csv_block<T: Serialize>(rows: &[T], header: &[&str], out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}

fn json<T: Serialize>(value: &T, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Plain table of serializable rows: CSV with the given header, or a JSON array.
pub fn write_table<T: Serialize>(
    rows: &[T],
    header: &[&str],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Csv => csv_block(rows, header, out),
        Format::Json => json(&rows, out),
    }
}

const RECORD_COLUMNS: [&str; 7] = ["label", "order", "kind", "expected", "computed", "status", "citation"];

/// Verification rows followed by a per-status count.
pub fn write_records(rows: &[VerifyRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    let summary = status_summary(rows);
    match format {
        Format::Csv => {
            csv_block(rows, &RECORD_COLUMNS, out)?;
            writeln!(out)?;
            csv_block(&summary, &["status", "count"], out)
        }
        Format::Json => {
            let summary: BTreeMap<String, usize> = summary.into_iter().map(|(s, n)| (s.to_string(), n)).collect();
            json(&serde_json::json!({ "rows": rows, "summary": summary }), out)
        }
    }
}

/// Census rows followed by the histogram of nonpower counts.
pub fn write_census(
    rows: &[CensusRow],
    histogram: &BTreeMap<usize, usize>,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            csv_block(rows, &["name", "order", "exponent", "s", "ps", "nps", "error"], out)?;
            writeln!(out)?;
            let hist: Vec<(usize, usize)> = histogram.iter().map(|(&k, &v)| (k, v)).collect();
            csv_block(&hist, &["nps", "count"], out)
        }
        Format::Json => {
            let hist: Vec<_> = histogram.iter().map(|(k, v)| serde_json::json!({ "nps": k, "count": v })).collect();
            json(&serde_json::json!({ "rows": rows, "histogram": hist }), out)
        }
    }
}

#[derive(Serialize)]
struct RankTwoRow<'a> {
    label: &'a str,
    order: u64,
    formula: Fraction,
    oracle: Option<usize>,
    disagrees: bool,
    status: Status,
}

/// Closed form next to the enumerated value for each rank-two abelian row,
/// flagging the rows where they differ.
pub fn write_rank_two(rows: &[VerifyRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    let table: Vec<RankTwoRow> = rows
        .iter()
        .map(|r| RankTwoRow {
            label: &r.label,
            order: r.order,
            formula: r.expected,
            oracle: r.computed,
            disagrees: rank_two_disagrees(r),
            status: r.status,
        })
        .collect();
    let disagreements = table.iter().filter(|r| r.disagrees).count();
    match format {
        Format::Csv => {
            csv_block(&table, &["label", "order", "formula", "oracle", "disagrees", "status"], out)?;
            writeln!(out)?;
            csv_block(&[(table.len(), disagreements)], &["rows", "disagreements"], out)
        }
        Format::Json => json(&serde_json::json!({ "rows": table, "disagreements": disagreements }), out),
    }
}

pub fn write_theorem_report(report: &TheoremReport, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            csv_block(&report.soundness, &["k", "member", "group", "order", "computed", "status", "note"], out)?;
            writeln!(out)?;
            csv_block(&report.distinct, &["k", "left", "right", "isomorphic"], out)?;
            if !report.completeness.is_empty() {
                writeln!(out)?;
                csv_block(&report.completeness, &["name", "order", "nps", "matched"], out)?;
            }
            Ok(())
        }
        Format::Json => json(report, out),
    }
}
