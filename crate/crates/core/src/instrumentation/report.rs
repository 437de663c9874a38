use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::BenchRecord;
use crate::error::{FibError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format `{other}` (expected csv or json)")),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        })
    }
}

/// Flat serialized form of a [`BenchRecord`]. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub algo: &'static str,
    pub n: u64,
    pub repeats: u32,
    pub wall_time_ns: u64,
    pub squarings: u64,
    pub mults: u64,
    pub adds: u64,
    pub shifts: u64,
    pub digits: u64,
}

impl From<&BenchRecord> for ReportRow {
    fn from(r: &BenchRecord) -> Self {
        ReportRow {
            algo: r.algo.id(),
            n: r.n,
            repeats: r.repeats,
            wall_time_ns: r.wall_time_ns,
            squarings: r.counters.squarings,
            mults: r.counters.mults,
            adds: r.counters.adds,
            shifts: r.counters.shifts,
            digits: r.digits,
        }
    }
}

/// Serializes records in the order given.
///
/// CSV has a header row then one row per record; JSON is an array of flat
/// objects with the same keys.
pub fn emit_report(records: &[BenchRecord], format: ReportFormat) -> Result<String> {
    if records.is_empty() {
        return Err(FibError::EmptyReport);
    }
    let rows: Vec<ReportRow> = records.iter().map(ReportRow::from).collect();
    let ser = |e: &dyn fmt::Display| FibError::Serialize(e.to_string());
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
            for row in &rows {
                w.serialize(row).map_err(|e| ser(&e))?;
            }
            let bytes = w.into_inner().map_err(|e| ser(&e))?;
            String::from_utf8(bytes).map_err(|e| ser(&e))
        }
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).map_err(|e| ser(&e))?;
            s.push('\n');
            Ok(s)
        }
    }
}
