//! Report records and their JSON and CSV renderings.

use std::collections::BTreeMap;
use std::io::Write;

use leflab_core::lefjordan::{Partition, WlpResult};
use leflab_core::locus::LocusReport;
use leflab_core::predict::Prediction;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliResult;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputEcho {
    Ci { degrees: Vec<usize> },
    Monomial { degrees: Vec<usize> },
    Ideal { n: usize, generators: Vec<String>, digest: String },
    Points { n: usize, count: usize, socle_degree: usize, digest: String },
    Degrees { degrees: Vec<usize> },
    Hvector { hvector: Vec<usize> },
}

impl InputEcho {
    pub fn label(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        match self {
            InputEcho::Ci { degrees } => format!("ci:{}", join(degrees)),
            InputEcho::Monomial { degrees } => format!("monomial:{}", join(degrees)),
            InputEcho::Ideal { digest, .. } => format!("ideal:{}", &digest[..12]),
            InputEcho::Points { digest, .. } => format!("points:{}", &digest[..12]),
            InputEcho::Degrees { degrees } => format!("degrees:{}", join(degrees)),
            InputEcho::Hvector { hvector } => format!("hvector:{}", join(hvector)),
        }
    }
}

/// The locus as a whole, intersected over the degrees used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalLocus {
    pub projective_dimension: isize,
    pub codim: usize,
    pub degree: u64,
    pub empty: bool,
    pub gorenstein: bool,
    pub degrees_used: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JordanEntry {
    /// 1-based indices of the variables with nonzero coefficient.
    pub support: Vec<usize>,
    pub coefficients: Vec<String>,
    pub partition: Partition,
    pub compact: String,
    pub predicted: Option<Partition>,
    pub weak_lefschetz: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub computed: Value,
    pub predicted: Value,
    pub matches: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRecord {
    pub version: u32,
    pub command: String,
    pub input: InputEcho,
    pub field: String,
    pub seed: u64,
    pub hvector: Option<Vec<usize>>,
    pub loci: Vec<LocusReport>,
    pub total: Option<TotalLocus>,
    pub wlp: Option<WlpResult>,
    pub jordan: Vec<JordanEntry>,
    pub predictions: Vec<Prediction>,
    pub comparisons: Vec<Comparison>,
    pub mismatches: Vec<String>,
    pub details: BTreeMap<String, Value>,
    pub errors: Vec<String>,
    pub timings: Timings,
}

impl ReportRecord {
    pub fn new(command: &str, input: InputEcho, field: String, seed: u64) -> ReportRecord {
        ReportRecord {
            version: SCHEMA_VERSION,
            command: command.to_string(),
            input,
            field,
            seed,
            hvector: None,
            loci: Vec::new(),
            total: None,
            wlp: None,
            jordan: Vec::new(),
            predictions: Vec::new(),
            comparisons: Vec::new(),
            mismatches: Vec::new(),
            details: BTreeMap::new(),
            errors: Vec::new(),
            timings: Timings::default(),
        }
    }

    /// Records a comparison, adding a mismatch entry when the values differ.
    pub fn compare<T: Serialize + PartialEq>(&mut self, quantity: &str, computed: T, predicted: T) {
        let matches = computed == predicted;
        let computed = serde_json::to_value(&computed).unwrap_or(Value::Null);
        let predicted = serde_json::to_value(&predicted).unwrap_or(Value::Null);
        if !matches {
            self.mismatches
                .push(format!("{quantity}: computed {computed}, predicted {predicted}"));
        }
        self.comparisons.push(Comparison {
            quantity: quantity.to_string(),
            computed,
            predicted,
            matches,
        });
    }

    pub fn detail<T: Serialize>(&mut self, key: &str, value: T) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    /// The record as JSON with the timing fields removed.
    pub fn without_timings(&self) -> Value {
        let mut v = serde_json::to_value(self).unwrap_or(Value::Null);
        if let Value::Object(m) = &mut v {
            m.remove("timings");
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// One CSV row per degree report, or a single summary row.
#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    command: &'a str,
    input: String,
    field: &'a str,
    seed: u64,
    hvector: String,
    degree: Option<usize>,
    h_i: Option<usize>,
    h_next: Option<usize>,
    expected_codim: Option<usize>,
    expected_degree: Option<u128>,
    computed_dimension: Option<isize>,
    computed_codim: Option<usize>,
    computed_degree: Option<u64>,
    empty: Option<bool>,
    saturation_flag: Option<bool>,
    minor_count: Option<usize>,
    wlp: Option<String>,
    mismatches: usize,
    errors: usize,
}

pub fn write_csv<W: Write>(out: W, records: &[ReportRecord]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        let base = || CsvRow {
            command: &r.command,
            input: r.input.label(),
            field: &r.field,
            seed: r.seed,
            hvector: r
                .hvector
                .as_ref()
                .map(|h| h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .unwrap_or_default(),
            degree: None,
            h_i: None,
            h_next: None,
            expected_codim: None,
            expected_degree: None,
            computed_dimension: None,
            computed_codim: None,
            computed_degree: None,
            empty: None,
            saturation_flag: None,
            minor_count: None,
            wlp: r.wlp.as_ref().map(|w| format!("{:?}", w.verdict).to_lowercase()),
            mismatches: r.mismatches.len(),
            errors: r.errors.len(),
        };
        if r.loci.is_empty() {
            w.serialize(base())?;
        }
        for l in &r.loci {
            w.serialize(CsvRow {
                degree: Some(l.degree),
                h_i: Some(l.shape.0),
                h_next: Some(l.shape.1),
                expected_codim: Some(l.expected_codim),
                expected_degree: l.expected_degree,
                computed_dimension: Some(l.computed_dimension),
                computed_codim: Some(l.computed_codim),
                computed_degree: Some(l.computed_degree),
                empty: Some(l.empty),
                saturation_flag: Some(l.saturation_flag),
                minor_count: Some(l.minor_count),
                ..base()
            })?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// A single record as pretty JSON, several as a JSON array.
pub fn write_json<W: Write>(mut out: W, records: &[ReportRecord]) -> CliResult<()> {
    if let [one] = records {
        serde_json::to_writer_pretty(&mut out, one)?;
    } else {
        serde_json::to_writer_pretty(&mut out, records)?;
    }
    writeln!(out).map_err(|e| crate::error::CliError::io("<output>", e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatches_track_comparisons() {
        let mut r = ReportRecord::new("verify", InputEcho::Ci { degrees: vec![2, 2] }, "fp:32003".into(), 0);
        r.compare("codim", 2usize, 2usize);
        assert!(r.mismatches.is_empty());
        r.compare("degree", Some(3u64), Some(4u64));
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.comparisons.iter().filter(|c| !c.matches).count(), 1);
    }

    #[test]
    fn csv_has_one_row_without_loci() {
        let r = ReportRecord::new("hf", InputEcho::Monomial { degrees: vec![2, 3] }, "fp:32003".into(), 7);
        let mut buf = Vec::new();
        write_csv(&mut buf, &[r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().starts_with("hf,\"monomial:2,3\",fp:32003,7"));
    }
}
