//! Resumable sweeps over complete intersection types, one JSONL record per
//! sorted degree tuple.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::mpsc;
use std::time::Instant;

use leflab_core::field::derive_seed;
use leflab_core::predict::Prediction;
use leflab_core::{FieldSpec, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::{TotalLocus, SCHEMA_VERSION};
use crate::run::{Settings, Source};
use crate::with_field;

/// Largest permitted degree bound.
pub const CENSUS_DEGREE_CAP: usize = 8;

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub n: usize,
    pub max_degree: usize,
    pub field: FieldSpec,
    pub jobs: usize,
    pub degree_cap: usize,
    pub settings: Settings,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRecord {
    pub version: u32,
    pub n: usize,
    pub degrees: Vec<usize>,
    pub field: String,
    pub seed: u64,
    pub prediction: Option<Prediction>,
    pub computed: Option<TotalLocus>,
    pub matches: Option<bool>,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub written: usize,
    pub skipped: usize,
    pub mismatches: usize,
    pub errors: usize,
}

/// Sorted tuples `2 ≤ d₁ ≤ ⋯ ≤ dₙ ≤ max_degree`.
pub fn census_tuples(n: usize, max_degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in lo..=hi {
            cur.push(d);
            rec(n, d, hi, cur, out);
            cur.pop();
        }
    }
    rec(n, 2, max_degree, &mut cur, &mut out);
    out
}

/// Seed for one tuple, derived from the base seed and the tuple itself.
pub fn tuple_seed(base: u64, degrees: &[usize]) -> u64 {
    degrees
        .iter()
        .fold(derive_seed(base, degrees.len() as u64), |acc, &d| derive_seed(acc, d as u64))
}

/// Computes one census record.
pub fn census_record(degrees: &[usize], field: FieldSpec, settings: &Settings) -> CensusRecord {
    let clock = Instant::now();
    let seed = tuple_seed(settings.seed, degrees);
    let mut s = *settings;
    s.seed = seed;
    let source = Source::Ci(degrees.to_vec());
    let r: Result<crate::report::ReportRecord> =
        (|| Ok(with_field!(field, f => crate::run::run_verify(&source, &f, &s))))();
    let mut rec = CensusRecord {
        version: SCHEMA_VERSION,
        n: degrees.len(),
        degrees: degrees.to_vec(),
        field: field.to_string(),
        seed,
        prediction: None,
        computed: None,
        matches: None,
        mismatches: Vec::new(),
        error: None,
        elapsed_ms: 0,
    };
    match r {
        Ok(r) => {
            rec.prediction = r.predictions.first().cloned();
            rec.computed = r.total.clone();
            rec.error = r.errors.first().cloned();
            if rec.error.is_none() {
                rec.matches = Some(r.mismatches.is_empty());
            }
            rec.mismatches = r.mismatches;
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec.elapsed_ms = clock.elapsed().as_millis() as u64;
    rec
}

/// Degree tuples already present in a census file.
pub fn completed_tuples(path: &Path) -> CliResult<HashSet<Vec<usize>>> {
    let mut done = HashSet::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(CliError::io(path, e)),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        // A torn final line from an interrupted run is recomputed.
        let Ok(v) = serde_json::from_str::<serde_json::Value>(&line) else {
            continue;
        };
        if let Some(d) = v.get("degrees").and_then(|d| serde_json::from_value::<Vec<usize>>(d.clone()).ok()) {
            done.insert(d);
        }
    }
    Ok(done)
}

/// Truncates a partial last line left by an interrupted writer.
fn drop_torn_tail(path: &Path) -> CliResult<()> {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
        Err(e) => return Err(CliError::io(path, e)),
    };
    if bytes.last().is_some_and(|&b| b != b'\n') {
        let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |k| k + 1);
        let f = OpenOptions::new().write(true).open(path).map_err(|e| CliError::io(path, e))?;
        f.set_len(keep as u64).map_err(|e| CliError::io(path, e))?;
    }
    Ok(())
}

/// Appends a record for every tuple not yet in `path`.
pub fn census_sweep(opts: &CensusOptions, path: &Path) -> CliResult<CensusSummary> {
    if !(2..=4).contains(&opts.n) {
        return Err(CliError::Usage(format!("census needs n in 2..=4, got {}", opts.n)));
    }
    if opts.max_degree > opts.degree_cap {
        return Err(CliError::Usage(format!(
            "degree bound {} exceeds the cap {}",
            opts.max_degree, opts.degree_cap
        )));
    }
    drop_torn_tail(path)?;
    let done = completed_tuples(path)?;
    let todo: Vec<Vec<usize>> = census_tuples(opts.n, opts.max_degree)
        .into_iter()
        .filter(|t| !done.contains(t))
        .collect();
    let mut summary = CensusSummary {
        skipped: census_tuples(opts.n, opts.max_degree).len() - todo.len(),
        ..Default::default()
    };
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::io(path, e))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let (tx, rx) = mpsc::channel::<CensusRecord>();
    let write_result = std::thread::scope(|scope| {
        scope.spawn(|| {
            pool.install(|| {
                todo.par_iter()
                    .for_each_with(tx, |tx, t| {
                        let _ = tx.send(census_record(t, opts.field, &opts.settings));
                    })
            })
        });
        for rec in rx {
            let line = serde_json::to_string(&rec)?;
            writeln!(file, "{line}").map_err(|e| CliError::io(path, e))?;
            file.flush().map_err(|e| CliError::io(path, e))?;
            summary.written += 1;
            if rec.error.is_some() {
                summary.errors += 1;
            } else if rec.matches == Some(false) {
                summary.mismatches += 1;
            }
        }
        Ok::<(), CliError>(())
    });
    write_result?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_sorted_and_counted() {
        let t = census_tuples(3, 5);
        assert_eq!(t.len(), 20);
        assert!(t.iter().all(|v| v.windows(2).all(|w| w[0] <= w[1])));
        assert_eq!(census_tuples(4, 3).len(), 5);
    }

    #[test]
    fn seeds_depend_on_tuple() {
        assert_ne!(tuple_seed(0, &[2, 3]), tuple_seed(0, &[3, 2]));
        assert_eq!(tuple_seed(9, &[2, 2, 3]), tuple_seed(9, &[2, 2, 3]));
    }
}
