//! Argument definitions and subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use leflab_core::groebner::DEFAULT_MAX_REDUCTIONS;
use leflab_core::locus::DEFAULT_MINOR_CAP;
use leflab_core::FieldSpec;
use rayon::prelude::*;

use crate::census::{census_sweep, census_tuples, tuple_seed, CensusOptions, CENSUS_DEGREE_CAP};
use crate::error::{CliError, CliResult};
use crate::input::{parse_degrees, parse_ideal_file, parse_point_file};
use crate::report::{write_csv, write_json, Format, ReportRecord};
use crate::run::{self, JordanRequest, PredictInput, Settings, Source};
use crate::suite::{render_table, run_suite, Status, SuiteOptions};
use crate::with_field;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;

/// A comma-separated list such as `2,2,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees(pub Vec<usize>);

impl FromStr for Degrees {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Degrees> {
        parse_degrees(s).map(Degrees)
    }
}

#[derive(Debug, Parser)]
#[command(name = "leflab", version, about = "Non-Lefschetz loci of graded artinian algebras")]
pub struct Cli {
    #[arg(long, global = true, env = "LEFLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// `fp:<prime>` or `q`; ideal and point files carry their own field.
    #[arg(long, global = true, default_value = "fp:32003")]
    pub field: FieldSpec,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_MINOR_CAP)]
    pub minor_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_REDUCTIONS)]
    pub max_reductions: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Random complete intersection of these degrees.
    #[arg(long)]
    pub ci: Option<Degrees>,
    /// Monomial complete intersection of these degrees.
    #[arg(long)]
    pub monomial: Option<Degrees>,
    /// Ideal file.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Point file; the Gorenstein algebra of its points.
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function.
    Hf {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        socle_degree: Option<usize>,
    },
    /// Weak Lefschetz verdict with a witness.
    Wlp {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        socle_degree: Option<usize>,
        #[arg(long, default_value_t = leflab_core::lefjordan::DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Non-Lefschetz locus in every relevant degree.
    Locus {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        socle_degree: Option<usize>,
    },
    /// Jordan types of linear forms.
    Jordan {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        socle_degree: Option<usize>,
        /// 1-based support of a sum of variables, e.g. `1,3`; repeatable.
        #[arg(long)]
        support: Vec<Degrees>,
        /// Every support, one per multiset of degrees for monomial inputs.
        #[arg(long)]
        all_supports: bool,
        /// Integer coefficients of a linear form.
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
    },
    /// Closed-form predictions only.
    Predict {
        #[arg(long, group = "what")]
        ci: Option<Degrees>,
        #[arg(long, group = "what")]
        monomial: Option<Degrees>,
        #[arg(long, group = "what")]
        hvector: Option<Degrees>,
    },
    /// Computed locus against predictions.
    Verify {
        #[arg(long)]
        ci: Option<Degrees>,
        #[arg(long)]
        monomial: Option<Degrees>,
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        socle_degree: Option<usize>,
        /// `n=<int>`: every sorted complete intersection type.
        #[arg(long)]
        sweep: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
    },
    /// Resumable JSONL sweep over complete intersection types.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = CENSUS_DEGREE_CAP)]
        degree_cap: usize,
    },
    /// The fixed acceptance suite.
    Paper {
        /// Run only these checks (name or number); repeatable.
        #[arg(long)]
        only: Vec<String>,
    },
}

impl Cli {
    fn settings(&self) -> Settings {
        Settings {
            seed: self.seed,
            minor_cap: self.minor_cap,
            max_reductions: self.max_reductions,
            ..Settings::default()
        }
    }
}

fn source_of(input: &InputArgs, socle_degree: Option<usize>) -> CliResult<Source> {
    if let Some(d) = &input.ci {
        return Ok(Source::Ci(d.0.clone()));
    }
    if let Some(d) = &input.monomial {
        return Ok(Source::Monomial(d.0.clone()));
    }
    if let Some(p) = &input.ideal {
        return Ok(Source::Ideal(parse_ideal_file(p)?));
    }
    if let Some(p) = &input.points {
        return points_source(p, socle_degree);
    }
    Err(CliError::Usage("one of --ci, --monomial, --ideal, --points is required".into()))
}

fn points_source(path: &Path, socle_degree: Option<usize>) -> CliResult<Source> {
    let file = parse_point_file(path)?;
    let e = socle_degree
        .or(file.socle_degree)
        .ok_or_else(|| CliError::Usage("point input needs --socle-degree or an e= line".into()))?;
    Ok(Source::Points { file, socle_degree: e })
}

fn support_list(d: &Degrees, n: usize) -> CliResult<Vec<usize>> {
    d.0.iter()
        .map(|&j| {
            if (1..=n).contains(&j) {
                Ok(j - 1)
            } else {
                Err(CliError::Usage(format!("support index {j} outside 1..={n}")))
            }
        })
        .collect()
}

fn parse_form(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("invalid linear form {text:?}")))
}

type Runner<'a> = dyn Fn(&Source, FieldSpec, &Settings) -> CliResult<ReportRecord> + 'a;

fn single(cli: &Cli, source: Source, runner: &Runner) -> CliResult<Vec<ReportRecord>> {
    let field = source.file_field().unwrap_or(cli.field);
    Ok(vec![runner(&source, field, &cli.settings())?])
}

fn emit(cli: &Cli, records: &[ReportRecord]) -> CliResult<()> {
    let write = |w: &mut dyn Write| match cli.format {
        Format::Json => write_json(w, records),
        Format::Csv => write_csv(w, records),
    };
    match &cli.out {
        Some(p) => {
            let mut f = std::fs::File::create(p).map_err(|e| CliError::io(p, e))?;
            write(&mut f)
        }
        None => write(&mut std::io::stdout().lock()),
    }
}

/// 2 if any record has a mismatch, else 1 if any has an error, else 0.
pub fn exit_code(records: &[ReportRecord]) -> u8 {
    if records.iter().any(|r| !r.mismatches.is_empty()) {
        EXIT_MISMATCH
    } else if records.iter().any(|r| !r.errors.is_empty()) {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn pool(jobs: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> CliResult<u8> {
    let records = match &cli.command {
        Command::Hf { input, socle_degree } => single(cli, source_of(input, *socle_degree)?, &|s, f, st| {
            Ok(with_field!(f, fd => run::run_hf(s, &fd, st)))
        })?,
        Command::Wlp {
            input,
            socle_degree,
            trials,
        } => {
            let trials = *trials;
            single(cli, source_of(input, *socle_degree)?, &|s, f, st| {
                let st = Settings { trials, ..*st };
                Ok(with_field!(f, fd => run::run_wlp(s, &fd, &st)))
            })?
        }
        Command::Locus { input, socle_degree } => single(cli, source_of(input, *socle_degree)?, &|s, f, st| {
            Ok(with_field!(f, fd => run::run_locus(s, &fd, st)))
        })?,
        Command::Jordan {
            input,
            socle_degree,
            support,
            all_supports,
            form,
        } => {
            let source = source_of(input, *socle_degree)?;
            let n = source.nvars();
            let req = JordanRequest {
                supports: support.iter().map(|d| support_list(d, n)).collect::<CliResult<_>>()?,
                all_supports: *all_supports,
                coefficients: form.as_deref().map(parse_form).transpose()?,
            };
            single(cli, source, &|s, f, st| Ok(with_field!(f, fd => run::run_jordan(s, &fd, st, &req))))?
        }
        Command::Predict { ci, monomial, hvector } => {
            let input = match (ci, monomial, hvector) {
                (Some(d), _, _) => PredictInput::Ci(d.0.clone()),
                (_, Some(d), _) => PredictInput::Monomial(d.0.clone()),
                (_, _, Some(h)) => PredictInput::Hvector(h.0.clone()),
                _ => return Err(CliError::Usage("one of --ci, --monomial, --hvector is required".into())),
            };
            vec![run::run_predict(&input, cli.field, &cli.settings())]
        }
        Command::Verify {
            ci,
            monomial,
            points,
            socle_degree,
            sweep,
            max_degree,
        } => {
            let verify = |s: &Source, f: FieldSpec, st: &Settings| -> CliResult<ReportRecord> {
                Ok(with_field!(f, fd => run::run_verify(s, &fd, st)))
            };
            if let Some(spec) = sweep {
                let n: usize = spec
                    .strip_prefix("n=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| CliError::Usage(format!("--sweep expects n=<int>, got {spec:?}")))?;
                let base = cli.settings();
                let tuples = census_tuples(n, *max_degree);
                pool(cli.jobs)?.install(|| {
                    tuples
                        .par_iter()
                        .map(|d| {
                            let st = Settings {
                                seed: tuple_seed(base.seed, d),
                                ..base
                            };
                            verify(&Source::Ci(d.clone()), cli.field, &st)
                        })
                        .collect::<CliResult<Vec<_>>>()
                })?
            } else {
                let source = match (ci, monomial, points) {
                    (Some(d), _, _) => Source::Ci(d.0.clone()),
                    (_, Some(d), _) => Source::Monomial(d.0.clone()),
                    (_, _, Some(p)) => points_source(p, *socle_degree)?,
                    _ => return Err(CliError::Usage("verify needs --ci, --monomial, --points or --sweep".into())),
                };
                single(cli, source, &verify)?
            }
        }
        Command::Census {
            n,
            max_degree,
            degree_cap,
        } => {
            let path = cli
                .out
                .clone()
                .ok_or_else(|| CliError::Usage("census needs --out <file.jsonl>".into()))?;
            let opts = CensusOptions {
                n: *n,
                max_degree: *max_degree,
                field: cli.field,
                jobs: cli.jobs,
                degree_cap: *degree_cap,
                settings: cli.settings(),
            };
            let summary = census_sweep(&opts, &path)?;
            println!("{}", serde_json::to_string(&summary)?);
            return Ok(if summary.mismatches > 0 {
                EXIT_MISMATCH
            } else if summary.errors > 0 {
                EXIT_ERROR
            } else {
                EXIT_OK
            });
        }
        Command::Paper { only } => {
            let opts = SuiteOptions {
                field: cli.field,
                seed: cli.seed,
            };
            let outcomes = run_suite(opts, only)?;
            print!("{}", render_table(&outcomes));
            if let Some(p) = &cli.out {
                let f = std::fs::File::create(p).map_err(|e| CliError::io(p, e))?;
                serde_json::to_writer_pretty(f, &outcomes)?;
            }
            return Ok(if outcomes.iter().any(|o| o.status == Status::Fail) {
                EXIT_MISMATCH
            } else if outcomes.iter().all(|o| o.passed()) {
                EXIT_OK
            } else {
                EXIT_ERROR
            });
        }
    };
    emit(cli, &records)?;
    Ok(exit_code(&records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::InputEcho;

    #[test]
    fn exit_codes_rank_mismatch_above_error() {
        let mut r = ReportRecord::new("verify", InputEcho::Ci { degrees: vec![2, 2] }, "fp:32003".into(), 0);
        assert_eq!(exit_code(&[r.clone()]), EXIT_OK);
        r.errors.push("budget".into());
        assert_eq!(exit_code(&[r.clone()]), EXIT_ERROR);
        r.compare("codim", 1usize, 2usize);
        assert_eq!(exit_code(&[r]), EXIT_MISMATCH);
    }

    #[test]
    fn degree_lists() {
        assert_eq!("2, 3,4".parse::<Degrees>().unwrap(), Degrees(vec![2, 3, 4]));
        assert!("2,,3".parse::<Degrees>().is_err());
        assert!("".parse::<Degrees>().is_err());
    }
}
