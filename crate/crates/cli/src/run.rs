//! The analyses behind each subcommand.

use std::time::Instant;

use leflab_core::artinian::{ci_hvector, gorenstein_from_points, random_ci, GradedAlgebra, HVector, LinearForm};
use leflab_core::field::{derive_seed, seeded_rng};
use leflab_core::groebner::GroebnerOptions;
use leflab_core::lefjordan::{has_wlp, is_weak_lefschetz, jordan_type, monomial_jordan_prediction, Partition};
use leflab_core::locus::{non_lefschetz_locus_with, FullLocus, LocusOptions, DEFAULT_MINOR_CAP};
use leflab_core::predict::{
    ci3_prediction, ci4_prediction, codim2_prediction, conjecture_prediction, dim_gor, dim_gor_difference,
    gor3_prediction, is_si_sequence, monomial_lefschetz_classifier, monomial_locus_summary, Prediction,
};
use leflab_core::{Error, Field, FieldSpec, Result};

use crate::input::{IdealFile, PointFile};
use crate::report::{InputEcho, JordanEntry, ReportRecord, TotalLocus};

/// Where an algebra comes from.
#[derive(Debug, Clone)]
pub enum Source {
    /// Random complete intersection of the given degrees.
    Ci(Vec<usize>),
    /// `(x₁^{d₁}, …, xₙ^{dₙ})`.
    Monomial(Vec<usize>),
    Ideal(IdealFile),
    /// Gorenstein algebra from points with socle degree `e`.
    Points { file: PointFile, socle_degree: usize },
}

impl Source {
    pub fn echo(&self) -> InputEcho {
        match self {
            Source::Ci(d) => InputEcho::Ci { degrees: d.clone() },
            Source::Monomial(d) => InputEcho::Monomial { degrees: d.clone() },
            Source::Ideal(f) => InputEcho::Ideal {
                n: f.n,
                generators: f.generators.iter().map(|g| g.text.clone()).collect(),
                digest: f.digest(),
            },
            Source::Points { file, socle_degree } => InputEcho::Points {
                n: file.n,
                count: file.points.len(),
                socle_degree: *socle_degree,
                digest: file.digest(),
            },
        }
    }

    /// The field fixed by an input file, if any.
    pub fn file_field(&self) -> Option<FieldSpec> {
        match self {
            Source::Ideal(f) => Some(f.field),
            Source::Points { file, .. } => Some(file.field),
            _ => None,
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Source::Ci(d) | Source::Monomial(d) => d.len(),
            Source::Ideal(f) => f.n,
            Source::Points { file, .. } => file.n,
        }
    }

    pub fn build<F: Field>(&self, field: &F, seed: u64) -> Result<GradedAlgebra<F>> {
        match self {
            Source::Ci(d) => random_ci(field, &sorted(d), seed),
            Source::Monomial(d) => GradedAlgebra::monomial_ci(field, d),
            Source::Ideal(f) => GradedAlgebra::build(field, f.n, f.polynomials(field)?),
            Source::Points { file, socle_degree } => {
                gorenstein_from_points(field, &file.points_in(field)?, *socle_degree, seed)
            }
        }
    }
}

fn sorted(d: &[usize]) -> Vec<usize> {
    let mut v = d.to_vec();
    v.sort_unstable();
    v
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub seed: u64,
    pub minor_cap: usize,
    pub max_reductions: usize,
    pub trials: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 0,
            minor_cap: DEFAULT_MINOR_CAP,
            max_reductions: GroebnerOptions::default().max_reductions,
            trials: leflab_core::lefjordan::DEFAULT_TRIALS,
        }
    }
}

impl Settings {
    pub fn locus_options(&self) -> LocusOptions {
        LocusOptions {
            minor_cap: self.minor_cap,
            groebner: GroebnerOptions {
                max_reductions: self.max_reductions,
            },
            seed: self.seed,
        }
    }
}

fn start<F: Field>(command: &str, source: &Source, field: &F, s: &Settings) -> ReportRecord {
    ReportRecord::new(command, source.echo(), field.spec().to_string(), s.seed)
}

/// Runs `body` on the algebra, recording failures instead of returning them.
fn with_algebra<F: Field>(
    command: &str,
    source: &Source,
    field: &F,
    s: &Settings,
    body: impl FnOnce(&GradedAlgebra<F>, &mut ReportRecord) -> Result<()>,
) -> ReportRecord {
    let clock = Instant::now();
    let mut r = start(command, source, field, s);
    match source.build(field, s.seed) {
        Ok(a) => {
            r.hvector = Some(a.hvector().values().to_vec());
            if let Err(e) = body(&a, &mut r) {
                r.errors.push(e.to_string());
            }
        }
        Err(e) => r.errors.push(e.to_string()),
    }
    r.timings.total_ms = clock.elapsed().as_millis() as u64;
    r
}

pub fn run_hf<F: Field>(source: &Source, field: &F, s: &Settings) -> ReportRecord {
    with_algebra("hf", source, field, s, |a, r| {
        if let Source::Ci(d) | Source::Monomial(d) = source {
            let expected = ci_hvector(&sorted(d))?;
            r.compare("hvector", a.hvector().values(), expected.values());
        }
        r.detail("gorenstein", a.is_gorenstein());
        r.detail("dimension", a.dim());
        Ok(())
    })
}

pub fn run_wlp<F: Field>(source: &Source, field: &F, s: &Settings) -> ReportRecord {
    with_algebra("wlp", source, field, s, |a, r| {
        let w = has_wlp(a, s.seed, s.trials)?;
        if let Source::Monomial(d) = source {
            let all: Vec<usize> = (0..d.len()).collect();
            let sorted_d = sorted(d);
            if let Ok(predicted) = monomial_lefschetz_classifier(&sorted_d, &all) {
                let l = LinearForm::from_support(field, d.len(), &all)?;
                r.compare("sum_of_variables_is_lefschetz", is_weak_lefschetz(a, &l)?, predicted);
            }
        }
        r.wlp = Some(w);
        Ok(())
    })
}

fn total_of<F: Field>(full: &FullLocus<F>, n: usize) -> TotalLocus {
    let pd = full.dimension.projective_dimension;
    let empty = pd < 0;
    TotalLocus {
        projective_dimension: pd,
        codim: if empty { n } else { (n as isize - 1 - pd) as usize },
        degree: if empty { 0 } else { full.dimension.degree },
        empty,
        gorenstein: full.gorenstein,
        degrees_used: full.per_degree.iter().map(|d| d.report.degree).collect(),
    }
}

fn fill_locus<F: Field>(a: &GradedAlgebra<F>, r: &mut ReportRecord, s: &Settings) -> Result<TotalLocus> {
    let full = non_lefschetz_locus_with(a, a.is_gorenstein(), s.locus_options())?;
    let total = total_of(&full, a.nvars());
    r.loci = full.reports();
    r.total = Some(total.clone());
    Ok(total)
}

pub fn run_locus<F: Field>(source: &Source, field: &F, s: &Settings) -> ReportRecord {
    with_algebra("locus", source, field, s, |a, r| fill_locus(a, r, s).map(|_| ()))
}

/// Closed-form predictions of the whole locus for an algebra source.
pub fn predictions_for(source: &Source, h: &HVector) -> Result<Vec<Prediction>> {
    match source {
        Source::Ci(d) => {
            let d = sorted(d);
            Ok(vec![match d.len() {
                1 => return Ok(Vec::new()),
                2 => codim2_prediction(d[0], d[1])?,
                3 => ci3_prediction(d[0], d[1], d[2])?,
                4 => ci4_prediction([d[0], d[1], d[2], d[3]])?,
                _ => conjecture_prediction(&d)?,
            }])
        }
        Source::Monomial(d) => Ok(vec![monomial_locus_summary(d)?.prediction]),
        Source::Points { file, .. } if file.n == 3 && h.get(1) == 3 && h.is_symmetric() => {
            Ok(vec![gor3_prediction(h)?])
        }
        _ => Ok(Vec::new()),
    }
}

pub fn compare_total(r: &mut ReportRecord, total: &TotalLocus, p: &Prediction) {
    r.compare("empty", total.empty, p.empty);
    r.compare("codim", total.codim, p.codim);
    if let (Some(d), false) = (p.degree, total.empty) {
        r.compare("degree", total.degree as u128, d);
    }
}

pub fn run_verify<F: Field>(source: &Source, field: &F, s: &Settings) -> ReportRecord {
    with_algebra("verify", source, field, s, |a, r| {
        if let Source::Ci(d) | Source::Monomial(d) = source {
            r.compare("hvector", a.hvector().values(), ci_hvector(&sorted(d))?.values());
        }
        let predictions = predictions_for(source, a.hvector())?;
        let total = fill_locus(a, r, s)?;
        for p in &predictions {
            compare_total(r, &total, p);
        }
        for l in r.loci.clone() {
            if !l.empty && !l.saturation_flag {
                if let Some(d) = l.expected_degree {
                    r.compare(&format!("expected_degree_{}", l.degree), l.computed_degree as u128, d);
                }
            }
        }
        r.predictions = predictions;
        Ok(())
    })
}

/// Which linear forms the `jordan` subcommand examines.
#[derive(Debug, Clone, Default)]
pub struct JordanRequest {
    /// 0-based supports of `Σ x_j`.
    pub supports: Vec<Vec<usize>>,
    /// One representative support per multiset of selected degrees.
    pub all_supports: bool,
    pub coefficients: Option<Vec<i64>>,
}

/// Nonempty subsets of `0..n`, largest first.
pub fn all_supports(n: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&j| mask & (1 << j) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    subsets
}

/// Nonempty subsets of `0..n`, keeping the first subset for each multiset
/// of selected degrees, largest subsets first.
pub fn canonical_supports(degrees: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = std::collections::HashSet::new();
    all_supports(degrees.len())
        .into_iter()
        .filter(|s| {
            let mut key: Vec<usize> = s.iter().map(|&j| degrees[j]).collect();
            key.sort_unstable();
            seen.insert(key)
        })
        .collect()
}

pub fn run_jordan<F: Field>(source: &Source, field: &F, s: &Settings, req: &JordanRequest) -> ReportRecord {
    with_algebra("jordan", source, field, s, |a, r| {
        let n = a.nvars();
        let mut forms: Vec<(LinearForm<F>, Option<Vec<usize>>)> = Vec::new();
        let mut supports = req.supports.clone();
        if req.all_supports {
            match source {
                Source::Monomial(d) => supports.extend(canonical_supports(d)),
                _ => supports.extend(all_supports(n)),
            }
        }
        for sup in &supports {
            forms.push((LinearForm::from_support(field, n, sup)?, Some(sup.clone())));
        }
        if let Some(c) = &req.coefficients {
            if c.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
            forms.push((LinearForm::new(field, c.iter().map(|&x| field.from_i64(x)).collect())?, None));
        }
        if forms.is_empty() {
            let mut rng = seeded_rng(derive_seed(s.seed, 0x6a6f7264));
            forms.push((LinearForm::random(field, n, &mut rng), None));
        }
        for (l, sup) in forms {
            let partition = jordan_type(a, &l)?;
            let predicted = match (source, &sup) {
                (Source::Monomial(d), Some(sup)) => Some(monomial_jordan_prediction(d, sup)?),
                _ => None,
            };
            if let Some(p) = &predicted {
                r.compare(&format!("jordan_{}", support_label(&l.support(field))), &partition, p);
            }
            r.compare(
                &format!("partition_sum_{}", support_label(&l.support(field))),
                partition.sum(),
                a.dim(),
            );
            r.jordan.push(JordanEntry {
                support: l.support(field).iter().map(|j| j + 1).collect(),
                coefficients: l.coeffs().iter().map(|c| field.format(c)).collect(),
                compact: partition.compact(),
                weak_lefschetz: is_weak_lefschetz(a, &l)?,
                partition,
                predicted,
            });
        }
        Ok(())
    })
}

fn support_label(sup: &[usize]) -> String {
    sup.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join("")
}

/// What the `predict` subcommand evaluates.
#[derive(Debug, Clone)]
pub enum PredictInput {
    Ci(Vec<usize>),
    Monomial(Vec<usize>),
    Hvector(Vec<usize>),
}

pub fn run_predict(input: &PredictInput, field: FieldSpec, s: &Settings) -> ReportRecord {
    let clock = Instant::now();
    let echo = match input {
        PredictInput::Ci(d) => InputEcho::Ci { degrees: d.clone() },
        PredictInput::Monomial(d) => InputEcho::Monomial { degrees: d.clone() },
        PredictInput::Hvector(h) => InputEcho::Hvector { hvector: h.clone() },
    };
    let mut r = ReportRecord::new("predict", echo, field.to_string(), s.seed);
    if let Err(e) = fill_predict(input, &mut r) {
        r.errors.push(e.to_string());
    }
    r.timings.total_ms = clock.elapsed().as_millis() as u64;
    r
}

fn fill_predict(input: &PredictInput, r: &mut ReportRecord) -> Result<()> {
    match input {
        PredictInput::Ci(d) => {
            let d = sorted(d);
            r.hvector = Some(ci_hvector(&d)?.values().to_vec());
            r.predictions = predictions_for(&Source::Ci(d.clone()), &ci_hvector(&d)?)?;
            if matches!(d.len(), 3 | 4) {
                let p = conjecture_prediction(&d)?;
                if !r.predictions.iter().any(|q| (q.codim, q.degree) == (p.codim, p.degree)) {
                    r.predictions.push(p);
                }
            }
        }
        PredictInput::Monomial(d) => {
            let summary = monomial_locus_summary(d)?;
            r.hvector = Some(ci_hvector(&sorted(d))?.values().to_vec());
            r.detail("alpha", summary.alpha);
            r.detail("defining_monomial", &summary.defining_monomial);
            let sd = sorted(d);
            let classified: Vec<(String, bool)> = canonical_supports(&sd)
                .into_iter()
                .map(|sup| {
                    let ok = monomial_lefschetz_classifier(&sd, &sup).unwrap_or(false);
                    (support_label(&sup), ok)
                })
                .collect();
            r.detail("lefschetz_supports", classified);
            let jordan: Vec<(String, Partition)> = canonical_supports(&sd)
                .into_iter()
                .filter_map(|sup| Some((support_label(&sup), monomial_jordan_prediction(&sd, &sup).ok()?)))
                .collect();
            r.detail("jordan", jordan);
            r.predictions.push(summary.prediction);
        }
        PredictInput::Hvector(h) => {
            let hv = HVector::new(h.clone())?;
            r.hvector = Some(h.clone());
            let si = is_si_sequence(&hv, hv.get(1) == 3);
            r.detail("si", &si);
            if hv.socle_degree() % 2 == 1 && hv.is_symmetric() {
                r.detail("dim_gor", dim_gor(&hv)?);
                r.detail("dim_gor_difference", dim_gor_difference(&hv)?);
            }
            if hv.get(1) == 3 {
                r.predictions.push(gor3_prediction(&hv)?);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use leflab_core::PrimeField;

    #[test]
    fn canonical_supports_of_equal_degrees() {
        let s = canonical_supports(&[2, 2, 2, 2]);
        assert_eq!(s, vec![vec![0, 1, 2, 3], vec![0, 1, 2], vec![0, 1], vec![0]]);
        assert_eq!(canonical_supports(&[2, 3]).len(), 3);
    }

    #[test]
    fn verify_codim_two() {
        let f = PrimeField::default();
        let r = run_verify(&Source::Ci(vec![2, 3]), &f, &Settings::default());
        assert!(r.errors.is_empty(), "{:?}", r.errors);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        assert_eq!(r.total.unwrap().degree, 2);
    }

    #[test]
    fn jordan_all_supports() {
        let f = PrimeField::default();
        let req = JordanRequest {
            all_supports: true,
            ..Default::default()
        };
        let r = run_jordan(&Source::Monomial(vec![2, 2, 2, 2]), &f, &Settings::default(), &req);
        let got: Vec<String> = r.jordan.iter().map(|j| j.partition.to_string()).collect();
        assert_eq!(
            got,
            vec!["[5,3,3,3,1,1]", "[4,4,2,2,2,2]", "[3,3,3,3,1,1,1,1]", "[2,2,2,2,2,2,2,2]"]
        );
        assert!(r.mismatches.is_empty());
    }
}
