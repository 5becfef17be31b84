//! The fixed acceptance suite: thirteen named checks, each reporting pass,
//! fail, genericity failure or error.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use leflab_core::artinian::{ci_hvector, gorenstein_from_points, random_ci, GradedAlgebra, LinearForm};
use leflab_core::field::{derive_seed, seeded_rng};
use leflab_core::lefjordan::{is_weak_lefschetz, jordan_type, monomial_jordan_prediction, Partition};
use leflab_core::linalg::det_linear_matrix;
use leflab_core::locus::{
    dual_matrix, expected_codim_degree, gorenstein_middle_degree, is_in_locus, locus_in_degree_with,
    non_lefschetz_locus, verify_inclusion_with, LocusOptions,
};
use leflab_core::poly::binomial;
use leflab_core::predict::{
    aci_dimension_counts, ci4_middle_difference, dim_gor, dim_gor_difference, gor3_prediction, h_from_g,
    is_si_sequence, lower_middle, macaulay_bound, monomial_lefschetz_classifier,
};
use leflab_core::{Error, Field, FieldSpec, Monomial, Polynomial, Result};
use rand::Rng;
use serde::Serialize;

use crate::census::{census_tuples, tuple_seed};
use crate::error::{CliError, CliResult};
use crate::run::{all_supports, run_verify, Settings, Source};
use crate::with_field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckInfo {
    pub index: usize,
    pub name: &'static str,
    pub title: &'static str,
    pub limit: Option<Duration>,
}

const fn check(index: usize, name: &'static str, title: &'static str, limit_s: u64) -> CheckInfo {
    CheckInfo {
        index,
        name,
        title,
        limit: if limit_s == 0 { None } else { Some(Duration::from_secs(limit_s)) },
    }
}

pub const CHECKS: [CheckInfo; 13] = [
    check(1, "ci-2222-points", "random CI (2,2,2,2): locus is 20 points", 30),
    check(2, "ci-3333-empty", "random CI (3,3,3,3): locus is empty", 300),
    check(3, "monomial-444", "monomial (4,4,4): middle determinant is c*(a1*a2*a3)^4", 60),
    check(4, "monomial-2233-radical", "monomial (2,2,3,3): sampled membership in V(a1a3a4, a2a3a4)", 0),
    check(5, "jordan-2222", "Jordan types of monomial CIs", 0),
    check(6, "monomial-classifier", "monomial classifier against direct ranks", 600),
    check(7, "ci3-sweep", "three variables, degrees up to 5", 0),
    check(8, "hf-n4", "four-variable middle Hilbert function closed forms", 0),
    check(9, "dim-gor", "dimension of Gorenstein families", 0),
    check(10, "gorenstein-points", "height three Gorenstein algebras from points", 0),
    check(11, "codim2-ci", "two variables: empty iff d1 = d2", 0),
    check(12, "inclusions", "locus inclusions for the Gorenstein algebras above", 0),
    check(13, "properties", "partition sums, duality, expected degrees, determinism", 0),
];

/// Alternative names accepted by [`find_check`].
pub const ALIASES: [(&str, &str); 1] = [("monomial-443", "monomial-444")];

pub fn find_check(name: &str) -> Option<CheckInfo> {
    let name = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, t)| t);
    CHECKS
        .iter()
        .copied()
        .find(|c| c.name == name || c.index.to_string() == name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    GenericityFailure,
    Error,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::GenericityFailure => "GENERICITY",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub index: usize,
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<22} {:>8.1}s  {}",
            self.status,
            self.index,
            self.name,
            self.elapsed_ms as f64 / 1000.0,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct SuiteOptions {
    pub field: FieldSpec,
    pub seed: u64,
}


/// `Ok(detail)` on success, `Err(reason)` on a mismatch.
type Verdict = std::result::Result<String, String>;

fn verdict(failures: Vec<String>, detail: String) -> Verdict {
    if failures.is_empty() {
        Ok(detail)
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Err(format!("{} failure(s): {}", failures.len(), shown.join("; ")))
    }
}

/// Seed used by check `index`.
pub fn check_seed(base: u64, index: usize) -> u64 {
    derive_seed(base, 0x5eed_0000 + index as u64)
}

pub fn run_check(info: CheckInfo, opts: SuiteOptions) -> CheckOutcome {
    let clock = Instant::now();
    let result: Result<Verdict> = (|| with_field!(opts.field, f => dispatch(info.index, &f, opts.seed)))();
    let elapsed = clock.elapsed();
    let (status, detail) = match result {
        Ok(Ok(d)) => match info.limit {
            Some(limit) if elapsed > limit => (Status::Fail, format!("{d}; exceeded {}s", limit.as_secs())),
            _ => (Status::Pass, d),
        },
        Ok(Err(d)) => (Status::Fail, d),
        Err(e @ Error::GenericityFailure { .. }) => (Status::GenericityFailure, e.to_string()),
        Err(e) => (Status::Error, e.to_string()),
    };
    CheckOutcome {
        index: info.index,
        name: info.name.to_string(),
        status,
        detail,
        elapsed_ms: elapsed.as_millis() as u64,
    }
}

/// Runs the named checks, or all of them when `only` is empty.
pub fn run_suite(opts: SuiteOptions, only: &[String]) -> CliResult<Vec<CheckOutcome>> {
    let selected: Vec<CheckInfo> = if only.is_empty() {
        CHECKS.to_vec()
    } else {
        only.iter()
            .map(|n| find_check(n).ok_or_else(|| CliError::Usage(format!("unknown check {n:?}"))))
            .collect::<CliResult<_>>()?
    };
    Ok(selected.into_iter().map(|c| run_check(c, opts)).collect())
}

pub fn render_table(outcomes: &[CheckOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let _ = writeln!(s, "{}", o.line());
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let _ = writeln!(s, "{passed}/{} checks passed", outcomes.len());
    s
}

fn dispatch<F: Field>(index: usize, f: &F, seed: u64) -> Result<Verdict> {
    let s = check_seed(seed, index);
    match index {
        1 => ci_2222(f, s),
        2 => ci_3333(f, s),
        3 => monomial_444(f),
        4 => monomial_2233(f, s),
        5 => jordan_types(f),
        6 => classifier(f),
        7 => ci3_sweep(f, s),
        8 => Ok(hf_n4()),
        9 => dim_gor_check(s),
        10 => gorenstein_points(f, s),
        11 => codim2_sweep(f, s),
        12 => inclusions(f, seed),
        13 => properties(f, seed),
        _ => Err(Error::InvalidInput(format!("no check {index}"))),
    }
}

fn ci_2222<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let a = random_ci(f, &[2, 2, 2, 2], seed)?;
    let full = non_lefschetz_locus(&a, true)?;
    let (pd, deg) = (full.dimension.projective_dimension, full.dimension.degree);
    let detail = format!("projective dimension {pd}, degree {deg}");
    Ok(if (pd, deg) == (0, 20) { Ok(detail) } else { Err(detail) })
}

/// Whether the ideal contains a power of every variable.
fn contains_irrelevant_power<F: Field>(g: &leflab_core::groebner::GroebnerBasis<F>) -> bool {
    g.is_unit()
        || (0..g.nvars()).all(|j| g.leading_monomials().iter().any(|m| m.pure_power_var() == Some(j)))
}

fn ci_3333<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let a = random_ci(f, &[3, 3, 3, 3], seed)?;
    let full = non_lefschetz_locus(&a, true)?;
    let powers = contains_irrelevant_power(&full.total);
    let detail = format!(
        "empty {}, basis of {} elements contains powers of all variables: {powers}",
        full.is_empty(),
        full.total.len()
    );
    Ok(if full.is_empty() && powers { Ok(detail) } else { Err(detail) })
}

fn monomial_444<F: Field>(f: &F) -> Result<Verdict> {
    let a = GradedAlgebra::monomial_ci(f, &[4, 4, 4])?;
    let i = gorenstein_middle_degree(a.socle_degree()).unwrap_or(0);
    let b = dual_matrix(&a, i)?;
    let det = det_linear_matrix(b.matrix())?;
    let target = Polynomial::term(f, Monomial::from_exponents(&[4, 4, 4]), f.one());
    let (r, c) = b.shape();
    let detail = format!("{r}x{c} determinant {}", det.render("a"));
    Ok(if (r, c) == (12, 12) && !det.is_zero() && det.is_scalar_multiple_of(&target) {
        Ok(detail)
    } else {
        Err(detail)
    })
}

/// Random points with each coordinate zero with probability one third.
fn sparse_forms<F: Field>(f: &F, n: usize, count: usize, seed: u64) -> Vec<LinearForm<F>> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let coeffs: Vec<F::Elem> = (0..n)
            .map(|_| if rng.gen_range(0..3) == 0 { f.zero() } else { f.random(&mut rng, true) })
            .collect();
        if let Ok(l) = LinearForm::new(f, coeffs) {
            out.push(l);
        }
    }
    out
}

fn monomial_2233<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let a = GradedAlgebra::monomial_ci(f, &[2, 2, 3, 3])?;
    let mut failures = Vec::new();
    let mut inside = 0;
    let points = sparse_forms(f, 4, 240, seed);
    for l in &points {
        let z = |j: usize| f.is_zero(&l.coeffs()[j]);
        let predicted = z(2) || z(3) || (z(0) && z(1));
        let computed = !is_weak_lefschetz(&a, l)?;
        inside += usize::from(computed);
        if predicted != computed {
            failures.push(format!("support {:?}: computed {computed}", l.support(f)));
        }
    }
    let detail = format!("{} points sampled, {inside} in the locus", points.len());
    Ok(verdict(failures, detail))
}

/// Sorted degree tuples with `1 ≤ n ≤ max_n` and entries in `2..=max_d`.
fn small_tuples(max_n: usize, max_d: usize) -> Vec<Vec<usize>> {
    (1..=max_n).flat_map(|n| census_tuples(n, max_d)).collect()
}

fn jordan_types<F: Field>(f: &F) -> Result<Verdict> {
    let mut failures = Vec::new();
    let a = GradedAlgebra::monomial_ci(f, &[2, 2, 2, 2])?;
    let expected = [
        (vec![0, 1, 2, 3], vec![5, 3, 3, 3, 1, 1]),
        (vec![0, 1, 2], vec![4, 4, 2, 2, 2, 2]),
        (vec![0, 1], vec![3, 3, 3, 3, 1, 1, 1, 1]),
        (vec![0], vec![2; 8]),
    ];
    for (sup, parts) in expected {
        let got = jordan_type(&a, &LinearForm::from_support(f, 4, &sup)?)?;
        if got != Partition::new(parts.clone())? {
            failures.push(format!("support {sup:?}: {got}"));
        }
    }
    let mut count = 0;
    for d in small_tuples(4, 3) {
        let a = GradedAlgebra::monomial_ci(f, &d)?;
        for sup in all_supports(d.len()) {
            let got = jordan_type(&a, &LinearForm::from_support(f, d.len(), &sup)?)?;
            let want = monomial_jordan_prediction(&d, &sup)?;
            count += 1;
            if got != want {
                failures.push(format!("{d:?} support {sup:?}: {got} vs {want}"));
            }
            if got.sum() != a.dim() {
                failures.push(format!("{d:?} support {sup:?}: partition sum {}", got.sum()));
            }
        }
    }
    Ok(verdict(failures, format!("4 canonical partitions, {count} supports checked")))
}

fn classifier<F: Field>(f: &F) -> Result<Verdict> {
    let mut failures = Vec::new();
    let mut count = 0;
    for d in small_tuples(4, 4) {
        let a = GradedAlgebra::monomial_ci(f, &d)?;
        for sup in all_supports(d.len()) {
            let direct = is_weak_lefschetz(&a, &LinearForm::from_support(f, d.len(), &sup)?)?;
            count += 1;
            if monomial_lefschetz_classifier(&d, &sup)? != direct {
                failures.push(format!("{d:?} support {sup:?}: direct {direct}"));
            }
        }
    }
    Ok(verdict(failures, format!("{count} (type, support) pairs, zero disagreements")))
}

fn sweep<F: Field>(f: &F, seed: u64, tuples: Vec<Vec<usize>>) -> Result<Verdict> {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for d in &tuples {
        let s = Settings {
            seed: tuple_seed(seed, d),
            ..Settings::default()
        };
        let r = run_verify(&Source::Ci(d.clone()), f, &s);
        if let Some(e) = r.errors.first() {
            if e.starts_with("genericity failure") {
                return Err(Error::GenericityFailure {
                    attempts: leflab_core::artinian::GENERICITY_ATTEMPTS,
                    reason: format!("{d:?}: {e}"),
                });
            }
            failures.push(format!("{d:?}: {e}"));
        }
        failures.extend(r.mismatches.iter().map(|m| format!("{d:?} {m}")));
        if let Some(t) = &r.total {
            summary.push(format!("{d:?}->{}", if t.empty { "empty".to_string() } else { format!("{}:{}", t.codim, t.degree) }));
        }
    }
    Ok(verdict(failures, format!("{} types: {}", tuples.len(), summary.join(" "))))
}

fn ci3_sweep<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    sweep(f, seed, census_tuples(3, 5))
}

fn codim2_sweep<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    sweep(f, seed, census_tuples(2, 5))
}

fn hf_n4() -> Verdict {
    let mut failures = Vec::new();
    let tuples = census_tuples(4, 6);
    for d in &tuples {
        let h = ci_hvector(d).expect("valid degrees");
        let e = h.socle_degree() as isize;
        let want = if e % 2 == 0 { h.get(e / 2) - h.get(e / 2 - 1) } else { h.get((e - 1) / 2) };
        match ci4_middle_difference([d[0], d[1], d[2], d[3]]) {
            Ok(got) if got == want => {}
            Ok(got) => failures.push(format!("{d:?}: {got} vs {want}")),
            Err(e) => failures.push(format!("{d:?}: {e}")),
        }
    }
    verdict(failures, format!("{} types", tuples.len()))
}

/// A random codimension three SI-sequence of odd socle degree.
fn random_si<R: Rng>(rng: &mut R) -> Result<leflab_core::artinian::HVector> {
    let e = 2 * rng.gen_range(1..=5) + 1;
    let mut g = vec![1i64, 2];
    while g.len() < e / 2 + 1 {
        let i = g.len() - 1;
        let bound = macaulay_bound(g[i] as u128, i).min(8) as i64;
        g.push(rng.gen_range(0..=bound));
    }
    g.truncate(e / 2 + 1);
    h_from_g(&g, e)
}

fn dim_gor_check(seed: u64) -> Result<Verdict> {
    let mut failures = Vec::new();
    let mut rng = seeded_rng(seed);
    let mut shown = Vec::new();
    for _ in 0..20 {
        let h = random_si(&mut rng)?;
        if !is_si_sequence(&h, true).verdict {
            failures.push(format!("{h} generated but not SI"));
            continue;
        }
        let lhs = dim_gor_difference(&h)?;
        let rhs = dim_gor(&h)? - dim_gor(&lower_middle(&h)?)?;
        if lhs != rhs {
            failures.push(format!("{h}: {lhs} vs {rhs}"));
        }
        shown.push(h.to_string());
    }
    let h = leflab_core::artinian::HVector::new(vec![1, 3, 5, 5, 3, 1])?;
    let d = 4u64;
    let count = binomial(2 * d - 1, 2) as i64 - d as i64 - 2;
    let value = dim_gor(&h)?;
    if value != 15 || value != count {
        failures.push(format!("dim_gor{h} = {value}, count {count}"));
    }
    let aci = aci_dimension_counts(d as usize)?;
    let detail = format!(
        "20 vectors (e.g. {}), dim_gor(1,3,5,5,3,1) = {value}, complete intersection counts {}/{}",
        shown.first().cloned().unwrap_or_default(),
        aci.dim_a,
        aci.dim_b
    );
    Ok(verdict(failures, detail))
}

/// Seven random points of the plane.
fn general_points<F: Field>(f: &F, seed: u64) -> Vec<Vec<F::Elem>> {
    let mut rng = seeded_rng(seed);
    (0..7).map(|_| (0..3).map(|_| f.random(&mut rng, true)).collect()).collect()
}

/// Four points on the line `x₃ = 0` and one point off it.
fn collinear_points<F: Field>(f: &F) -> Vec<Vec<F::Elem>> {
    [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [0, 0, 1]]
        .iter()
        .map(|p| p.iter().map(|&x| f.from_i64(x)).collect())
        .collect()
}

fn points_algebras<F: Field>(f: &F, seed: u64) -> Result<[GradedAlgebra<F>; 2]> {
    Ok([
        gorenstein_from_points(f, &general_points(f, derive_seed(seed, 1)), 6, derive_seed(seed, 2))?,
        gorenstein_from_points(f, &collinear_points(f), 6, derive_seed(seed, 3))?,
    ])
}

fn gorenstein_points<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let mut failures = Vec::new();
    let [general, special] = points_algebras(f, seed)?;
    let mut parts = Vec::new();
    for (a, want_h, want) in [
        (&general, vec![1, 3, 6, 7, 6, 3, 1], (2usize, Some(21u64))),
        (&special, vec![1, 3, 4, 5, 4, 3, 1], (1usize, None)),
    ] {
        if a.hvector().values() != want_h {
            failures.push(format!("h-vector {}", a.hvector()));
            continue;
        }
        let p = gor3_prediction(a.hvector())?;
        let full = non_lefschetz_locus(a, true)?;
        let codim = (a.nvars() as isize - 1 - full.dimension.projective_dimension) as usize;
        let degree = full.dimension.degree;
        parts.push(format!("{}: codim {codim}, degree {degree}", a.hvector()));
        if p.codim != want.0 || codim != want.0 {
            failures.push(format!("{}: codim {codim}, predicted {}", a.hvector(), p.codim));
        }
        if let Some(d) = want.1 {
            if degree != d || p.degree != Some(d as u128) {
                failures.push(format!("{}: degree {degree}, predicted {:?}", a.hvector(), p.degree));
            }
        }
    }
    Ok(verdict(failures, parts.join("; ")))
}

/// The Gorenstein algebras built by the earlier checks.
pub fn gorenstein_catalog<F: Field>(f: &F, seed: u64) -> Result<Vec<(String, GradedAlgebra<F>)>> {
    let mut out = vec![
        ("ci 2,2,2,2".to_string(), random_ci(f, &[2, 2, 2, 2], check_seed(seed, 1))?),
        ("ci 3,3,3,3".to_string(), random_ci(f, &[3, 3, 3, 3], check_seed(seed, 2))?),
        ("monomial 4,4,4".to_string(), GradedAlgebra::monomial_ci(f, &[4, 4, 4])?),
        ("monomial 2,2,3,3".to_string(), GradedAlgebra::monomial_ci(f, &[2, 2, 3, 3])?),
        ("monomial 2,2,2,2".to_string(), GradedAlgebra::monomial_ci(f, &[2, 2, 2, 2])?),
    ];
    let s7 = check_seed(seed, 7);
    for d in census_tuples(3, 5) {
        let label = format!("ci {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        out.push((label, random_ci(f, &d, tuple_seed(s7, &d))?));
    }
    let [general, special] = points_algebras(f, check_seed(seed, 10))?;
    out.push(("points 1,3,6,7,6,3,1".to_string(), general));
    out.push(("points 1,3,4,5,4,3,1".to_string(), special));
    Ok(out)
}

/// Minor cap large enough for every degree of the catalog.
const INCLUSION_MINOR_CAP: usize = 20_000;

fn inclusions<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let opts = LocusOptions {
        minor_cap: INCLUSION_MINOR_CAP,
        ..LocusOptions::default()
    };
    let mut failures = Vec::new();
    let mut applied = 0;
    let catalog = gorenstein_catalog(f, seed)?;
    for (label, a) in &catalog {
        for i in 0..a.socle_degree().saturating_sub(1) {
            let c = verify_inclusion_with(a, i, opts)?;
            if c.applies {
                applied += 1;
                if !c.holds {
                    failures.push(format!("{label} degree {i}: {}", c.witness.unwrap_or_default()));
                }
            }
        }
    }
    Ok(verdict(failures, format!("{} algebras, {applied} applicable degrees", catalog.len())))
}

fn properties<F: Field>(f: &F, seed: u64) -> Result<Verdict> {
    let mut failures = Vec::new();
    let mut catalog = gorenstein_catalog(f, seed)?;
    let s11 = check_seed(seed, 11);
    for d in census_tuples(2, 5) {
        catalog.push((format!("ci {},{}", d[0], d[1]), random_ci(f, &d, tuple_seed(s11, &d))?));
    }
    let mut realized = 0;
    for (k, (label, a)) in catalog.iter().enumerate() {
        let e = a.socle_degree();
        let forms = sparse_forms(f, a.nvars(), 20, derive_seed(seed, k as u64));
        for l in &forms {
            let p = jordan_type(a, l)?;
            if p.sum() != a.dim() {
                failures.push(format!("{label}: partition {p} sums to {}", p.sum()));
            }
            for i in 0..e {
                if is_in_locus(a, i, l)? != is_in_locus(a, e - 1 - i, l)? {
                    failures.push(format!("{label}: degrees {i} and {} disagree at {:?}", e - 1 - i, l.support(f)));
                }
            }
        }
        let Some(mid) = gorenstein_middle_degree(e) else { continue };
        let expected = expected_codim_degree(a.h(mid), a.h(mid + 1));
        if expected.codim < a.nvars() {
            let loc = locus_in_degree_with(a, mid, LocusOptions::default())?;
            if loc.report.computed_codim == expected.codim {
                realized += 1;
                if loc.report.computed_degree as u128 != expected.degree {
                    failures.push(format!(
                        "{label}: degree {} at expected codimension, expected {}",
                        loc.report.computed_degree, expected.degree
                    ));
                }
            }
        }
    }
    for d in [vec![2, 2, 2, 2], vec![2, 3, 3]] {
        let s = Settings {
            seed: derive_seed(seed, 0xde7),
            ..Settings::default()
        };
        let first = run_verify(&Source::Ci(d.clone()), f, &s).without_timings();
        let second = run_verify(&Source::Ci(d.clone()), f, &s).without_timings();
        if first != second {
            failures.push(format!("{d:?}: seeded runs differ"));
        }
    }
    Ok(verdict(
        failures,
        format!("{} algebras, {realized} loci of expected codimension", catalog.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases() {
        assert_eq!(find_check("monomial-443").unwrap().index, 3);
        assert_eq!(find_check("7").unwrap().name, "ci3-sweep");
        assert!(find_check("nope").is_none());
        assert!(run_suite(SuiteOptions::default(), &["nope".into()]).is_err());
    }

    #[test]
    fn fast_checks_pass() {
        for name in ["hf-n4", "dim-gor", "codim2-ci"] {
            let o = run_check(find_check(name).unwrap(), SuiteOptions::default());
            assert!(o.passed(), "{}", o.line());
        }
    }
}
