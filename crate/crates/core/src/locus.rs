//! The non-Lefschetz locus.
//!
//! For `ℓ = a₁x₁ + ⋯ + aₙxₙ` the map `×ℓ : [A]_i → [A]_{i+1}` is a matrix
//! `B_i` of linear forms in the dual variables `a₁, …, aₙ`. The locus in
//! degree `i` is cut out by the maximal minors of `B_i`; the full locus is
//! the union over all degrees.

use std::collections::HashSet;

use serde::Serialize;

use crate::artinian::{GradedAlgebra, LinearForm};
use crate::error::{Error, Result};
use crate::field::{derive_seed, seeded_rng, Field};
use crate::groebner::{
    buchberger_with, dimension_degree, ideal_intersection_with, normal_form, DimensionDegree, GroebnerBasis,
    GroebnerOptions,
};
use crate::linalg::{maximal_minors, ExactMatrix, LinearMatrix};
use crate::poly::{binomial, Monomial, MonomialOrder, Polynomial};

/// Default cap on the number of maximal minors enumerated per degree.
pub const DEFAULT_MINOR_CAP: usize = 5000;

/// Number of random specializations checked when building a dual matrix.
pub const DUAL_AUDIT_POINTS: usize = 10;

const AUDIT_SEED: u64 = 0x0a0d_17ed;

/// The matrix `B_i` of `×ℓ : [A]_i → [A]_{i+1}` with `ℓ` generic.
#[derive(Debug, Clone)]
pub struct DualMatrix<F: Field> {
    degree: usize,
    row_labels: Vec<Monomial>,
    col_labels: Vec<Monomial>,
    matrix: LinearMatrix<F>,
}

impl<F: Field> DualMatrix<F> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(rows, cols) = (h_{i+1}, h_i)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.matrix.rows(), self.matrix.cols())
    }

    pub fn row_labels(&self) -> &[Monomial] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Monomial] {
        &self.col_labels
    }

    pub fn matrix(&self) -> &LinearMatrix<F> {
        &self.matrix
    }

    /// Entry `(r, c)` as a linear form in the dual variables.
    pub fn entry(&self, r: usize, c: usize) -> Polynomial<F> {
        self.matrix.entry(r, c)
    }

    /// The matrix of `×ℓ` for a concrete `ℓ`.
    pub fn specialize(&self, l: &LinearForm<F>) -> ExactMatrix<F> {
        self.matrix.evaluate(l.coeffs())
    }

    /// Rows rendered with dual variables `a1..an`.
    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.matrix.rows())
            .map(|r| {
                (0..self.matrix.cols())
                    .map(|c| self.entry(r, c).render("a"))
                    .collect()
            })
            .collect()
    }
}

/// Builds `B_i` and checks it against direct multiplication matrices at
/// random linear forms.
pub fn dual_matrix<F: Field>(a: &GradedAlgebra<F>, i: usize) -> Result<DualMatrix<F>> {
    let e = a.socle_degree();
    if i >= e {
        return Err(Error::DegreeOutOfRange {
            degree: i,
            socle_degree: e,
        });
    }
    let n = a.nvars();
    let (rows, cols) = (a.h(i + 1), a.h(i));
    let mut m = LinearMatrix::zeros(a.field(), rows, cols, n);
    for j in 0..n {
        let x = a.variable_matrix(i, j)?;
        for r in 0..rows {
            for c in 0..cols {
                m.coeffs_mut(r, c)[j] = x.get(r, c).clone();
            }
        }
    }
    let b = DualMatrix {
        degree: i,
        row_labels: a.cobasis(i + 1),
        col_labels: a.cobasis(i),
        matrix: m,
    };
    let mut rng = seeded_rng(derive_seed(AUDIT_SEED, i as u64));
    for _ in 0..DUAL_AUDIT_POINTS {
        let l = LinearForm::random(a.field(), n, &mut rng);
        if b.specialize(&l) != a.multiplication_matrix(&l, i)? {
            return Err(Error::InvalidInput(format!(
                "dual matrix in degree {i} disagrees with a specialization"
            )));
        }
    }
    Ok(b)
}

/// Generators of the ideal of maximal minors.
#[derive(Debug, Clone)]
pub struct MinorIdeal<F: Field> {
    /// Size of the minors, `min(h_i, h_{i+1})`.
    pub size: usize,
    /// Number of minors enumerated, `C(max, min)`.
    pub enumerated: usize,
    /// Nonzero minors before removing scalar multiples.
    pub nonzero: usize,
    /// Distinct nonzero minors up to scalars, made monic.
    pub generators: Vec<Polynomial<F>>,
}

pub fn minor_ideal<F: Field>(b: &DualMatrix<F>) -> Result<MinorIdeal<F>> {
    minor_ideal_with(b, DEFAULT_MINOR_CAP)
}

/// Like [`minor_ideal`] with an explicit cap on the number of minors.
pub fn minor_ideal_with<F: Field>(b: &DualMatrix<F>, cap: usize) -> Result<MinorIdeal<F>> {
    let (r, c) = b.shape();
    let (lo, hi) = (r.min(c), r.max(c));
    if lo == 0 {
        return Err(Error::InvalidInput("dual matrix has an empty side".into()));
    }
    let count = binomial(hi as u64, lo as u64);
    if count > cap as u128 {
        return Err(Error::TooManyMinors { count, cap });
    }
    let minors = maximal_minors(&b.matrix)?;
    let mut seen = HashSet::new();
    let mut generators = Vec::new();
    let mut nonzero = 0;
    for (_, p) in minors {
        if p.is_zero() {
            continue;
        }
        nonzero += 1;
        let p = p.monic();
        if seen.insert(p.terms().to_vec()) {
            generators.push(p);
        }
    }
    Ok(MinorIdeal {
        size: lo,
        enumerated: count as usize,
        nonzero,
        generators,
    })
}

/// Expected codimension and degree of the locus of a generic matrix of
/// linear forms of the given shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub codim: usize,
    pub degree: u128,
}

/// `codim = |h_{i+1} − h_i| + 1`, `degree = C(max, min − 1)`.
pub fn expected_codim_degree(h_i: usize, h_next: usize) -> Expected {
    let (lo, hi) = (h_i.min(h_next), h_i.max(h_next));
    Expected {
        codim: hi - lo + 1,
        degree: if lo == 0 { 0 } else { binomial(hi as u64, lo as u64 - 1) },
    }
}

/// Options shared by the locus computations.
#[derive(Debug, Clone, Copy)]
pub struct LocusOptions {
    pub minor_cap: usize,
    pub groebner: GroebnerOptions,
    /// Recorded in reports; the computation itself is deterministic.
    pub seed: u64,
}

impl Default for LocusOptions {
    fn default() -> Self {
        LocusOptions {
            minor_cap: DEFAULT_MINOR_CAP,
            groebner: GroebnerOptions::default(),
            seed: 0,
        }
    }
}

/// Summary of the locus in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusReport {
    pub degree: usize,
    /// `(h_i, h_{i+1})`.
    pub shape: (usize, usize),
    pub expected_codim: usize,
    /// Present when the expected codimension leaves a nonempty locus.
    pub expected_degree: Option<u128>,
    /// Projective dimension in the dual space; `-1` when empty.
    pub computed_dimension: isize,
    /// Codimension in the dual projective space; `n` when empty.
    pub computed_codim: usize,
    /// Hilbert-polynomial degree; zero when the locus is empty.
    pub computed_degree: u64,
    pub empty: bool,
    /// The determinant, in the square case.
    pub hypersurface_polynomial: Option<String>,
    pub minor_count: usize,
    pub minors_enumerated: usize,
    /// Set when the computed codimension differs from the expected one, in
    /// which case the degree is that of the unsaturated minor ideal.
    pub saturation_flag: bool,
    pub hilbert_series_numerator: Vec<i64>,
    pub field: String,
    pub seed: u64,
}

/// The locus in one degree together with its ideal.
#[derive(Debug, Clone)]
pub struct DegreeLocus<F: Field> {
    pub report: LocusReport,
    pub minors: MinorIdeal<F>,
    pub basis: GroebnerBasis<F>,
    pub dimension: DimensionDegree,
}

pub fn locus_in_degree<F: Field>(a: &GradedAlgebra<F>, i: usize) -> Result<DegreeLocus<F>> {
    locus_in_degree_with(a, i, LocusOptions::default())
}

pub fn locus_in_degree_with<F: Field>(a: &GradedAlgebra<F>, i: usize, opts: LocusOptions) -> Result<DegreeLocus<F>> {
    let b = dual_matrix(a, i)?;
    let minors = minor_ideal_with(&b, opts.minor_cap)?;
    let n = a.nvars();
    let basis = buchberger_with(a.field(), n, &minors.generators, MonomialOrder::Grevlex, opts.groebner)?;
    let dimension = dimension_degree(&basis);
    let (h_i, h_next) = (a.h(i), a.h(i + 1));
    let expected = expected_codim_degree(h_i, h_next);
    let empty = dimension.projective_dimension < 0;
    let computed_codim = (n as isize - 1 - dimension.projective_dimension) as usize;
    let hypersurface_polynomial = if h_i == h_next {
        Some(
            minors
                .generators
                .first()
                .map(|p| p.render("a"))
                .unwrap_or_else(|| "0".to_string()),
        )
    } else {
        None
    };
    let report = LocusReport {
        degree: i,
        shape: (h_i, h_next),
        expected_codim: expected.codim,
        expected_degree: (expected.codim < n).then_some(expected.degree),
        computed_dimension: dimension.projective_dimension,
        computed_codim,
        computed_degree: if empty { 0 } else { dimension.degree },
        empty,
        hypersurface_polynomial,
        minor_count: minors.generators.len(),
        minors_enumerated: minors.enumerated,
        saturation_flag: !empty && computed_codim != expected.codim,
        hilbert_series_numerator: dimension.hilbert_series_numerator.clone(),
        field: a.field().spec().to_string(),
        seed: opts.seed,
    };
    Ok(DegreeLocus {
        report,
        minors,
        basis,
        dimension,
    })
}

/// The locus over all relevant degrees.
#[derive(Debug, Clone)]
pub struct FullLocus<F: Field> {
    pub per_degree: Vec<DegreeLocus<F>>,
    /// Basis of the ideal of the whole locus.
    pub total: GroebnerBasis<F>,
    pub dimension: DimensionDegree,
    /// Whether only the middle degree was used.
    pub gorenstein: bool,
}

impl<F: Field> FullLocus<F> {
    pub fn is_empty(&self) -> bool {
        self.dimension.projective_dimension < 0
    }

    pub fn reports(&self) -> Vec<LocusReport> {
        self.per_degree.iter().map(|d| d.report.clone()).collect()
    }
}

/// The degree `⌊(e − 1)/2⌋` that controls the locus of a Gorenstein algebra.
pub fn gorenstein_middle_degree(socle_degree: usize) -> Option<usize> {
    socle_degree.checked_sub(1).map(|x| x / 2)
}

pub fn non_lefschetz_locus<F: Field>(a: &GradedAlgebra<F>, gorenstein_hint: bool) -> Result<FullLocus<F>> {
    non_lefschetz_locus_with(a, gorenstein_hint, LocusOptions::default())
}

/// With the hint, verifies that `A` is Gorenstein and computes only the
/// middle degree; otherwise intersects the ideals of all degrees.
pub fn non_lefschetz_locus_with<F: Field>(
    a: &GradedAlgebra<F>,
    gorenstein_hint: bool,
    opts: LocusOptions,
) -> Result<FullLocus<F>> {
    let n = a.nvars();
    let field = a.field();
    let e = a.socle_degree();
    let degrees: Vec<usize> = if gorenstein_hint {
        if !a.is_gorenstein() {
            return Err(Error::HintRejected(format!(
                "h-vector {} with socle dimensions {:?} is not Gorenstein",
                a.hvector(),
                (0..=e).map(|i| a.socle_dimension(i)).collect::<Vec<_>>()
            )));
        }
        gorenstein_middle_degree(e).into_iter().collect()
    } else {
        (0..e).collect()
    };
    let mut per_degree = Vec::with_capacity(degrees.len());
    for i in degrees {
        per_degree.push(locus_in_degree_with(a, i, opts)?);
    }
    let mut total = buchberger_with(
        field,
        n,
        &[Polynomial::constant(field, n, field.one())],
        MonomialOrder::Grevlex,
        opts.groebner,
    )?;
    for d in &per_degree {
        total = ideal_intersection_with(&total, &d.basis, opts.groebner)?;
    }
    let dimension = dimension_degree(&total);
    Ok(FullLocus {
        per_degree,
        total,
        dimension,
        gorenstein: gorenstein_hint,
    })
}

/// Whether `×ℓ : [A]_i → [A]_{i+1}` fails to have maximal rank.
pub fn is_in_locus<F: Field>(a: &GradedAlgebra<F>, i: usize, l: &LinearForm<F>) -> Result<bool> {
    let m = a.multiplication_matrix(l, i)?;
    Ok(m.rank() < m.rows().min(m.cols()))
}

/// Whether every generator vanishes at the point `ℓ`.
pub fn minors_vanish_at<F: Field>(minors: &MinorIdeal<F>, l: &LinearForm<F>) -> Result<bool> {
    for g in &minors.generators {
        if !g.field().is_zero(&g.eval(l.coeffs())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the inclusion check between consecutive loci.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub degree: usize,
    /// Whether `h_i ≤ h_{i+1} ≤ h_{i+2}` and `A` has no socle in degree `i`.
    pub applies: bool,
    /// Whether every minor of `B_{i+1}` lies in the minor ideal of `B_i`.
    pub holds: bool,
    /// The first generator that failed, if any.
    pub witness: Option<String>,
}

pub fn verify_inclusion<F: Field>(a: &GradedAlgebra<F>, i: usize) -> Result<InclusionCheck> {
    verify_inclusion_with(a, i, LocusOptions::default())
}

pub fn verify_inclusion_with<F: Field>(a: &GradedAlgebra<F>, i: usize, opts: LocusOptions) -> Result<InclusionCheck> {
    let e = a.socle_degree();
    if i + 2 > e {
        return Err(Error::DegreeOutOfRange {
            degree: i + 2,
            socle_degree: e,
        });
    }
    let applies = a.h(i) <= a.h(i + 1) && a.h(i + 1) <= a.h(i + 2) && a.socle_dimension(i) == 0;
    if !applies {
        return Ok(InclusionCheck {
            degree: i,
            applies,
            holds: false,
            witness: None,
        });
    }
    let lower = locus_in_degree_with(a, i, opts)?;
    let upper = minor_ideal_with(&dual_matrix(a, i + 1)?, opts.minor_cap)?;
    for g in &upper.generators {
        if !normal_form(g, &lower.basis)?.is_zero() {
            return Ok(InclusionCheck {
                degree: i,
                applies,
                holds: false,
                witness: Some(g.render("a")),
            });
        }
    }
    Ok(InclusionCheck {
        degree: i,
        applies,
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artinian::random_ci;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn expected_values() {
        assert_eq!(expected_codim_degree(3, 4), Expected { codim: 2, degree: 6 });
        assert_eq!(expected_codim_degree(5, 5), Expected { codim: 1, degree: 5 });
        assert_eq!(expected_codim_degree(4, 2), Expected { codim: 3, degree: 4 });
    }

    #[test]
    fn dual_matrix_of_quadrics() {
        let a = GradedAlgebra::monomial_ci(&f(), &[2, 2, 2]).unwrap();
        let b = dual_matrix(&a, 1).unwrap();
        assert_eq!(b.shape(), (3, 3));
        assert_eq!(
            b.render(),
            vec![vec!["a2", "a1", "0"], vec!["a3", "0", "a1"], vec!["0", "a3", "a2"]]
        );
        let m = minor_ideal(&b).unwrap();
        assert_eq!(m.generators.len(), 1);
        let det = crate::linalg::det_linear_matrix(b.matrix()).unwrap();
        assert_eq!(det.render("a"), "-2*a1*a2*a3");
    }

    #[test]
    fn monomial_2233_minors() {
        let a = GradedAlgebra::monomial_ci(&f(), &[2, 2, 3, 3]).unwrap();
        let b = dual_matrix(&a, 2).unwrap();
        assert_eq!(b.shape(), (10, 8));
        for r in 0..10 {
            for c in 0..8 {
                assert!(b.entry(r, c).len() <= 1);
            }
        }
        let m = minor_ideal(&b).unwrap();
        assert_eq!(m.enumerated, 45);
        assert!(m.generators.iter().all(|g| g.homogeneous_degree() == Some(8)));
    }

    #[test]
    fn quadric_ci_in_four_variables() {
        let a = random_ci(&f(), &[2, 2, 2, 2], 1).unwrap();
        let l = non_lefschetz_locus(&a, true).unwrap();
        assert_eq!(l.dimension.projective_dimension, 0);
        assert_eq!(l.dimension.degree, 20);
    }

    #[test]
    fn hint_is_verified() {
        let fld = f();
        let gens = ["x1^2", "x1*x2", "x2^3"]
            .iter()
            .map(|s| parse_polynomial(&fld, 2, s).unwrap())
            .collect();
        let a = GradedAlgebra::build(&fld, 2, gens).unwrap();
        assert!(matches!(non_lefschetz_locus(&a, true), Err(Error::HintRejected(_))));
        let full = non_lefschetz_locus(&a, false).unwrap();
        assert_eq!(full.per_degree.len(), a.socle_degree());
    }

    #[test]
    fn pointwise_membership() {
        let fld = f();
        let a = GradedAlgebra::monomial_ci(&fld, &[2, 2, 5]).unwrap();
        let l = LinearForm::from_support(&fld, 3, &[2]).unwrap();
        for i in 0..a.socle_degree() {
            assert!(!is_in_locus(&a, i, &l).unwrap());
        }
        let a = GradedAlgebra::monomial_ci(&fld, &[2, 2, 3, 3]).unwrap();
        let mid = gorenstein_middle_degree(a.socle_degree()).unwrap();
        let l = LinearForm::from_support(&fld, 4, &[0, 1, 3]).unwrap();
        assert!(is_in_locus(&a, mid, &l).unwrap());
        let l = LinearForm::from_support(&fld, 4, &[1, 2, 3]).unwrap();
        assert!(!is_in_locus(&a, mid, &l).unwrap());
    }

    #[test]
    fn inclusion_on_gorenstein_ci() {
        let a = random_ci(&f(), &[2, 2, 3], 5).unwrap();
        let c = verify_inclusion(&a, 0).unwrap();
        assert!(c.applies && c.holds, "{c:?}");
        let c = verify_inclusion(&a, 1).unwrap();
        assert!(!c.applies);
    }
}
