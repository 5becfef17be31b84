//! Closed-form predictions for the non-Lefschetz locus and the sequence
//! tools they rely on.

use serde::Serialize;

use crate::artinian::{ci_hvector, HVector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::RowSpace;
use crate::poly::{binomial, monomial_basis, Monomial, Polynomial};

/// Which statement produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Monomial complete intersection.
    Monomial,
    /// Odd socle degree: a hypersurface given by a square matrix.
    OddSocle,
    /// `d_n ≥ d₁ + ⋯ + d_{n−1} − n + 3`: flat middle, hypersurface.
    LargeFlat,
    /// `d_n = d₁ + ⋯ + d_{n−1} − n + 2`: pairs of points of a complete intersection.
    LargePoints,
    /// `d_n = d₁ + ⋯ + d_{n−1} − n + 1`: odd socle degree.
    LargeOdd,
    /// `d_n = d₁ + ⋯ + d_{n−1} − n`: finitely many forms expected.
    LargeBoundary,
    /// `d_n < d₁ + ⋯ + d_{n−1} − n`.
    General,
    /// Three variables, plane curve.
    Ci3Curve,
    /// Three variables, finite set of points.
    Ci3Points,
    /// Four variables.
    Ci4,
    /// Height three Gorenstein, two equal consecutive values.
    GorensteinFlat,
    /// Height three Gorenstein with `g` of decreasing type.
    GorensteinDecreasing,
    /// Height three Gorenstein with `g` not of decreasing type.
    GorensteinNotDecreasing,
    /// Two variables.
    Codim2,
}

/// Predicted codimension and degree of the locus in `(ℙ^{n−1})*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub n: usize,
    /// Codimension; `n` encodes the empty set.
    pub codim: usize,
    pub empty: bool,
    pub degree: Option<u128>,
    pub regime: Regime,
    pub notes: Vec<String>,
}

impl Prediction {
    fn new(n: usize, codim: usize, degree: Option<u128>, regime: Regime) -> Prediction {
        let codim = codim.min(n);
        let empty = codim >= n;
        Prediction {
            n,
            codim,
            empty,
            degree: if empty { None } else { degree },
            regime,
            notes: Vec::new(),
        }
    }

    fn note(mut self, s: impl Into<String>) -> Prediction {
        self.notes.push(s.into());
        self
    }

    /// Projective dimension, `-1` when empty.
    pub fn projective_dimension(&self) -> isize {
        self.n as isize - 1 - self.codim as isize
    }
}

fn socle_degree(degrees: &[usize]) -> usize {
    degrees.iter().sum::<usize>() - degrees.len()
}

fn check_degrees(degrees: &[usize]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::InvalidInput("at least one degree is required".into()));
    }
    if degrees.iter().any(|&d| d < 2) {
        return Err(Error::InvalidInput("degrees must be at least 2".into()));
    }
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("degrees must be sorted increasingly".into()));
    }
    Ok(())
}

/// Whether `Σ_{j ∈ support} a_j x_j` (all listed `a_j` nonzero, 0-based) is a
/// weak Lefschetz element of the monomial complete intersection.
///
/// Among equal top degrees every index plays the role of the last one.
pub fn monomial_lefschetz_classifier(degrees: &[usize], support: &[usize]) -> Result<bool> {
    check_degrees(degrees)?;
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let n = degrees.len();
    if let Some(&j) = support.iter().find(|&&j| j >= n) {
        return Err(Error::InvalidInput(format!("support index {j} out of range")));
    }
    let e = socle_degree(degrees);
    let dn = degrees[n - 1];
    let nonzero = |j: usize| support.contains(&j);
    if dn > (e + 1) / 2 {
        return Ok((0..n).any(|j| degrees[j] == dn && nonzero(j)));
    }
    if e % 2 == 0 {
        let zeros = (0..n).filter(|&j| !nonzero(j)).count();
        return Ok(zeros <= 1 && (0..n).all(|j| degrees[j] <= 2 || nonzero(j)));
    }
    Ok((0..n).all(nonzero))
}

/// Codimension of the locus of a monomial complete intersection, with the
/// defining monomial when all degrees are an equal even `d` and `n` is odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialLocusSummary {
    pub prediction: Prediction,
    /// `α = h_{(n(d−1)−1)/2} / n`.
    pub alpha: Option<u128>,
    /// `(a₁⋯aₙ)^α`.
    pub defining_monomial: Option<String>,
}

pub fn monomial_locus_summary(degrees: &[usize]) -> Result<MonomialLocusSummary> {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    check_degrees(&sorted)?;
    let n = sorted.len();
    let all_two = sorted.iter().all(|&d| d == 2);
    if all_two && n % 2 == 0 {
        return Ok(MonomialLocusSummary {
            prediction: Prediction::new(n, 2, None, Regime::Monomial),
            alpha: None,
            defining_monomial: None,
        });
    }
    let d = sorted[0];
    let equal = sorted.iter().all(|&x| x == d);
    if equal && n % 2 == 1 && d % 2 == 0 {
        let h = ci_hvector(&sorted)?;
        let mid = (n * (d - 1) - 1) / 2;
        let value = h.get(mid as isize) as u128;
        let alpha = value / n as u128;
        let mono = Monomial::from_exponents(&vec![alpha as u16; n]).render("a");
        return Ok(MonomialLocusSummary {
            prediction: Prediction::new(n, 1, Some(value), Regime::Monomial)
                .note(format!("h_{mid} = {value} = n * alpha")),
            alpha: Some(alpha),
            defining_monomial: Some(mono),
        });
    }
    Ok(MonomialLocusSummary {
        prediction: Prediction::new(n, 1, None, Regime::Monomial),
        alpha: None,
        defining_monomial: None,
    })
}

fn large_dn_regime(degrees: &[usize]) -> Option<Regime> {
    let n = degrees.len() as isize;
    let dn = *degrees.last()? as isize;
    let s: isize = degrees[..degrees.len() - 1].iter().map(|&d| d as isize).sum();
    if dn >= s - n + 3 {
        Some(Regime::LargeFlat)
    } else if dn == s - n + 2 {
        Some(Regime::LargePoints)
    } else if dn == s - n + 1 {
        Some(Regime::LargeOdd)
    } else if dn == s - n {
        Some(Regime::LargeBoundary)
    } else {
        None
    }
}

/// Expected locus of a general complete intersection: a hypersurface of
/// degree `h_{(e−1)/2}` for odd `e`, otherwise codimension
/// `min(h_{e/2} − h_{e/2−1} + 1, n)` with degree `C(h_{e/2}, diff + 1)`.
pub fn conjecture_prediction(degrees: &[usize]) -> Result<Prediction> {
    check_degrees(degrees)?;
    let n = degrees.len();
    if n < 2 {
        return Err(Error::InvalidInput("at least two variables are required".into()));
    }
    let h = ci_hvector(degrees)?;
    let e = h.socle_degree();
    let large = large_dn_regime(degrees);
    if e % 2 == 1 {
        let regime = if large == Some(Regime::LargeOdd) {
            Regime::LargeOdd
        } else {
            Regime::OddSocle
        };
        let deg = h.get(((e - 1) / 2) as isize) as u128;
        return Ok(Prediction::new(n, 1, Some(deg), regime));
    }
    let top = h.get((e / 2) as isize);
    let diff = top - h.get((e / 2) as isize - 1);
    let regime = large.unwrap_or(Regime::General);
    let p = Prediction::new(n, diff + 1, Some(binomial(top as u64, diff as u64 + 1)), regime);
    Ok(p.note(format!("h_{} - h_{} = {diff}", e / 2, e / 2 - 1)))
}

/// General complete intersection in three variables.
pub fn ci3_prediction(d1: usize, d2: usize, d3: usize) -> Result<Prediction> {
    check_degrees(&[d1, d2, d3])?;
    let (a, b, c) = (d1 as i64, d2 as i64, d3 as i64);
    let e = a + b + c - 3;
    let quad = 2 * a * b + 2 * a * c + 2 * b * c - a * a - b * b - c * c;
    if e % 2 == 1 {
        let deg = if c >= a + b { a * b } else { quad / 4 };
        return Ok(Prediction::new(3, 1, Some(deg as u128), Regime::Ci3Curve));
    }
    if c > a + b {
        return Ok(Prediction::new(3, 1, Some((a * b) as u128), Regime::Ci3Curve));
    }
    let n_i = (quad + 1) / 4;
    Ok(Prediction::new(3, 2, Some(binomial(n_i as u64, 2)), Regime::Ci3Points).note(format!("n_I = {n_i}")))
}

/// `C(x, 3)` for integers, zero for `x < 3`.
fn choose3(x: i64) -> i64 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

/// Closed forms for the middle of the Hilbert function of a complete
/// intersection of type `(d₁, d₂, d₃, d₄)`: for even `e` the jump
/// `h_{e/2} − h_{e/2−1}`, for odd `e` the middle value `h_{(e−1)/2}`.
pub fn ci4_middle_difference(d: [usize; 4]) -> Result<usize> {
    check_degrees(&d)?;
    let [a, b, c, dd] = d.map(|x| x as i64);
    if (a + b + c + dd - 4) % 2 == 1 {
        return Ok(ci4_odd_middle_value(d)? as usize);
    }
    Ok(if dd >= a + b + c {
        0
    } else if dd >= -a + b + c {
        ((a + b + c - dd) / 2) as usize
    } else {
        a as usize
    })
}

/// `h_{(e−1)/2} = d₁d₂d₃ − ¼C(d₁+d₂+d₃−d₄+1, 3) + ¼C(−d₁+d₂+d₃−d₄+1, 3)` for odd `e`.
pub fn ci4_odd_middle_value(d: [usize; 4]) -> Result<u128> {
    check_degrees(&d)?;
    let [a, b, c, dd] = d.map(|x| x as i64);
    if (a + b + c + dd - 4) % 2 == 0 {
        return Err(Error::InvalidInput("socle degree is even".into()));
    }
    let v = 4 * a * b * c - choose3(a + b + c - dd + 1) + choose3(-a + b + c - dd + 1);
    Ok((v / 4) as u128)
}

/// General complete intersection in four variables.
pub fn ci4_prediction(d: [usize; 4]) -> Result<Prediction> {
    check_degrees(&d)?;
    let e = socle_degree(&d);
    if e % 2 == 1 {
        let deg = ci4_odd_middle_value(d)?;
        return Ok(Prediction::new(4, 1, Some(deg), Regime::Ci4).note("surface"));
    }
    let diff = ci4_middle_difference(d)?;
    let top = ci_hvector(&d)?.get((e / 2) as isize);
    Ok(Prediction::new(4, diff + 1, Some(binomial(top as u64, diff as u64 + 1)), Regime::Ci4))
}

fn odd_symmetric(h: &HVector) -> Result<usize> {
    let e = h.socle_degree();
    if e % 2 == 0 || !h.is_symmetric() {
        return Err(Error::InvalidInput(format!("{h} is not symmetric of odd socle degree")));
    }
    Ok((e - 1) / 2)
}

/// `½(3h_r + h_{r−1} − Σ h_i p_i)` with `p_i = h_i − 3h_{i−1} + 3h_{i−2} − h_{i−3}`
/// and `e = 2r + 1`.
pub fn dim_gor(h: &HVector) -> Result<i64> {
    let r = odd_symmetric(h)? as isize;
    let v = |i: isize| h.get(i) as i64;
    let sum: i64 = (0..=h.socle_degree() as isize)
        .map(|i| v(i) * (v(i) - 3 * v(i - 1) + 3 * v(i - 2) - v(i - 3)))
        .sum();
    Ok((3 * v(r) + v(r - 1) - sum) / 2)
}

/// `h_{r+1} − 2h_{r+3} + h_{r+4} + 1`, which equals `dim_gor(H) − dim_gor(H′)`
/// where `H′` lowers `h_r` and `h_{r+1}` by one.
pub fn dim_gor_difference(h: &HVector) -> Result<i64> {
    let r = odd_symmetric(h)? as isize;
    let v = |i: isize| h.get(i) as i64;
    Ok(v(r + 1) - 2 * v(r + 3) + v(r + 4) + 1)
}

/// `H′` from [`dim_gor_difference`].
pub fn lower_middle(h: &HVector) -> Result<HVector> {
    let r = odd_symmetric(h)?;
    let mut v = h.values().to_vec();
    if v[r] < 2 {
        return Err(Error::InvalidInput(format!("cannot lower the middle of {h}")));
    }
    v[r] -= 1;
    v[r + 1] -= 1;
    HVector::new(v)
}

/// Dimension counts for complete intersections of four forms of degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AciCounts {
    pub dim_a: i64,
    pub dim_b: i64,
    pub difference: i64,
}

pub fn aci_dimension_counts(d: usize) -> Result<AciCounts> {
    if d < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    let d = d as i64;
    let dim_a = 2 * d * d + 6 * d - 12;
    let dim_b = 2 * d * d + 5 * d - 13;
    Ok(AciCounts {
        dim_a,
        dim_b,
        difference: dim_a - dim_b,
    })
}

/// The `i`-th Macaulay representation `h = C(k_i, i) + C(k_{i−1}, i−1) + ⋯`
/// as pairs `(k_j, j)`.
pub fn macaulay_representation(mut h: u128, i: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut j = i as u64;
    while h > 0 && j > 0 {
        let mut k = j;
        while binomial(k + 1, j) <= h {
            k += 1;
        }
        h -= binomial(k, j);
        out.push((k, j));
        j -= 1;
    }
    out
}

/// Largest `h_{i+1}` permitted after `h_i = h`.
pub fn macaulay_bound(h: u128, i: usize) -> u128 {
    if i == 0 {
        return if h == 0 { 0 } else { u128::MAX };
    }
    macaulay_representation(h, i)
        .into_iter()
        .map(|(k, j)| binomial(k + 1, j + 1))
        .sum()
}

/// Outcome of the SI-sequence test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiCheck {
    pub verdict: bool,
    /// `g_i = h_i − h_{i−1}` for `i ≤ ⌊e/2⌋`, `g₀ = 1`.
    pub g: Vec<i64>,
    pub reason: Option<String>,
}

/// Symmetric, with first differences up to the middle non-negative and
/// obeying Macaulay growth. With `codim3` the sequence must begin `(1, 3)`.
pub fn is_si_sequence(h: &HVector, codim3: bool) -> SiCheck {
    let e = h.socle_degree();
    let g: Vec<i64> = (0..=e / 2)
        .map(|i| h.get(i as isize) as i64 - h.get(i as isize - 1) as i64)
        .collect();
    let fail = |g: Vec<i64>, r: String| SiCheck {
        verdict: false,
        g,
        reason: Some(r),
    };
    if codim3 && h.get(1) != 3 {
        return fail(g, "h_1 is not 3".into());
    }
    if !h.is_symmetric() {
        return fail(g, "not symmetric".into());
    }
    if let Some(i) = g.iter().position(|&x| x < 0) {
        return fail(g, format!("negative difference in degree {i}"));
    }
    for i in 1..g.len().saturating_sub(1) {
        if g[i + 1] as u128 > macaulay_bound(g[i] as u128, i) {
            return fail(g, format!("growth from degree {i} exceeds the Macaulay bound"));
        }
    }
    SiCheck {
        verdict: true,
        g,
        reason: None,
    }
}

/// Builds the symmetric h-vector of socle degree `e` with first
/// differences `g` up to the middle.
pub fn h_from_g(g: &[i64], e: usize) -> Result<HVector> {
    if g.len() != e / 2 + 1 {
        return Err(Error::InvalidInput(format!("need {} differences", e / 2 + 1)));
    }
    let mut h = vec![0usize; e + 1];
    let mut acc = 0i64;
    for (i, x) in g.iter().enumerate() {
        acc += x;
        if acc <= 0 {
            return Err(Error::InvalidInput("partial sums must be positive".into()));
        }
        h[i] = acc as usize;
        h[e - i] = acc as usize;
    }
    HVector::new(h)
}

/// Rises as `1, 2, 3, …, k`, possibly stays at `k`, then strictly
/// decreases. Trailing zeros are ignored.
pub fn is_decreasing_type(g: &[i64]) -> bool {
    let mut g = g.to_vec();
    while g.len() > 1 && g.last() == Some(&0) {
        g.pop();
    }
    if g.first() != Some(&1) {
        return false;
    }
    let mut i = 0;
    while i + 1 < g.len() && g[i + 1] == g[i] + 1 {
        i += 1;
    }
    while i + 1 < g.len() && g[i + 1] == g[i] {
        i += 1;
    }
    while i + 1 < g.len() && g[i + 1] < g[i] {
        i += 1;
    }
    i + 1 == g.len()
}

/// Locus of a general height three Gorenstein algebra with Hilbert function `h`.
pub fn gor3_prediction(h: &HVector) -> Result<Prediction> {
    let si = is_si_sequence(h, true);
    if !si.verdict {
        return Err(Error::InvalidInput(format!(
            "{h} is not a height three SI-sequence: {}",
            si.reason.unwrap_or_default()
        )));
    }
    let e = h.socle_degree();
    let g_mid = si.g[e / 2];
    if e % 2 == 1 || g_mid == 0 {
        let deg = h.get(((e as isize) - 1) / 2) as u128;
        return Ok(Prediction::new(3, 1, Some(deg), Regime::GorensteinFlat));
    }
    if is_decreasing_type(&si.g) {
        let top = h.get((e / 2) as isize) as u64;
        let p = Prediction::new(3, g_mid as usize + 1, Some(binomial(top, 2)), Regime::GorensteinDecreasing);
        return Ok(p.note(format!("g = {:?}", si.g)));
    }
    Ok(Prediction::new(3, 1, None, Regime::GorensteinNotDecreasing).note(format!("g = {:?}", si.g)))
}

/// Locus of a general complete intersection `(d₁, d₂)` in two variables:
/// empty iff `d₁ = d₂`, otherwise `d₁` points.
pub fn codim2_prediction(d1: usize, d2: usize) -> Result<Prediction> {
    let (a, b) = (d1.min(d2), d1.max(d2));
    check_degrees(&[a, b])?;
    if a == b {
        return Ok(Prediction::new(2, 2, None, Regime::Codim2));
    }
    Ok(Prediction::new(2, 1, Some(a as u128), Regime::Codim2))
}

/// Degrees `i` for which a general algebra in two variables with Hilbert
/// function `h` has some `×ℓ : [A]_{i−1} → [A]_i` of non-maximal rank,
/// namely those with `h_{i−1} = h_i`.
pub fn codim2_failure_degrees(h: &HVector) -> Vec<usize> {
    (1..=h.socle_degree()).filter(|&i| h.get(i as isize - 1) == h.get(i as isize)).collect()
}

/// Greatest common divisor data of `[I]_i` for an ideal in two variables.
#[derive(Debug, Clone, PartialEq)]
pub struct GcdAnalysis<F: Field> {
    pub degree: usize,
    pub gcd: Polynomial<F>,
    pub maximal_rank_fails: bool,
    /// Linear factors with multiplicities when the gcd splits.
    pub factors: Vec<(Polynomial<F>, usize)>,
    pub split: bool,
}

/// Dense univariate polynomial, lowest coefficient first.
type Uni<F> = Vec<<F as Field>::Elem>;

fn uni_trim<F: Field>(f: &F, mut p: Uni<F>) -> Uni<F> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

fn uni_rem<F: Field>(f: &F, mut a: Uni<F>, b: &Uni<F>) -> Uni<F> {
    let lb = f.inv(b.last().expect("nonzero divisor")).expect("nonzero");
    while a.len() >= b.len() {
        let c = f.mul(a.last().expect("nonempty"), &lb);
        let shift = a.len() - b.len();
        for (k, x) in b.iter().enumerate() {
            a[k + shift] = f.sub(&a[k + shift], &f.mul(&c, x));
        }
        a.pop();
        a = uni_trim(f, a);
    }
    a
}

fn uni_gcd<F: Field>(f: &F, a: Uni<F>, b: Uni<F>) -> Uni<F> {
    let (mut a, mut b) = (uni_trim(f, a), uni_trim(f, b));
    while !b.is_empty() {
        let r = uni_rem(f, a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last() {
        let inv = f.inv(l).expect("nonzero");
        a = a.iter().map(|c| f.mul(c, &inv)).collect();
    }
    a
}

/// `p(x, y) = y^k q(x, 1)` split as `(k, q(x, 1))`.
fn dehomogenize<F: Field>(p: &Polynomial<F>) -> (usize, Uni<F>) {
    let f = p.field();
    let d = p.homogeneous_degree().expect("homogeneous");
    let mut q = vec![f.zero(); d + 1];
    for (m, c) in p.terms() {
        q[m.exp(0) as usize] = c.clone();
    }
    let q = uni_trim(f, q);
    (d + 1 - q.len(), q)
}

fn homogenize<F: Field>(f: &F, k: usize, q: &Uni<F>) -> Polynomial<F> {
    let d = k + q.len() - 1;
    Polynomial::from_terms(
        f,
        2,
        q.iter()
            .enumerate()
            .map(|(a, c)| (Monomial::from_exponents(&[a as u16, (d - a) as u16]), c.clone())),
    )
}

/// Largest prime for which roots are found by exhaustive search.
const ROOT_SEARCH_LIMIT: u64 = 1 << 17;

/// Gcd of a basis of `[I]_i` for homogeneous generators in two variables.
pub fn codim2_gcd_analysis<F: Field>(field: &F, gens: &[Polynomial<F>], i: usize) -> Result<GcdAnalysis<F>> {
    let monos = monomial_basis(2, i);
    let index: std::collections::HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut space = RowSpace::new(field, monos.len());
    for (idx, g) in gens.iter().enumerate() {
        if g.nvars() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: g.nvars(),
            });
        }
        let Some(d) = g.homogeneous_degree() else {
            if g.is_zero() {
                continue;
            }
            return Err(Error::NonHomogeneousGenerator { index: idx });
        };
        if d > i {
            continue;
        }
        for u in monomial_basis(2, i - d) {
            let mut v = vec![field.zero(); monos.len()];
            for (m, c) in g.mul_monomial(&u).terms() {
                v[index[m]] = c.clone();
            }
            space.insert(v);
        }
    }
    if space.rank() == 0 {
        return Err(Error::InvalidInput(format!("[I]_{i} is zero")));
    }
    let (rows, _) = space.into_rref();
    let mut k = usize::MAX;
    let mut q: Uni<F> = Vec::new();
    for row in rows {
        let p = Polynomial::from_terms(field, 2, monos.iter().cloned().zip(row).collect::<Vec<_>>());
        let (kp, qp) = dehomogenize(&p);
        k = k.min(kp);
        q = uni_gcd(field, q, qp);
    }
    let gcd = homogenize(field, k, &q);
    let degree = k + q.len() - 1;
    let mut factors = Vec::new();
    if k > 0 {
        factors.push((Polynomial::var(field, 2, 1), k));
    }
    let mut rest = q.clone();
    let mut split = true;
    if rest.len() > 1 {
        match field.spec().modulus() {
            Some(p) if p <= ROOT_SEARCH_LIMIT => {
                for r in 0..p {
                    if rest.len() <= 1 {
                        break;
                    }
                    let root = field.from_i64(r as i64);
                    let lin: Uni<F> = vec![field.neg(&root), field.one()];
                    let mut mult = 0;
                    while rest.len() > 1 && uni_rem(field, rest.clone(), &lin).is_empty() {
                        rest = uni_div(field, &rest, &root);
                        mult += 1;
                    }
                    if mult > 0 {
                        factors.push((homogenize(field, 0, &lin), mult));
                    }
                }
                split = rest.len() <= 1;
            }
            _ => split = false,
        }
    }
    if !split {
        factors.clear();
    }
    Ok(GcdAnalysis {
        degree,
        gcd,
        maximal_rank_fails: degree > 0,
        factors,
        split,
    })
}

/// Quotient of `p` by `x − root` (synthetic division).
fn uni_div<F: Field>(f: &F, p: &Uni<F>, root: &F::Elem) -> Uni<F> {
    let n = p.len() - 1;
    let mut out = vec![f.zero(); n];
    let mut carry = f.zero();
    for k in (1..=n).rev() {
        carry = f.add(&p[k], &f.mul(&carry, root));
        out[k - 1] = carry.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn hv(v: &[usize]) -> HVector {
        HVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classifier_cases() {
        assert!(monomial_lefschetz_classifier(&[2, 2, 5], &[2]).unwrap());
        assert!(monomial_lefschetz_classifier(&[2, 2, 3, 3], &[0, 2, 3]).unwrap());
        assert!(!monomial_lefschetz_classifier(&[2, 2, 3, 3], &[0, 1, 3]).unwrap());
        assert!(monomial_lefschetz_classifier(&[2, 3, 3], &[0, 1, 2]).unwrap());
        assert!(!monomial_lefschetz_classifier(&[2, 3, 3], &[1, 2]).unwrap());
    }

    #[test]
    fn monomial_summaries() {
        assert_eq!(monomial_locus_summary(&[2, 2, 2, 2]).unwrap().prediction.codim, 2);
        let s = monomial_locus_summary(&[4, 4, 4]).unwrap();
        assert_eq!((s.prediction.codim, s.alpha), (1, Some(4)));
        assert_eq!(s.defining_monomial.as_deref(), Some("a1^4*a2^4*a3^4"));
        assert_eq!(monomial_locus_summary(&[2, 2, 2]).unwrap().alpha, Some(1));
        for n in [3usize, 5, 7] {
            let s = monomial_locus_summary(&vec![2; n]).unwrap();
            assert_eq!(s.alpha.unwrap() * n as u128, binomial(n as u64, (n as u64 - 1) / 2));
        }
    }

    #[test]
    fn conjecture_examples() {
        let p = conjecture_prediction(&[2, 2, 3]).unwrap();
        assert_eq!((p.codim, p.degree), (2, Some(6)));
        let p = conjecture_prediction(&[2, 2, 2, 2]).unwrap();
        assert_eq!((p.codim, p.degree), (3, Some(20)));
        assert!(conjecture_prediction(&[3, 3, 3, 3]).unwrap().empty);
    }

    #[test]
    fn ci3_examples() {
        assert_eq!(ci3_prediction(2, 3, 3).unwrap().degree, Some(5));
        let p = ci3_prediction(2, 2, 3).unwrap();
        assert_eq!((p.codim, p.degree), (2, Some(6)));
        assert_eq!(ci3_prediction(2, 2, 5).unwrap().degree, Some(4));
    }

    #[test]
    fn ci4_closed_forms() {
        for a in 2..=6 {
            for b in a..=6 {
                for c in b..=6 {
                    for d in c..=6 {
                        let h = ci_hvector(&[a, b, c, d]).unwrap();
                        let e = h.socle_degree() as isize;
                        let got = ci4_middle_difference([a, b, c, d]).unwrap();
                        let want = if e % 2 == 0 {
                            h.get(e / 2) - h.get(e / 2 - 1)
                        } else {
                            h.get((e - 1) / 2)
                        };
                        assert_eq!(got, want, "({a},{b},{c},{d})");
                    }
                }
            }
        }
        assert_eq!(ci4_middle_difference([3, 3, 3, 3]).unwrap(), 3);
        assert_eq!(ci4_middle_difference([2, 2, 3, 3]).unwrap(), 2);
        let p = ci4_prediction([2, 2, 3, 3]).unwrap();
        assert_eq!((p.codim, p.degree), (3, Some(120)));
    }

    #[test]
    fn gorenstein_dimensions() {
        assert_eq!(dim_gor(&hv(&[1, 3, 3, 1])).unwrap(), 9);
        assert_eq!(dim_gor(&hv(&[1, 3, 5, 5, 3, 1])).unwrap(), 15);
        assert_eq!(dim_gor(&hv(&[1, 3, 4, 4, 3, 1])).unwrap(), 11);
        let h = hv(&[1, 3, 5, 5, 3, 1]);
        assert_eq!(dim_gor_difference(&h).unwrap(), 4);
        let h = hv(&[1, 3, 3, 1]);
        let lower = lower_middle(&h).unwrap();
        assert_eq!(dim_gor_difference(&h).unwrap(), dim_gor(&h).unwrap() - dim_gor(&lower).unwrap());
        let c = aci_dimension_counts(3).unwrap();
        assert_eq!((c.dim_a, c.dim_b, c.difference), (24, 20, 4));
    }

    #[test]
    fn macaulay() {
        assert_eq!(macaulay_bound(3, 1), 6);
        assert_eq!(macaulay_bound(4, 2), 5);
        assert_eq!(macaulay_bound(0, 3), 0);
    }

    #[test]
    fn si_and_decreasing_type() {
        let s = is_si_sequence(&hv(&[1, 3, 6, 7, 6, 3, 1]), true);
        assert!(s.verdict);
        assert_eq!(s.g, vec![1, 2, 3, 1]);
        assert!(!is_si_sequence(&hv(&[1, 3, 5, 4, 5, 3, 1]), true).verdict);
        assert!(is_si_sequence(&hv(&[1, 3, 6, 10, 12, 12, 10, 6, 3, 1]), true).verdict);
        assert!(is_decreasing_type(&[1, 2, 3, 3, 1]));
        assert!(!is_decreasing_type(&[1, 2, 1, 1]));
        assert!(!is_decreasing_type(&[1, 2, 2, 3]));
    }

    #[test]
    fn gorenstein_predictions() {
        let p = gor3_prediction(&hv(&[1, 3, 6, 7, 6, 3, 1])).unwrap();
        assert_eq!((p.codim, p.degree), (2, Some(21)));
        assert!(gor3_prediction(&hv(&[1, 3, 6, 8, 6, 3, 1])).unwrap().empty);
        assert_eq!(gor3_prediction(&hv(&[1, 3, 4, 5, 4, 3, 1])).unwrap().codim, 1);
    }

    #[test]
    fn codim_two() {
        assert!(codim2_prediction(3, 3).unwrap().empty);
        assert_eq!(codim2_prediction(2, 4).unwrap().degree, Some(2));
        assert_eq!(codim2_failure_degrees(&hv(&[1, 2, 2, 1])), vec![2]);
        let f = PrimeField::default();
        let g = |s: &[&str]| s.iter().map(|x| parse_polynomial(&f, 2, x).unwrap()).collect::<Vec<_>>();
        let r = codim2_gcd_analysis(&f, &g(&["x^4", "y^4"]), 4).unwrap();
        assert_eq!((r.degree, r.maximal_rank_fails), (0, false));
        let r = codim2_gcd_analysis(&f, &g(&["x^2*y", "x*y^2"]), 3).unwrap();
        assert_eq!((r.degree, r.maximal_rank_fails), (2, true));
        assert!(r.split);
        assert_eq!(r.factors.len(), 2);
    }
}
