//! Weak and strong Lefschetz tests and Jordan types.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::artinian::{ci_hvector, GradedAlgebra, HVector, LinearForm};
use crate::error::{Error, Result};
use crate::field::{derive_seed, seeded_rng, Field, Scalar};
use crate::linalg::ExactMatrix;
use crate::locus::{dual_matrix, is_in_locus, minor_ideal_with, DEFAULT_MINOR_CAP};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts the nonzero values decreasingly.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        Partition((1..=self.largest()).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Every part repeated `k` times.
    pub fn repeat(&self, k: usize) -> Partition {
        Partition(self.0.iter().flat_map(|&p| std::iter::repeat(p).take(k)).collect())
    }

    /// Exponent notation such as `5 3^3 1^2`.
    pub fn compact(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            out.push(if run == 1 { p.to_string() } else { format!("{p}^{run}") });
            i += run;
        }
        out.join(" ")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Whether `×ℓ` has maximal rank in every degree.
pub fn is_weak_lefschetz<F: Field>(a: &GradedAlgebra<F>, l: &LinearForm<F>) -> Result<bool> {
    for i in 0..a.socle_degree() {
        if is_in_locus(a, i, l)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WlpVerdict {
    /// A sampled form is a weak Lefschetz element.
    Holds,
    /// Some degree has an identically vanishing minor ideal.
    Fails,
    /// No witness among the samples and no failure certificate.
    NoWitnessFound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WlpResult {
    pub verdict: WlpVerdict,
    /// Coefficients of the witness when the verdict is `Holds`.
    pub witness: Option<Vec<Scalar>>,
    /// The degree whose locus is the whole dual space when the verdict is `Fails`.
    pub failing_degree: Option<usize>,
    pub trials: usize,
}

/// Default number of sampled forms for [`has_wlp`].
pub const DEFAULT_TRIALS: usize = 5;

/// Samples linear forms with seeds derived from `seed`; a negative answer is
/// only given with a certificate that some `B_i` has all maximal minors zero.
pub fn has_wlp<F: Field>(a: &GradedAlgebra<F>, seed: u64, trials: usize) -> Result<WlpResult> {
    let f = a.field();
    let trials = trials.max(1);
    for t in 0..trials {
        let mut rng = seeded_rng(derive_seed(seed, t as u64));
        let l = LinearForm::random(f, a.nvars(), &mut rng);
        if is_weak_lefschetz(a, &l)? {
            return Ok(WlpResult {
                verdict: WlpVerdict::Holds,
                witness: Some(l.coeffs().iter().map(|c| f.to_scalar(c)).collect()),
                failing_degree: None,
                trials: t + 1,
            });
        }
    }
    for i in 0..a.socle_degree() {
        match minor_ideal_with(&dual_matrix(a, i)?, DEFAULT_MINOR_CAP) {
            Ok(m) if m.generators.is_empty() => {
                return Ok(WlpResult {
                    verdict: WlpVerdict::Fails,
                    witness: None,
                    failing_degree: Some(i),
                    trials,
                })
            }
            Ok(_) | Err(Error::TooManyMinors { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(WlpResult {
        verdict: WlpVerdict::NoWitnessFound,
        witness: None,
        failing_degree: None,
        trials,
    })
}

/// Matrices of `×ℓ^k : [A]_i → [A]_{i+k}` for all `i`, given those for `k − 1`.
fn next_powers<F: Field>(
    base: &[ExactMatrix<F>],
    prev: &[ExactMatrix<F>],
    k: usize,
) -> Result<Vec<ExactMatrix<F>>> {
    (0..prev.len().saturating_sub(1))
        .map(|i| base[i + k - 1].mul(&prev[i]))
        .collect()
}

/// `r_k = Σ_i rank(×ℓ^k : [A]_i → [A]_{i+k})` for `k = 0..=e+1`.
pub fn power_ranks<F: Field>(a: &GradedAlgebra<F>, l: &LinearForm<F>) -> Result<Vec<usize>> {
    let e = a.socle_degree();
    let base: Vec<ExactMatrix<F>> = (0..e)
        .map(|i| a.multiplication_matrix(l, i))
        .collect::<Result<_>>()?;
    let mut ranks = vec![a.dim()];
    let mut cur = base.clone();
    for k in 1..=e {
        ranks.push(cur.iter().map(|m| m.rank()).sum());
        if k < e {
            cur = next_powers(&base, &cur, k + 1)?;
        }
    }
    ranks.push(0);
    Ok(ranks)
}

/// Jordan type of `×ℓ`: the number of parts `≥ k` is `r_{k−1} − r_k`.
pub fn jordan_type<F: Field>(a: &GradedAlgebra<F>, l: &LinearForm<F>) -> Result<Partition> {
    Ok(partition_from_ranks(&power_ranks(a, l)?))
}

fn partition_from_ranks(r: &[usize]) -> Partition {
    let at_least: Vec<usize> = r.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k).take(exactly));
    }
    Partition(parts)
}

/// Conjugate of the partition formed by the Hilbert function values.
pub fn dual_partition(h: &HVector) -> Partition {
    Partition::from_unsorted(h.values().to_vec()).conjugate()
}

/// Strong Lefschetz test; the Jordan type criterion is cross-checked
/// against maximal rank of every `×ℓ^d : [A]_i → [A]_{i+d}`.
pub fn is_strong_lefschetz<F: Field>(a: &GradedAlgebra<F>, l: &LinearForm<F>) -> Result<bool> {
    let by_jordan = jordan_type(a, l)? == dual_partition(a.hvector());
    let e = a.socle_degree();
    let base: Vec<ExactMatrix<F>> = (0..e)
        .map(|i| a.multiplication_matrix(l, i))
        .collect::<Result<_>>()?;
    let mut direct = true;
    let mut cur = base.clone();
    for k in 1..=e {
        if cur.iter().any(|m| m.rank() < m.rows().min(m.cols())) {
            direct = false;
            break;
        }
        if k < e {
            cur = next_powers(&base, &cur, k + 1)?;
        }
    }
    if by_jordan != direct {
        return Err(Error::CriteriaDisagree(format!(
            "Jordan type criterion says {by_jordan}, maximal rank of powers says {direct}"
        )));
    }
    Ok(direct)
}

/// Predicted Jordan type of `Σ_{j ∈ support} x_j` on the monomial complete
/// intersection with the given degrees (`support` is 0-based).
pub fn monomial_jordan_prediction(degrees: &[usize], support: &[usize]) -> Result<Partition> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    if let Some(&j) = support.iter().find(|&&j| j >= degrees.len()) {
        return Err(Error::InvalidInput(format!("support index {j} out of range")));
    }
    let selected: Vec<usize> = support.iter().map(|&j| degrees[j]).collect();
    let total: usize = degrees.iter().product();
    let part: usize = selected.iter().product();
    Ok(dual_partition(&ci_hvector(&selected)?).repeat(total / part).sorted())
}

impl Partition {
    fn sorted(self) -> Partition {
        Partition::from_unsorted(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dual_partitions() {
        let h = |v: &[usize]| HVector::new(v.to_vec()).unwrap();
        assert_eq!(dual_partition(&h(&[1, 4, 6, 4, 1])), p(&[5, 3, 3, 3, 1, 1]));
        assert_eq!(dual_partition(&h(&[1, 1, 1])), p(&[3]));
        assert_eq!(dual_partition(&h(&[1, 3, 3, 1])), p(&[4, 2, 2]));
    }

    #[test]
    fn jordan_types_of_quadrics() {
        let f = PrimeField::default();
        let a = GradedAlgebra::monomial_ci(&f, &[2, 2, 2, 2]).unwrap();
        let l = LinearForm::from_support(&f, 4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(jordan_type(&a, &l).unwrap(), p(&[5, 3, 3, 3, 1, 1]));
        assert!(is_strong_lefschetz(&a, &l).unwrap());
        let l = LinearForm::from_support(&f, 4, &[0, 1, 2]).unwrap();
        assert_eq!(jordan_type(&a, &l).unwrap(), p(&[4, 4, 2, 2, 2, 2]));
        assert!(!is_strong_lefschetz(&a, &l).unwrap());
        let a = GradedAlgebra::monomial_ci(&f, &[5]).unwrap();
        let l = LinearForm::from_support(&f, 1, &[0]).unwrap();
        assert_eq!(jordan_type(&a, &l).unwrap(), p(&[5]));
    }

    #[test]
    fn predictions() {
        assert_eq!(monomial_jordan_prediction(&[2, 2, 2, 2], &[0]).unwrap(), p(&[2; 8]));
        assert_eq!(
            monomial_jordan_prediction(&[2, 2, 3, 3], &[2, 3]).unwrap(),
            p(&[5, 5, 5, 5, 3, 3, 3, 3, 1, 1, 1, 1])
        );
        assert_eq!(monomial_jordan_prediction(&[2, 2], &[]), Err(Error::EmptySupport));
    }

    #[test]
    fn weak_lefschetz_examples() {
        let f = PrimeField::default();
        let a = GradedAlgebra::monomial_ci(&f, &[2, 2, 5]).unwrap();
        assert!(is_weak_lefschetz(&a, &LinearForm::from_support(&f, 3, &[2]).unwrap()).unwrap());
        let a = GradedAlgebra::monomial_ci(&f, &[3, 3, 3]).unwrap();
        assert!(!is_weak_lefschetz(&a, &LinearForm::from_support(&f, 3, &[0, 1]).unwrap()).unwrap());
        let a = GradedAlgebra::monomial_ci(&f, &[2, 3, 3]).unwrap();
        assert!(is_weak_lefschetz(&a, &LinearForm::from_support(&f, 3, &[0, 1, 2]).unwrap()).unwrap());
        let r = has_wlp(&a, 9, DEFAULT_TRIALS).unwrap();
        assert_eq!(r.verdict, WlpVerdict::Holds);
        assert!(r.witness.is_some());
    }

    #[test]
    fn certified_failure() {
        let f = PrimeField::default();
        let gens = ["x1^3", "x2^3", "x3^3", "x1*x2*x3"]
            .iter()
            .map(|s| crate::poly::parse_polynomial(&f, 3, s).unwrap())
            .collect();
        let a = GradedAlgebra::build(&f, 3, gens).unwrap();
        assert_eq!(a.hvector().values(), &[1, 3, 6, 6, 3]);
        let r = has_wlp(&a, 0, 3).unwrap();
        assert_eq!((r.verdict, r.failing_degree), (WlpVerdict::Fails, Some(2)));
    }
}
