//! Graded artinian quotients `A = R/I` and their multiplication maps.
//!
//! Each graded piece `[I]_d` is kept in reduced row echelon form over the
//! grevlex-ordered monomials of degree `d`. The standard monomials (the
//! non-pivot columns) form the cobasis of `[A]_d`, and normal forms are read
//! directly off the echelon rows.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{derive_seed, seeded_rng, Field};
use crate::linalg::{ExactMatrix, RowSpace};
use crate::poly::{monomial_basis, Monomial, Polynomial};

/// Degree cap for the artinian check when the generator count differs from `n`.
pub const DEFAULT_DEGREE_CAP: usize = 60;

/// Reseeded attempts made by the random constructions before giving up.
pub const GENERICITY_ATTEMPTS: usize = 5;

/// The Hilbert function `(1, h₁, …, h_e)` of an artinian algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<usize>);

impl HVector {
    /// Validates `h₀ = 1`, positivity and the absence of trailing zeros.
    pub fn new(values: Vec<usize>) -> Result<HVector> {
        if values.first() != Some(&1) {
            return Err(Error::InvalidInput("h-vector must start with 1".into()));
        }
        if values.iter().any(|&v| v == 0) {
            return Err(Error::InvalidInput("h-vector entries must be positive".into()));
        }
        Ok(HVector(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    /// `h_i`, reading zero outside `0..=e`.
    pub fn get(&self, i: isize) -> usize {
        if i < 0 {
            0
        } else {
            self.0.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_value(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Codimension, i.e. `h₁` (zero for the trivial algebra `k`).
    pub fn codim(&self) -> usize {
        self.get(1)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Hilbert function of a complete intersection with generator degrees `degrees`,
/// the coefficients of `∏ (1 + t + ⋯ + t^{d−1})`.
pub fn ci_hvector(degrees: &[usize]) -> Result<HVector> {
    if degrees.iter().any(|&d| d == 0) {
        return Err(Error::InvalidInput("degrees must be at least 1".into()));
    }
    let mut p = vec![1usize];
    for &d in degrees {
        let mut q = vec![0usize; p.len() + d - 1];
        for (i, a) in p.iter().enumerate() {
            for slot in &mut q[i..i + d] {
                *slot += a;
            }
        }
        p = q;
    }
    HVector::new(p)
}

/// A nonzero linear form `a₁x₁ + ⋯ + aₙxₙ`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> LinearForm<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.iter().all(|c| field.is_zero(c)) {
            return Err(Error::InvalidInput("linear form must be nonzero".into()));
        }
        Ok(LinearForm { coeffs })
    }

    /// `Σ_{j ∈ support} x_j` with 0-based indices.
    pub fn from_support(field: &F, n: usize, support: &[usize]) -> Result<Self> {
        let mut coeffs = vec![field.zero(); n];
        for &j in support {
            if j >= n {
                return Err(Error::InvalidInput(format!("variable index {j} out of range")));
            }
            coeffs[j] = field.one();
        }
        Self::new(field, coeffs)
    }

    /// A random form whose coefficients are all nonzero.
    pub fn random<R: rand::Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Self {
        LinearForm {
            coeffs: (0..n).map(|_| field.random(rng, true)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_polynomial(&self, field: &F) -> Polynomial<F> {
        Polynomial::linear(field, &self.coeffs)
    }

    /// Indices of the nonzero coefficients.
    pub fn support(&self, field: &F) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&j| !field.is_zero(&self.coeffs[j])).collect()
    }

    /// Projective equality: `self = c · other` for a nonzero scalar `c`.
    pub fn projectively_equal(&self, other: &Self, field: &F) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        let (Some(i), Some(j)) = (
            self.coeffs.iter().position(|c| !field.is_zero(c)),
            other.coeffs.iter().position(|c| !field.is_zero(c)),
        ) else {
            return false;
        };
        if i != j {
            return false;
        }
        let ratio = field.div(&other.coeffs[j], &self.coeffs[i]).expect("nonzero");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| field.mul(a, &ratio) == *b)
    }
}

/// How a degree-`d` monomial reduces modulo `[I]_d`.
#[derive(Debug, Clone)]
enum Reduction<E> {
    /// A standard monomial, at this position of the cobasis.
    Standard(usize),
    /// A leading monomial of `[I]_d`, equal to this sparse combination of
    /// standard monomials.
    Rewrite(Vec<(usize, E)>),
}

#[derive(Debug, Clone)]
struct Piece<F: Field> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Echelon rows of `[I]_d`, sorted by pivot column.
    rows: Vec<Vec<F::Elem>>,
    cobasis: Vec<usize>,
    reduction: Vec<Reduction<F::Elem>>,
}

impl<F: Field> Piece<F> {
    fn dim_ideal(&self) -> usize {
        self.monomials.len() - self.cobasis.len()
    }
}

/// An artinian graded quotient `R/I` of `R = k[x₁, …, xₙ]` with all graded
/// data precomputed. Immutable once built.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<F: Field> {
    field: F,
    n: usize,
    generators: Vec<Polynomial<F>>,
    pieces: Vec<Piece<F>>,
    hvector: HVector,
    /// `mult[d][j]` is multiplication by `x_j` from degree `d` to `d + 1`.
    mult: Vec<Vec<ExactMatrix<F>>>,
    monomial: bool,
}

/// Options for [`GradedAlgebra::build_with`].
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Degree bound for the artinian check when the generator count is not `n`.
    pub degree_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

impl<F: Field> GradedAlgebra<F> {
    /// Builds `R/I` for homogeneous generators with the default options.
    pub fn build(field: &F, n: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        Self::build_with(field, n, generators, BuildOptions::default())
    }

    pub fn build_with(field: &F, n: usize, generators: Vec<Polynomial<F>>, opts: BuildOptions) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("need at least one variable".into()));
        }
        let mut gens = Vec::new();
        for (k, g) in generators.into_iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.nvars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: g.nvars(),
                });
            }
            if g.is_zero() {
                continue;
            }
            match g.homogeneous_degree() {
                None => return Err(Error::NonHomogeneousGenerator { index: k }),
                Some(0) => return Err(Error::InvalidInput("generator is a unit".into())),
                Some(_) => gens.push(g),
            }
        }
        let bound = if gens.len() == n {
            gens.iter().map(|g| g.homogeneous_degree().unwrap() - 1).sum::<usize>() + 1
        } else {
            opts.degree_cap
        };
        let monomial = gens.iter().all(|g| g.len() == 1);
        let mut pieces: Vec<Piece<F>> = Vec::new();
        let mut h = Vec::new();
        let mut d = 0;
        loop {
            if d > bound {
                return Err(Error::NotArtinian { bound });
            }
            let piece = if monomial {
                monomial_piece(n, d, &gens)
            } else {
                general_piece(field, n, d, &gens, pieces.last())
            };
            let hd = piece.cobasis.len();
            pieces.push(piece);
            if hd == 0 {
                break;
            }
            h.push(hd);
            d += 1;
        }
        let hvector = HVector::new(h)?;
        let e = hvector.socle_degree();
        let mult = (0..e)
            .map(|d| {
                (0..n)
                    .map(|j| variable_matrix(field, &pieces[d], &pieces[d + 1], j))
                    .collect()
            })
            .collect();
        Ok(GradedAlgebra {
            field: field.clone(),
            n,
            generators: gens,
            pieces,
            hvector,
            mult,
            monomial,
        })
    }

    /// The monomial complete intersection `(x₁^{d₁}, …, xₙ^{dₙ})`.
    pub fn monomial_ci(field: &F, degrees: &[usize]) -> Result<Self> {
        let n = degrees.len();
        let gens = degrees
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let mut e = vec![0u16; n];
                e[j] = d as u16;
                Polynomial::term(field, Monomial::from_exponents(&e), field.one())
            })
            .collect();
        Self::build(field, n, gens)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn hvector(&self) -> &HVector {
        &self.hvector
    }

    pub fn socle_degree(&self) -> usize {
        self.hvector.socle_degree()
    }

    pub fn dim(&self) -> usize {
        self.hvector.total()
    }

    /// `dim [A]_d`, zero beyond the socle degree.
    pub fn h(&self, d: usize) -> usize {
        self.hvector.get(d as isize)
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    /// `dim [I]_d`.
    pub fn ideal_dim(&self, d: usize) -> usize {
        match self.pieces.get(d) {
            Some(p) => p.dim_ideal(),
            None => crate::poly::monomial_count(self.n, d),
        }
    }

    /// The standard monomials spanning `[A]_d`, grevlex-largest first.
    pub fn cobasis(&self, d: usize) -> Vec<Monomial> {
        match self.pieces.get(d) {
            Some(p) => p.cobasis.iter().map(|&k| p.monomials[k].clone()).collect(),
            None => Vec::new(),
        }
    }

    /// Multiplication by `x_j` as an `h_{d+1} × h_d` matrix.
    pub fn variable_matrix(&self, d: usize, j: usize) -> Result<&ExactMatrix<F>> {
        self.mult
            .get(d)
            .map(|m| &m[j])
            .ok_or(Error::DegreeOutOfRange {
                degree: d,
                socle_degree: self.socle_degree(),
            })
    }

    /// The matrix of `×ℓ : [A]_i → [A]_{i+1}` in the standard cobases.
    pub fn multiplication_matrix(&self, l: &LinearForm<F>, i: usize) -> Result<ExactMatrix<F>> {
        if l.nvars() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: l.nvars(),
            });
        }
        let mats = self.mult.get(i).ok_or(Error::DegreeOutOfRange {
            degree: i,
            socle_degree: self.socle_degree(),
        })?;
        let f = &self.field;
        let mut out = ExactMatrix::zeros(f, self.h(i + 1), self.h(i));
        for (a, x) in l.coeffs().iter().zip(mats) {
            if f.is_zero(a) {
                continue;
            }
            for r in 0..out.rows() {
                for c in 0..out.cols() {
                    let v = x.get(r, c);
                    if !f.is_zero(v) {
                        let cur = f.add(out.get(r, c), &f.mul(a, v));
                        out.set(r, c, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of a homogeneous polynomial's class in the cobasis of its degree.
    pub fn normal_form_vector(&self, p: &Polynomial<F>) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let Some(d) = p.homogeneous_degree() else {
            if p.is_zero() {
                return Err(Error::InvalidInput("zero polynomial has no degree".into()));
            }
            return Err(Error::NonHomogeneousGenerator { index: 0 });
        };
        let Some(piece) = self.pieces.get(d) else {
            return Ok(Vec::new());
        };
        let mut out = vec![f.zero(); piece.cobasis.len()];
        for (m, c) in p.terms() {
            let k = piece.index[m];
            match &piece.reduction[k] {
                Reduction::Standard(pos) => out[*pos] = f.add(&out[*pos], c),
                Reduction::Rewrite(combo) => {
                    for (pos, v) in combo {
                        out[*pos] = f.add(&out[*pos], &f.mul(c, v));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The matrix of multiplication by a homogeneous form `g` from degree `i`
    /// to degree `i + deg g`.
    pub fn form_matrix(&self, g: &Polynomial<F>, i: usize) -> Result<ExactMatrix<F>> {
        let f = &self.field;
        let k = g
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidInput("form must be homogeneous and nonzero".into()))?;
        let rows = self.h(i + k);
        let cols = self.cobasis(i);
        let mut out = ExactMatrix::zeros(f, rows, cols.len());
        if rows == 0 {
            return Ok(out);
        }
        for (c, m) in cols.iter().enumerate() {
            let v = self.normal_form_vector(&g.mul_monomial(m))?;
            for (r, x) in v.into_iter().enumerate() {
                out.set(r, c, x);
            }
        }
        Ok(out)
    }

    /// `dim [Soc A]_i`: the joint kernel of all `×x_j` on `[A]_i`.
    pub fn socle_dimension(&self, i: usize) -> usize {
        let e = self.socle_degree();
        if i > e {
            return 0;
        }
        if i == e {
            return self.h(e);
        }
        let hi = self.h(i);
        let mut space = RowSpace::new(&self.field, hi);
        for x in &self.mult[i] {
            for r in 0..x.rows() {
                space.insert(x.row(r).to_vec());
                if space.is_full() {
                    return 0;
                }
            }
        }
        hi - space.rank()
    }

    /// Symmetric Hilbert function and a one-dimensional socle.
    pub fn is_gorenstein(&self) -> bool {
        if !self.hvector.is_symmetric() || self.h(self.socle_degree()) != 1 {
            return false;
        }
        (0..self.socle_degree()).all(|i| self.socle_dimension(i) == 0)
    }

    /// Whether `p` lies in `I` (for homogeneous `p`).
    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let v = self.normal_form_vector(p)?;
        Ok(v.iter().all(|x| self.field.is_zero(x)))
    }
}

fn new_piece<F: Field>(n: usize, d: usize) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let monomials = monomial_basis(n, d);
    let index = monomials.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    (monomials, index)
}

fn monomial_piece<F: Field>(n: usize, d: usize, gens: &[Polynomial<F>]) -> Piece<F> {
    let (monomials, index) = new_piece::<F>(n, d);
    let leads: Vec<&Monomial> = gens.iter().map(|g| &g.terms()[0].0).collect();
    let mut cobasis = Vec::new();
    let mut reduction = Vec::with_capacity(monomials.len());
    for (k, m) in monomials.iter().enumerate() {
        if leads.iter().any(|l| l.divides(m)) {
            reduction.push(Reduction::Rewrite(Vec::new()));
        } else {
            reduction.push(Reduction::Standard(cobasis.len()));
            cobasis.push(k);
        }
    }
    Piece {
        monomials,
        index,
        rows: Vec::new(),
        cobasis,
        reduction,
    }
}

fn general_piece<F: Field>(
    field: &F,
    n: usize,
    d: usize,
    gens: &[Polynomial<F>],
    prev: Option<&Piece<F>>,
) -> Piece<F> {
    let (monomials, index) = new_piece::<F>(n, d);
    let cols = monomials.len();
    let mut space = RowSpace::new(field, cols);
    for g in gens.iter().filter(|g| g.homogeneous_degree() == Some(d)) {
        let mut v = vec![field.zero(); cols];
        for (m, c) in g.terms() {
            v[index[m]] = c.clone();
        }
        space.insert(v);
    }
    if let Some(prev) = prev {
        'outer: for row in &prev.rows {
            for j in 0..n {
                if space.is_full() {
                    break 'outer;
                }
                let mut v = vec![field.zero(); cols];
                for (k, c) in row.iter().enumerate() {
                    if !field.is_zero(c) {
                        v[index[&prev.monomials[k].times_var(j)]] = c.clone();
                    }
                }
                space.insert(v);
            }
        }
    }
    let (rows, pivots) = space.into_rref();
    let mut is_pivot = vec![None; cols];
    for (r, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(r);
    }
    let mut cobasis = Vec::new();
    let mut pos = vec![usize::MAX; cols];
    for k in 0..cols {
        if is_pivot[k].is_none() {
            pos[k] = cobasis.len();
            cobasis.push(k);
        }
    }
    let reduction = (0..cols)
        .map(|k| match is_pivot[k] {
            None => Reduction::Standard(pos[k]),
            Some(r) => Reduction::Rewrite(
                cobasis
                    .iter()
                    .filter(|&&c| !field.is_zero(&rows[r][c]))
                    .map(|&c| (pos[c], field.neg(&rows[r][c])))
                    .collect(),
            ),
        })
        .collect();
    Piece {
        monomials,
        index,
        rows,
        cobasis,
        reduction,
    }
}

fn variable_matrix<F: Field>(field: &F, from: &Piece<F>, to: &Piece<F>, j: usize) -> ExactMatrix<F> {
    let mut out = ExactMatrix::zeros(field, to.cobasis.len(), from.cobasis.len());
    for (c, &k) in from.cobasis.iter().enumerate() {
        let target = to.index[&from.monomials[k].times_var(j)];
        match &to.reduction[target] {
            Reduction::Standard(pos) => out.set(*pos, c, field.one()),
            Reduction::Rewrite(combo) => {
                for (pos, v) in combo {
                    out.set(*pos, c, v.clone());
                }
            }
        }
    }
    out
}

/// A complete intersection of random forms of the given degrees, retried
/// with derived seeds until its Hilbert function is the generic one.
pub fn random_ci<F: Field>(field: &F, degrees: &[usize], seed: u64) -> Result<GradedAlgebra<F>> {
    let n = degrees.len();
    let target = ci_hvector(degrees)?;
    for attempt in 0..GENERICITY_ATTEMPTS {
        let mut rng = seeded_rng(if attempt == 0 { seed } else { derive_seed(seed, attempt as u64) });
        let gens = degrees
            .iter()
            .map(|&d| random_form(field, n, d, &mut rng))
            .collect();
        match GradedAlgebra::build(field, n, gens) {
            Ok(a) if *a.hvector() == target => return Ok(a),
            Ok(_) | Err(Error::NotArtinian { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure {
        attempts: GENERICITY_ATTEMPTS,
        reason: format!("no complete intersection with h-vector {target}"),
    })
}

/// A form of degree `d` with every coefficient drawn at random.
pub fn random_form<F: Field, R: rand::Rng + ?Sized>(field: &F, n: usize, d: usize, rng: &mut R) -> Polynomial<F> {
    let terms: Vec<(Monomial, F::Elem)> = monomial_basis(n, d)
        .into_iter()
        .map(|m| (m, field.random(rng, false)))
        .filter(|(_, c)| !field.is_zero(c))
        .collect();
    Polynomial::from_sorted_terms(field, n, terms)
}

/// Catalecticant matrix of `F` from degree `i` to degree `e − i`: rows are
/// indexed by degree-`i` monomials `x^α`, columns by degree-`(e−i)` monomials
/// `X^γ`, and the entry is the coefficient of `X^γ` in `∂^α F`, namely
/// `F_{α+γ} · (α+γ)! / γ!`.
pub fn catalecticant<F: Field>(form: &Polynomial<F>, i: usize) -> Result<ExactMatrix<F>> {
    let f = form.field();
    let n = form.nvars();
    let e = form
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidInput("dual form must be homogeneous and nonzero".into()))?;
    let p = f.characteristic();
    if p != 0 && p as usize <= e {
        return Err(Error::InvalidInput(format!("characteristic {p} must exceed the degree {e}")));
    }
    if i > e {
        return Ok(ExactMatrix::zeros(f, monomial_basis(n, i).len(), 0));
    }
    let rows = monomial_basis(n, i);
    let cols = monomial_basis(n, e - i);
    let mut fact = vec![f.one()];
    for k in 1..=e {
        fact.push(f.mul(&fact[k - 1], &f.from_i64(k as i64)));
    }
    let weight = |m: &Monomial| {
        m.exponents()
            .iter()
            .fold(f.one(), |acc, &x| f.mul(&acc, &fact[x as usize]))
    };
    let col_inv: Vec<F::Elem> = cols.iter().map(|g| f.inv(&weight(g)).expect("p > e")).collect();
    let mut out = ExactMatrix::zeros(f, rows.len(), cols.len());
    for (r, a) in rows.iter().enumerate() {
        for (c, g) in cols.iter().enumerate() {
            let s = a.mul(g);
            let coef = form.coefficient(&s);
            if !f.is_zero(&coef) {
                out.set(r, c, f.mul(&f.mul(&coef, &weight(&s)), &col_inv[c]));
            }
        }
    }
    Ok(out)
}

/// `R / Ann(F)` for a nonzero form `F` in the dual variables; Gorenstein
/// with socle degree `deg F`.
pub fn gorenstein_from_dual_form<F: Field>(form: &Polynomial<F>) -> Result<GradedAlgebra<F>> {
    let f = form.field();
    let n = form.nvars();
    let e = form
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidInput("dual form must be homogeneous and nonzero".into()))?;
    let mut ranks = Vec::with_capacity(e + 1);
    let mut gens = Vec::new();
    let mut prev_kernel: Vec<Vec<F::Elem>> = Vec::new();
    let mut prev_monos: Vec<Monomial> = Vec::new();
    for i in 0..=e + 1 {
        let monos = monomial_basis(n, i);
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let kernel: Vec<Vec<F::Elem>> = if i <= e {
            let cat = catalecticant(form, i)?;
            let r = cat.transpose().rref();
            ranks.push(r.rank);
            r.kernel
        } else {
            (0..monos.len())
                .map(|k| {
                    let mut v = vec![f.zero(); monos.len()];
                    v[k] = f.one();
                    v
                })
                .collect()
        };
        let mut space = RowSpace::new(f, monos.len());
        for row in &prev_kernel {
            for j in 0..n {
                let mut v = vec![f.zero(); monos.len()];
                for (k, c) in row.iter().enumerate() {
                    if !f.is_zero(c) {
                        v[index[&prev_monos[k].times_var(j)]] = c.clone();
                    }
                }
                space.insert(v);
            }
        }
        for v in &kernel {
            if space.insert(v.clone()) {
                let terms = monos
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !f.is_zero(c))
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                gens.push(Polynomial::from_sorted_terms(f, n, terms));
            }
        }
        prev_kernel = kernel;
        prev_monos = monos;
    }
    let opts = BuildOptions {
        degree_cap: e + 1,
    };
    let a = GradedAlgebra::build_with(f, n, gens, opts)?;
    debug_assert_eq!(a.hvector().values(), &ranks[..]);
    if a.hvector().values() != &ranks[..] {
        return Err(Error::InvalidInput("apolar algebra disagrees with catalecticant ranks".into()));
    }
    Ok(a)
}

/// `dim` of the degree-`i` piece of the coordinate ring of a point set,
/// i.e. the rank of the evaluation matrix of degree-`i` monomials.
pub fn points_hilbert_function<F: Field>(field: &F, points: &[Vec<F::Elem>], i: usize) -> usize {
    if points.is_empty() {
        return 0;
    }
    let n = points[0].len();
    let monos = monomial_basis(n, i);
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|m| {
                    m.exponents()
                        .iter()
                        .zip(p)
                        .fold(field.one(), |acc, (&e, x)| field.mul(&acc, &field.pow(x, e as u64)))
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows_with_cols(field, rows, monos.len())
        .expect("rectangular")
        .rank()
}

/// A Gorenstein quotient of the coordinate ring of `points`:
/// `R / Ann(Σ c_j L_j^e)` with `L_j` the dual linear form of point `j` and
/// random nonzero `c_j`. The Hilbert function is certified to be
/// `i ↦ min(HF_Z(i), HF_Z(e − i))`.
pub fn gorenstein_from_points<F: Field>(
    field: &F,
    points: &[Vec<F::Elem>],
    e: usize,
    seed: u64,
) -> Result<GradedAlgebra<F>> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidInput("need at least one point".into()));
    };
    let n = first.len();
    let mut forms = Vec::with_capacity(points.len());
    for (k, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: p.len(),
            });
        }
        let l = LinearForm::new(field, p.clone())
            .map_err(|_| Error::InvalidInput(format!("point {k} is the zero vector")))?;
        for (j, other) in forms.iter().enumerate() {
            if l.projectively_equal(other, field) {
                return Err(Error::DuplicatePoints { first: j, second: k });
            }
        }
        forms.push(l);
    }
    let hf: Vec<usize> = (0..=e).map(|i| points_hilbert_function(field, points, i)).collect();
    let target: Vec<usize> = (0..=e).map(|i| hf[i].min(hf[e - i])).collect();
    let powers: Vec<Polynomial<F>> = forms.iter().map(|l| l.to_polynomial(field).pow(e as u32)).collect();
    for attempt in 0..GENERICITY_ATTEMPTS {
        let mut rng = seeded_rng(if attempt == 0 { seed } else { derive_seed(seed, attempt as u64) });
        let mut dual = Polynomial::zero(field, n);
        for p in &powers {
            dual = dual.add(&p.scale(&field.random(&mut rng, true)))?;
        }
        if dual.is_zero() {
            continue;
        }
        let a = gorenstein_from_dual_form(&dual)?;
        if a.hvector().values() == &target[..] {
            return Ok(a);
        }
    }
    Err(Error::GenericityFailure {
        attempts: GENERICITY_ATTEMPTS,
        reason: format!("no apolar algebra with h-vector {target:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn gens(n: usize, s: &[&str]) -> Vec<Polynomial<PrimeField>> {
        s.iter().map(|t| parse_polynomial(&f(), n, t).unwrap()).collect()
    }

    #[test]
    fn ci_hvectors() {
        assert_eq!(ci_hvector(&[3, 3, 3]).unwrap().values(), &[1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(ci_hvector(&[4, 4, 4]).unwrap().values(), &[1, 3, 6, 10, 12, 12, 10, 6, 3, 1]);
        assert_eq!(ci_hvector(&[2, 2, 3, 3]).unwrap().values(), &[1, 4, 8, 10, 8, 4, 1]);
    }

    #[test]
    fn monomial_quotients() {
        let a = GradedAlgebra::build(&f(), 3, gens(3, &["x1^2", "x2^2", "x3^2"])).unwrap();
        assert_eq!(a.hvector().values(), &[1, 3, 3, 1]);
        let b = GradedAlgebra::build(&f(), 2, gens(2, &["x1^2", "x2^2"])).unwrap();
        assert_eq!(b.hvector().values(), &[1, 2, 1]);
    }

    #[test]
    fn random_complete_intersections() {
        let a = random_ci(&f(), &[2, 2, 3], 42).unwrap();
        assert_eq!(a.hvector().values(), &[1, 3, 4, 3, 1]);
        let b = random_ci(&f(), &[2, 2], 1).unwrap();
        assert_eq!(b.hvector().values(), &[1, 2, 1]);
        let c = random_ci(&f(), &[3, 3, 3, 3], 7).unwrap();
        assert_eq!(c.hvector(), &ci_hvector(&[3, 3, 3, 3]).unwrap());
    }

    #[test]
    fn multiplication_by_x3() {
        let a = GradedAlgebra::monomial_ci(&f(), &[2, 2, 2]).unwrap();
        let l = LinearForm::from_support(&f(), 3, &[2]).unwrap();
        let m = a.multiplication_matrix(&l, 0).unwrap();
        assert_eq!(m.to_rows(), vec![vec![0], vec![0], vec![1]]);
        assert!(a.multiplication_matrix(&l, 3).is_err());
    }

    #[test]
    fn rank_of_middle_map_333() {
        let a = GradedAlgebra::monomial_ci(&f(), &[3, 3, 3]).unwrap();
        let all = LinearForm::from_support(&f(), 3, &[0, 1, 2]).unwrap();
        assert_eq!(a.multiplication_matrix(&all, 2).unwrap().rank(), 6);
        let two = LinearForm::from_support(&f(), 3, &[0, 1]).unwrap();
        assert!(a.multiplication_matrix(&two, 2).unwrap().rank() < 6);
    }

    #[test]
    fn socles() {
        let a = GradedAlgebra::monomial_ci(&f(), &[2, 2, 2]).unwrap();
        assert_eq!(a.socle_dimension(3), 1);
        assert_eq!(a.socle_dimension(1), 0);
        assert!(a.is_gorenstein());
        let b = GradedAlgebra::monomial_ci(&f(), &[2, 3]).unwrap();
        assert_eq!(b.socle_dimension(b.socle_degree()), 1);
        let c = GradedAlgebra::build(&f(), 2, gens(2, &["x1^2", "x1*x2", "x2^3"])).unwrap();
        assert_eq!(c.hvector().values(), &[1, 2, 1]);
        assert_eq!(c.socle_dimension(1), 1);
        assert!(!c.is_gorenstein());
    }

    #[test]
    fn dual_forms() {
        let fx = |s: &str| parse_polynomial(&f(), 3, s).unwrap();
        let a = gorenstein_from_dual_form(&fx("x1*x2*x3")).unwrap();
        assert_eq!(a.hvector().values(), &[1, 3, 3, 1]);
        let b = gorenstein_from_dual_form(&fx("x1^3")).unwrap();
        assert_eq!(b.hvector().values(), &[1, 1, 1, 1]);
        let mut rng = seeded_rng(5);
        let c = gorenstein_from_dual_form(&random_form(&f(), 3, 4, &mut rng)).unwrap();
        assert_eq!(c.hvector().values(), &[1, 3, 6, 3, 1]);
        assert!(c.is_gorenstein());
    }

    #[test]
    fn from_points() {
        let fld = f();
        let one = gorenstein_from_points(&fld, &[vec![1, 2, 3]], 2, 0).unwrap();
        assert_eq!(one.hvector().values(), &[1, 1, 1]);
        let pts = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
        let four = gorenstein_from_points(&fld, &pts, 4, 3).unwrap();
        assert_eq!(four.hvector().values(), &[1, 3, 4, 3, 1]);
        let dup = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert!(matches!(
            gorenstein_from_points(&fld, &dup, 3, 0),
            Err(Error::DuplicatePoints { first: 0, second: 1 })
        ));
    }

    #[test]
    fn not_artinian() {
        let e = GradedAlgebra::build(&f(), 3, gens(3, &["x1^2", "x2^2"])).unwrap_err();
        assert!(matches!(e, Error::NotArtinian { .. }));
        let e = GradedAlgebra::build(&f(), 2, gens(2, &["x1 + x2^2"])).unwrap_err();
        assert!(matches!(e, Error::NonHomogeneousGenerator { index: 0 }));
    }

    #[test]
    fn linear_forms() {
        let fld = f();
        let a = LinearForm::new(&fld, vec![1, 2, 0]).unwrap();
        let b = LinearForm::new(&fld, vec![3, 6, 0]).unwrap();
        assert!(a.projectively_equal(&b, &fld));
        assert!(LinearForm::new(&fld, vec![0, 0]).is_err());
        assert_eq!(a.support(&fld), vec![0, 1]);
    }
}
