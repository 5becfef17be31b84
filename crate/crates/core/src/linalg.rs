//! Dense exact linear algebra and determinants of matrices of linear forms.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{derive_seed, seeded_rng, Field};
use crate::poly::{monomial_basis, Monomial, Polynomial};

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon data of a matrix.
#[derive(Clone, Debug)]
pub struct RrefResult<F: Field> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// The nonzero rows of the reduced row echelon form.
    pub reduced: ExactMatrix<F>,
    /// Basis of the right kernel, one vector per free column.
    pub kernel: Vec<Vec<F::Elem>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        Self::from_rows_with_cols(field, rows, c).map(|m| {
            debug_assert_eq!(m.rows, r);
            m
        })
    }

    /// Like [`ExactMatrix::from_rows`] but with an explicit column count so
    /// matrices without rows keep their width.
    pub fn from_rows_with_cols(field: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ArityMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(ExactMatrix {
            field: field.clone(),
            rows: r,
            cols,
            data,
        })
    }

    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map(|x| x.len()).unwrap_or(0);
        let conv = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows_with_cols(field, conv, cols).expect("rectangular input")
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                let na = f.neg(a);
                f.sub_mul_assign(dst, &na, other.row(k));
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form, rank, pivot columns and right kernel.
    /// Pivots are chosen left to right, first nonzero row first.
    pub fn rref(&self) -> RrefResult<F> {
        let f = &self.field;
        let mut rows = self.to_rows();
        let pivots = rref_in_place(f, &mut rows, self.cols);
        rows.truncate(pivots.len());
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&rows[r][free]);
            }
            kernel.push(v);
        }
        let reduced = ExactMatrix::from_rows_with_cols(f, rows, self.cols).expect("rectangular");
        RrefResult {
            rank,
            pivots,
            reduced,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rank_in_place(&self.field, &mut rows, self.cols)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        Ok(det_dense(&self.field, self.data.clone(), self.rows))
    }
}

/// Determinant of a row-major `n × n` buffer, consumed.
pub fn det_dense<F: Field>(f: &F, mut a: Vec<F::Elem>, n: usize) -> F::Elem {
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !f.is_zero(&a[r * n + c])) else {
            return f.zero();
        };
        if p != c {
            for k in c..n {
                a.swap(p * n + k, c * n + k);
            }
            det = f.neg(&det);
        }
        let piv = a[c * n + c].clone();
        det = f.mul(&det, &piv);
        let inv = f.inv(&piv).expect("nonzero pivot");
        let (head, tail) = a.split_at_mut((c + 1) * n);
        let prow = &head[c * n + c..c * n + n];
        for r in 0..(n - c - 1) {
            let row = &mut tail[r * n + c..r * n + n];
            if f.is_zero(&row[0]) {
                continue;
            }
            let factor = f.mul(&row[0], &inv);
            f.sub_mul_assign(row, &factor, prow);
        }
    }
    det
}

/// Brings `rows` to reduced row echelon form in place and returns the pivot
/// columns; zero rows are moved to the end.
pub fn rref_in_place<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        let pivot_row: Vec<F::Elem> = rows[r].iter().map(|x| f.mul(x, &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let factor = row[c].clone();
                f.sub_mul_assign(&mut row[c..], &factor, &pivot_row[c..]);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only; `rows` is clobbered.
pub fn rank_in_place<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if !f.is_zero(&row[c]) {
                let factor = f.mul(&row[c], &inv);
                f.sub_mul_assign(&mut row[c..], &factor, &prow[c..]);
            }
        }
        r += 1;
    }
    r
}

/// An incrementally built row space kept in echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: &F, cols: usize) -> Self {
        RowSpace {
            field: field.clone(),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the stored rows; returns the remainder.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for c in 0..self.cols {
            if f.is_zero(&v[c]) {
                continue;
            }
            if let Some(r) = self.pivot_of_col[c] {
                let factor = v[c].clone();
                f.sub_mul_assign(&mut v[c..], &factor, &self.rows[r][c..]);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v.to_vec()).iter().all(|x| f.is_zero(x))
    }

    /// Inserts `v`; returns true when it enlarged the space.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        if self.is_full() {
            return false;
        }
        let f = &self.field;
        let v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[c]).expect("nonzero");
        let v: Vec<F::Elem> = v.iter().map(|x| f.mul(x, &inv)).collect();
        self.pivot_of_col[c] = Some(self.rows.len());
        self.pivots.push(c);
        self.rows.push(v);
        true
    }

    /// Finishes into a fully reduced echelon basis sorted by pivot column.
    pub fn into_rref(self) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<F::Elem>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..rows.len()).rev() {
            let c = pivots[i];
            let (head, tail) = rows.split_at_mut(i);
            let prow = &tail[0];
            for row in head.iter_mut() {
                if !f.is_zero(&row[c]) {
                    let factor = row[c].clone();
                    f.sub_mul_assign(&mut row[c..], &factor, &prow[c..]);
                }
            }
        }
        (rows, pivots)
    }
}

/// A matrix whose entries are linear forms in `m` variables, each stored as
/// its coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    m: usize,
    entries: Vec<Vec<F::Elem>>,
}

impl<F: Field> LinearMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize, m: usize) -> Self {
        LinearMatrix {
            field: field.clone(),
            rows,
            cols,
            m,
            entries: vec![vec![field.zero(); m]; rows * cols],
        }
    }

    /// Builds from polynomial entries, which must be linear forms in `m` variables.
    pub fn from_polynomials(field: &F, m: usize, rows: &[Vec<Polynomial<F>>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut out = Self::zeros(field, r, c, m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::ArityMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            for (j, p) in row.iter().enumerate() {
                if p.nvars() != m {
                    return Err(Error::ArityMismatch {
                        expected: m,
                        found: p.nvars(),
                    });
                }
                if !p.is_zero() && p.homogeneous_degree() != Some(1) {
                    return Err(Error::InvalidInput(format!("entry ({i},{j}) is not a linear form")));
                }
                for (mono, coef) in p.terms() {
                    let v = mono.exponents().iter().position(|&e| e == 1).expect("linear");
                    out.entries[i * c + j][v] = coef.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self, r: usize, c: usize) -> &[F::Elem] {
        &self.entries[r * self.cols + c]
    }

    pub fn coeffs_mut(&mut self, r: usize, c: usize) -> &mut Vec<F::Elem> {
        &mut self.entries[r * self.cols + c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial<F> {
        Polynomial::linear(&self.field, self.coeffs(r, c))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows, self.m);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.coeffs(r, c).to_vec();
            }
        }
        t
    }

    /// Specializes the variables to `point`.
    pub fn evaluate(&self, point: &[F::Elem]) -> ExactMatrix<F> {
        let f = &self.field;
        let data = self
            .entries
            .iter()
            .map(|e| {
                e.iter().zip(point).fold(f.zero(), |acc, (a, x)| {
                    if f.is_zero(a) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, x))
                    }
                })
            })
            .collect();
        ExactMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// The square submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, rows.len(), cols.len(), self.m);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.entries[i * cols.len() + j] = self.coeffs(r, c).to_vec();
            }
        }
        out
    }
}

/// Interpolates homogeneous polynomials of degree `t` in `m` variables from
/// their values on a fixed point set.
///
/// The points are `(β₁, …, β_{m−1}, 1)` with `β` ranging over nonnegative
/// integer vectors of total size at most `t`. The interpolation system is
/// triangular in the Newton basis of falling factorials, so it is solved by
/// iterated forward differences followed by a Stirling change of basis.
/// This needs the characteristic to exceed `t`.
#[derive(Clone, Debug)]
pub struct DetInterpolator<F: Field> {
    field: F,
    m: usize,
    t: usize,
    monomials: Vec<Monomial>,
    points: Vec<Vec<F::Elem>>,
    /// For each of the first `m − 1` coordinates, the lattice lines along it,
    /// as index lists in increasing coordinate.
    lines: Vec<Vec<Vec<usize>>>,
    /// `1 / α!` for every lattice point `α`.
    inv_factorials: Vec<F::Elem>,
    /// Signed Stirling numbers of the first kind, `stirling[a][k]`.
    stirling: Vec<Vec<F::Elem>>,
    checks: Vec<Vec<F::Elem>>,
}

/// Number of random points every interpolated determinant is re-checked at.
pub const VERIFY_POINTS: usize = 5;

impl<F: Field> DetInterpolator<F> {
    pub fn new(field: &F, m: usize, t: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("no variables".into()));
        }
        let p = field.characteristic();
        if p != 0 && (p as usize) <= t {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} too small for degree {t} interpolation"
            )));
        }
        let monomials = monomial_basis(m, t);
        let index: HashMap<&[u16], usize> = monomials
            .iter()
            .enumerate()
            .map(|(k, mono)| (&mono.exponents()[..m - 1], k))
            .collect();
        let points: Vec<Vec<F::Elem>> = monomials
            .iter()
            .map(|mono| {
                let mut pt: Vec<F::Elem> = mono.exponents()[..m - 1]
                    .iter()
                    .map(|&e| field.from_i64(e as i64))
                    .collect();
                pt.push(field.one());
                pt
            })
            .collect();
        let mut lines = Vec::with_capacity(m - 1);
        for i in 0..m - 1 {
            let mut dim_lines = Vec::new();
            for mono in &monomials {
                let beta = &mono.exponents()[..m - 1];
                if beta[i] != 0 {
                    continue;
                }
                let room = t - beta.iter().map(|&e| e as usize).sum::<usize>();
                let mut key = beta.to_vec();
                let line: Vec<usize> = (0..=room)
                    .map(|a| {
                        key[i] = a as u16;
                        index[key.as_slice()]
                    })
                    .collect();
                dim_lines.push(line);
            }
            lines.push(dim_lines);
        }
        let mut fact = vec![field.one()];
        for k in 1..=t {
            fact.push(field.mul(&fact[k - 1], &field.from_i64(k as i64)));
        }
        let inv_factorials = monomials
            .iter()
            .map(|mono| {
                let w = mono.exponents()[..m - 1]
                    .iter()
                    .fold(field.one(), |acc, &e| field.mul(&acc, &fact[e as usize]));
                field.inv(&w).expect("characteristic exceeds degree")
            })
            .collect();
        let mut stirling = vec![vec![field.zero(); t + 1]; t + 1];
        stirling[0][0] = field.one();
        for a in 0..t {
            for k in 0..=a + 1 {
                let prev = if k > 0 { stirling[a][k - 1].clone() } else { field.zero() };
                let here = if k <= a {
                    field.mul(&stirling[a][k], &field.from_i64(a as i64))
                } else {
                    field.zero()
                };
                stirling[a + 1][k] = field.sub(&prev, &here);
            }
        }
        let mut rng = seeded_rng(derive_seed(0x1e5c_be11, (m as u64) << 32 | t as u64));
        let checks = (0..VERIFY_POINTS)
            .map(|_| (0..m).map(|_| field.random(&mut rng, false)).collect())
            .collect();
        Ok(DetInterpolator {
            field: field.clone(),
            m,
            t,
            monomials,
            points,
            lines,
            inv_factorials,
            stirling,
            checks,
        })
    }

    pub fn degree(&self) -> usize {
        self.t
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }

    pub fn check_points(&self) -> &[Vec<F::Elem>] {
        &self.checks
    }

    /// The unique homogeneous polynomial of degree `t` taking `values[k]`
    /// at `points()[k]`.
    pub fn interpolate(&self, values: &[F::Elem]) -> Polynomial<F> {
        let f = &self.field;
        assert_eq!(values.len(), self.points.len());
        let mut v = values.to_vec();
        for dim_lines in &self.lines {
            for line in dim_lines {
                let len = line.len();
                for level in 1..len {
                    for a in (level..len).rev() {
                        v[line[a]] = f.sub(&v[line[a]], &v[line[a - 1]]);
                    }
                }
            }
        }
        for (x, w) in v.iter_mut().zip(&self.inv_factorials) {
            *x = f.mul(x, w);
        }
        for dim_lines in &self.lines {
            for line in dim_lines {
                let old: Vec<F::Elem> = line.iter().map(|&k| v[k].clone()).collect();
                for (k, &slot) in line.iter().enumerate() {
                    let mut acc = f.zero();
                    for (a, c) in old.iter().enumerate().skip(k) {
                        if !f.is_zero(c) {
                            acc = f.add(&acc, &f.mul(c, &self.stirling[a][k]));
                        }
                    }
                    v[slot] = acc;
                }
            }
        }
        let terms: Vec<(Monomial, F::Elem)> = self
            .monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(m, c)| (m.clone(), c))
            .collect();
        Polynomial::from_sorted_terms(f, self.m, terms)
    }

    /// Determinant of a `t × t` linear matrix, verified at random points.
    pub fn determinant(&self, b: &LinearMatrix<F>) -> Result<Polynomial<F>> {
        assert_eq!(b.rows, self.t);
        assert_eq!(b.cols, self.t);
        let values: Vec<F::Elem> = self
            .points
            .iter()
            .map(|pt| b.evaluate(pt).det().expect("square"))
            .collect();
        let poly = self.interpolate(&values);
        for (k, pt) in self.checks.iter().enumerate() {
            let direct = b.evaluate(pt).det().expect("square");
            if poly.eval(pt)? != direct {
                return Err(Error::InterpolationInconsistent { point: k });
            }
        }
        Ok(poly)
    }
}

/// Exact determinant of a square matrix of linear forms, by evaluation and
/// interpolation.
pub fn det_linear_matrix<F: Field>(b: &LinearMatrix<F>) -> Result<Polynomial<F>> {
    if b.rows != b.cols {
        return Err(Error::ArityMismatch {
            expected: b.rows,
            found: b.cols,
        });
    }
    if b.rows == 0 {
        return Ok(Polynomial::constant(&b.field, b.m, b.field.one()));
    }
    DetInterpolator::new(&b.field, b.m, b.rows)?.determinant(b)
}

/// All maximal minors of a specialized `R × t` matrix (`R ≥ t`), indexed
/// like `subsets`.
///
/// Picks `t` independent rows `P`, writes every row in that basis
/// (`C = B · B_P⁻¹`), and uses `det B_S = det B_P · det C_S`, where `C_S`
/// reduces to the small block on rows `S \ P`.
fn all_maximal_minors_at<F: Field>(f: &F, e: &ExactMatrix<F>, subsets: &[Vec<usize>]) -> Vec<F::Elem> {
    let rows = e.rows;
    let t = e.cols;
    let mut tr = e.transpose().to_rows();
    let pivots = rref_in_place(f, &mut tr, rows);
    if pivots.len() < t {
        return vec![f.zero(); subsets.len()];
    }
    let d_p = det_dense(f, e.select_rows(&pivots).data, t);
    let mut pos_in_p = vec![usize::MAX; rows];
    for (j, &p) in pivots.iter().enumerate() {
        pos_in_p[p] = j;
    }
    let mut in_s = vec![false; rows];
    subsets
        .iter()
        .map(|s| {
            for &r in s {
                in_s[r] = true;
            }
            let extra: Vec<usize> = s.iter().copied().filter(|&r| pos_in_p[r] == usize::MAX).collect();
            let missing: Vec<usize> = (0..t).filter(|&j| !in_s[pivots[j]]).collect();
            let k = extra.len();
            let mut inversions = 0usize;
            let mut seen_extra = 0usize;
            for &r in s {
                if pos_in_p[r] == usize::MAX {
                    seen_extra += 1;
                } else {
                    inversions += seen_extra;
                }
            }
            let mut seen_missing = 0usize;
            for j in 0..t {
                if !in_s[pivots[j]] {
                    seen_missing += 1;
                } else {
                    inversions += seen_missing;
                }
            }
            for &r in s {
                in_s[r] = false;
            }
            let mut block = Vec::with_capacity(k * k);
            for &r in &extra {
                for &j in &missing {
                    block.push(tr[j][r].clone());
                }
            }
            let d = f.mul(&det_dense(f, block, k), &d_p);
            if inversions % 2 == 1 {
                f.neg(&d)
            } else {
                d
            }
        })
        .collect()
}

/// All maximal minors of `b`, one per subset of the longer side in
/// lexicographic order; each is interpolated and re-verified.
pub fn maximal_minors<F: Field>(b: &LinearMatrix<F>) -> Result<Vec<(Vec<usize>, Polynomial<F>)>> {
    if b.rows < b.cols {
        return maximal_minors(&b.transpose());
    }
    let t = b.cols;
    if t == 0 {
        return Ok(vec![(Vec::new(), Polynomial::constant(&b.field, b.m, b.field.one()))]);
    }
    let interp = DetInterpolator::new(&b.field, b.m, t)?;
    let f = &b.field;
    let subsets = subsets_lex(b.rows, t);
    let per_point: Vec<Vec<F::Elem>> = interp
        .points
        .par_iter()
        .map(|pt| all_maximal_minors_at(f, &b.evaluate(pt), &subsets))
        .collect();
    let checks: Vec<ExactMatrix<F>> = interp.checks.iter().map(|pt| b.evaluate(pt)).collect();
    subsets
        .into_par_iter()
        .enumerate()
        .map(|(idx, rows)| {
            let values: Vec<F::Elem> = per_point.iter().map(|v| v[idx].clone()).collect();
            let poly = interp.interpolate(&values);
            for (k, (pt, e)) in interp.checks.iter().zip(&checks).enumerate() {
                if poly.eval(pt)? != det_dense(f, e.select_rows(&rows).data, t) {
                    return Err(Error::InterpolationInconsistent { point: k });
                }
            }
            Ok((rows, poly))
        })
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::parse_polynomial;

    #[test]
    fn identity_and_zero() {
        let f = PrimeField::default();
        let r = ExactMatrix::identity(&f, 5).rref();
        assert_eq!(r.rank, 5);
        assert!(r.kernel.is_empty());
        let z = ExactMatrix::zeros(&f, 3, 4).rref();
        assert_eq!(z.rank, 0);
        assert_eq!(z.kernel.len(), 4);
    }

    #[test]
    fn specialized_b1_has_full_rank() {
        let f = Rationals;
        let m = ExactMatrix::from_i64(&f, &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.rref().rank, 3);
    }

    #[test]
    fn kernel_annihilates() {
        let f = PrimeField::new(101).unwrap();
        let m = ExactMatrix::from_i64(&f, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        for v in &r.kernel {
            assert!(m.apply(v).iter().all(|x| *x == 0));
        }
        assert_eq!(r.rank + r.kernel.len(), 4);
    }

    #[test]
    fn det_of_b1() {
        let f = PrimeField::default();
        let rows: Vec<Vec<Polynomial<PrimeField>>> = [["a2", "a1", "0"], ["a3", "0", "a1"], ["0", "a3", "a2"]]
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(&f, 3, s).unwrap()).collect())
            .collect();
        let b = LinearMatrix::from_polynomials(&f, 3, &rows).unwrap();
        let d = det_linear_matrix(&b).unwrap();
        assert_eq!(d.render("a"), "-2*a1*a2*a3");
    }

    #[test]
    fn diagonal_det() {
        let f = PrimeField::default();
        for t in 1..6 {
            let mut b = LinearMatrix::zeros(&f, t, t, 3);
            for i in 0..t {
                b.coeffs_mut(i, i)[0] = 1;
            }
            let d = det_linear_matrix(&b).unwrap();
            assert_eq!(d.render("a"), format!("a1{}", if t > 1 { format!("^{t}") } else { String::new() }));
        }
    }

    #[test]
    fn subsets() {
        assert_eq!(subsets_lex(4, 2).len(), 6);
        assert_eq!(subsets_lex(4, 2)[0], vec![0, 1]);
        assert_eq!(subsets_lex(4, 2)[5], vec![2, 3]);
        assert_eq!(subsets_lex(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(subsets_lex(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets_lex(10, 8).len(), 45);
    }

    #[test]
    fn row_space_rref() {
        let f = PrimeField::new(101).unwrap();
        let mut s = RowSpace::new(&f, 3);
        assert!(s.insert(vec![0, 1, 1]));
        assert!(s.insert(vec![1, 1, 0]));
        assert!(!s.insert(vec![1, 2, 1]));
        let (rows, piv) = s.into_rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 100], vec![0, 1, 1]]);
    }
}
