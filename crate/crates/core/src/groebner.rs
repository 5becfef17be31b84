//! Homogeneous Buchberger algorithm, normal forms, intersections and
//! dimension/degree of quotients.
//!
//! Bases are computed degree by degree. All S-polynomials of one degree are
//! reduced together in a dense vector indexed by the monomials of that
//! degree, so every degree step is plain Gaussian elimination against the
//! multiples of the current basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{factor_one_minus_t, hilbert_function, hilbert_numerator, IntPoly};
use crate::poly::{monomial_basis_in, Monomial, MonomialOrder, Polynomial};

/// Default cap on the number of reduced S-pairs and inputs.
pub const DEFAULT_MAX_REDUCTIONS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerOptions {
    pub max_reductions: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_reductions: DEFAULT_MAX_REDUCTIONS,
        }
    }
}

/// A reduced Gröbner basis of a homogeneous ideal.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    n: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
}

/// Terms sorted decreasingly in the engine's order, leading coefficient one.
type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

impl<F: Field> GroebnerBasis<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polynomials(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.degree() == 0)
    }

    /// Membership test by reduction to zero.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    fn sorted_terms(&self, p: &Polynomial<F>) -> Terms<F> {
        let mut t = p.terms().to_vec();
        if self.order != MonomialOrder::Grevlex {
            let order = self.order;
            t.sort_by(|a, b| b.0.cmp_in(&a.0, order));
        }
        t
    }
}

fn sort_terms<F: Field>(p: &Polynomial<F>, order: MonomialOrder) -> Terms<F> {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| b.0.cmp_in(&a.0, order));
    }
    t
}

fn check_inputs<F: Field>(field: &F, n: usize, gens: &[Polynomial<F>]) -> Result<()> {
    for (index, g) in gens.iter().enumerate() {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.nvars() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: g.nvars(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneousGenerator { index });
        }
    }
    Ok(())
}

/// Reduced Gröbner basis in grevlex with default options.
///
/// The field and arity are taken from the first generator; use
/// [`buchberger_with`] for an empty generator list.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>]) -> Result<GroebnerBasis<F>> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("no generators; use buchberger_with".into()))?;
    buchberger_with(
        first.field(),
        first.nvars(),
        gens,
        MonomialOrder::Grevlex,
        GroebnerOptions::default(),
    )
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Per-degree dense workspace.
struct DegreeSpace<'a, F: Field> {
    field: &'a F,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `None` = not yet looked up, `Some(None)` = standard monomial.
    reducers: Vec<Option<Option<Vec<(usize, F::Elem)>>>>,
}

impl<'a, F: Field> DegreeSpace<'a, F> {
    fn new(field: &'a F, n: usize, d: usize, order: MonomialOrder) -> Self {
        let monos = monomial_basis_in(n, d, order);
        let index = monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let len = monos.len();
        DegreeSpace {
            field,
            monos,
            index,
            reducers: vec![None; len],
        }
    }

    fn shifted(&self, g: &Terms<F>, u: &Monomial) -> Vec<(usize, F::Elem)> {
        g.iter()
            .map(|(m, c)| (self.index[&m.mul(u)], c.clone()))
            .collect()
    }

    fn dense(&self, g: &Terms<F>, u: &Monomial, scale: &F::Elem, v: &mut [F::Elem]) {
        let f = self.field;
        for (m, c) in g {
            let k = self.index[&m.mul(u)];
            v[k] = f.add(&v[k], &f.mul(scale, c));
        }
    }

    fn reducer(&mut self, k: usize, basis: &[Terms<F>], leads: &[Monomial]) -> bool {
        if self.reducers[k].is_none() {
            let m = &self.monos[k];
            let found = leads
                .iter()
                .position(|l| l.divides(m))
                .map(|i| self.shifted(&basis[i], &m.div(&leads[i]).expect("divides")));
            self.reducers[k] = Some(found);
        }
        matches!(self.reducers[k], Some(Some(_)))
    }

    /// Fully reduces `v`; returns the index of the leading standard monomial
    /// if the result is nonzero. The result is made monic.
    fn reduce(&mut self, v: &mut [F::Elem], basis: &[Terms<F>], leads: &[Monomial]) -> Option<usize> {
        let f = self.field;
        let mut lead = None;
        for k in 0..v.len() {
            if f.is_zero(&v[k]) {
                continue;
            }
            if self.reducer(k, basis, leads) {
                let c = v[k].clone();
                let Some(Some(row)) = &self.reducers[k] else { unreachable!() };
                for (idx, a) in row {
                    v[*idx] = f.sub(&v[*idx], &f.mul(&c, a));
                }
            } else if lead.is_none() {
                lead = Some(k);
            }
        }
        let k = lead?;
        let inv = f.inv(&v[k]).expect("nonzero");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        Some(k)
    }

    fn to_terms(&self, v: &[F::Elem]) -> Terms<F> {
        let f = self.field;
        v.iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| (self.monos[k].clone(), c.clone()))
            .collect()
    }

    fn all_reducible(&mut self, basis: &[Terms<F>], leads: &[Monomial]) -> bool {
        (0..self.monos.len()).all(|k| self.reducer(k, basis, leads))
    }
}

/// Gebauer–Möller update for a new basis element with leading monomial
/// `leads[h]`.
fn update_pairs(pairs: &mut Vec<Pair>, leads: &[Monomial], h: usize) {
    let lh = &leads[h];
    let mut candidates: Vec<Pair> = (0..h)
        .map(|g| Pair {
            i: g,
            j: h,
            lcm: leads[g].lcm(lh),
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = leads[p.i].is_coprime(lh);
        let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !leads[p.i].is_coprime(lh));
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && leads[p.i].lcm(lh) != p.lcm
            && leads[p.j].lcm(lh) != p.lcm)
    });
    pairs.extend(kept);
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens` in
/// `n` variables for the given order.
pub fn buchberger_with<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    opts: GroebnerOptions,
) -> Result<GroebnerBasis<F>> {
    check_inputs(field, n, gens)?;
    let mut inputs: BTreeMap<usize, Vec<Terms<F>>> = BTreeMap::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let d = g.homogeneous_degree().expect("homogeneous");
        inputs.entry(d).or_default().push(sort_terms(g, order));
    }
    let mut basis: Vec<Terms<F>> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut work = 0usize;

    loop {
        let next_pair = pairs.iter().map(|p| p.lcm.degree()).min();
        let next_input = inputs.keys().next().copied();
        let d = match (next_pair, next_input) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut space = DegreeSpace::new(field, n, d, order);
        let batch: Vec<Pair>;
        (batch, pairs) = pairs.into_iter().partition(|p| p.lcm.degree() == d);
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        let one = field.one();
        let minus_one = field.neg(&one);
        for p in &batch {
            let mut v = vec![field.zero(); space.monos.len()];
            let ui = p.lcm.div(&leads[p.i]).expect("lcm");
            let uj = p.lcm.div(&leads[p.j]).expect("lcm");
            space.dense(&basis[p.i], &ui, &one, &mut v);
            space.dense(&basis[p.j], &uj, &minus_one, &mut v);
            rows.push(v);
        }
        for g in inputs.remove(&d).unwrap_or_default() {
            let mut v = vec![field.zero(); space.monos.len()];
            space.dense(&g, &Monomial::one(n), &one, &mut v);
            rows.push(v);
        }
        for mut v in rows {
            work += 1;
            if work > opts.max_reductions {
                return Err(Error::BudgetExceeded {
                    limit: opts.max_reductions,
                });
            }
            if let Some(k) = space.reduce(&mut v, &basis, &leads) {
                let terms = space.to_terms(&v);
                let row: Vec<(usize, F::Elem)> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                leads.push(space.monos[k].clone());
                basis.push(terms);
                space.reducers[k] = Some(Some(row));
                update_pairs(&mut pairs, &leads, leads.len() - 1);
            }
        }
        if space.all_reducible(&basis, &leads) {
            break;
        }
    }
    Ok(finish(field, n, order, basis, leads))
}

/// Tail-reduces a minimal basis and sorts it by degree, then by leading
/// monomial decreasing.
fn finish<F: Field>(
    field: &F,
    n: usize,
    order: MonomialOrder,
    basis: Vec<Terms<F>>,
    leads: Vec<Monomial>,
) -> GroebnerBasis<F> {
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        leads[a]
            .degree()
            .cmp(&leads[b].degree())
            .then_with(|| leads[b].cmp_in(&leads[a], order))
    });
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in &idx {
        by_degree.entry(leads[i].degree()).or_default().push(i);
    }
    let mut polys = Vec::with_capacity(basis.len());
    let mut out_leads = Vec::with_capacity(basis.len());
    for (d, members) in by_degree {
        let mut space = DegreeSpace::new(field, n, d, order);
        for i in members {
            let mut v = vec![field.zero(); space.monos.len()];
            space.dense(&basis[i], &Monomial::one(n), &field.one(), &mut v);
            let skip = space.index[&leads[i]];
            reduce_keep_scale(&mut space, &mut v, &basis, &leads, Some(skip));
            polys.push(Polynomial::from_terms(field, n, space.to_terms(&v)));
            out_leads.push(leads[i].clone());
        }
    }
    GroebnerBasis {
        field: field.clone(),
        n,
        order,
        polys,
        leads: out_leads,
    }
}

/// Remainder of `f` modulo `g`; zero iff `f` lies in the ideal.
///
/// Works componentwise on homogeneous parts, so `f` need not be homogeneous.
pub fn normal_form<F: Field>(f: &Polynomial<F>, g: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    if f.field() != &g.field {
        return Err(Error::FieldMismatch);
    }
    if f.nvars() != g.n {
        return Err(Error::ArityMismatch {
            expected: g.n,
            found: f.nvars(),
        });
    }
    let field = &g.field;
    let basis: Vec<Terms<F>> = g.polys.iter().map(|p| g.sorted_terms(p)).collect();
    let mut parts: BTreeMap<usize, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        parts.entry(m.degree()).or_default().push((m.clone(), c.clone()));
    }
    let mut out = Vec::new();
    for (d, terms) in parts {
        let mut space = DegreeSpace::new(field, g.n, d, g.order);
        let mut v = vec![field.zero(); space.monos.len()];
        for (m, c) in &terms {
            v[space.index[m]] = c.clone();
        }
        reduce_keep_scale(&mut space, &mut v, &basis, &g.leads, None);
        out.extend(space.to_terms(&v));
    }
    Ok(Polynomial::from_terms(field, g.n, out))
}

fn reduce_keep_scale<F: Field>(
    space: &mut DegreeSpace<'_, F>,
    v: &mut [F::Elem],
    basis: &[Terms<F>],
    leads: &[Monomial],
    skip: Option<usize>,
) {
    let f = space.field;
    for k in 0..v.len() {
        if Some(k) == skip || f.is_zero(&v[k]) || !space.reducer(k, basis, leads) {
            continue;
        }
        let c = v[k].clone();
        let Some(Some(row)) = &space.reducers[k] else { unreachable!() };
        for (idx, a) in row {
            v[*idx] = f.sub(&v[*idx], &f.mul(&c, a));
        }
    }
}

/// Ordering key for the sparse audit reducer.
#[derive(Clone, PartialEq, Eq)]
struct Key(Monomial, MonomialOrder);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_in(&other.0, self.1)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sparse_remainder<F: Field>(g: &GroebnerBasis<F>, mut work: BTreeMap<Key, F::Elem>) -> bool {
    let f = &g.field;
    while let Some((key, c)) = work.pop_last() {
        let Some(i) = g.leads.iter().position(|l| l.divides(&key.0)) else {
            return false;
        };
        let u = key.0.div(&g.leads[i]).expect("divides");
        let p = &g.polys[i];
        let lc = p.coefficient(&g.leads[i]);
        let s = f.div(&c, &lc).expect("nonzero lead");
        for (m, a) in p.terms() {
            let mm = m.mul(&u);
            if mm == key.0 {
                continue;
            }
            let k = Key(mm, g.order);
            let e = work.entry(k.clone()).or_insert_with(|| f.zero());
            *e = f.sub(e, &f.mul(&s, a));
            if f.is_zero(e) {
                work.remove(&k);
            }
        }
    }
    true
}

/// Independent check that every S-polynomial reduces to zero and that the
/// basis is reduced. Returns the first offending pair on failure.
pub fn audit<F: Field>(g: &GroebnerBasis<F>) -> std::result::Result<(), String> {
    let f = &g.field;
    for (i, p) in g.polys.iter().enumerate() {
        for (m, _) in p.terms() {
            if *m != g.leads[i] && g.leads.iter().any(|l| l.divides(m)) {
                return Err(format!("element {i} is not tail-reduced"));
            }
        }
        for (j, l) in g.leads.iter().enumerate() {
            if i != j && l.divides(&g.leads[i]) {
                return Err(format!("leading monomial of {j} divides that of {i}"));
            }
        }
    }
    for i in 0..g.polys.len() {
        for j in i + 1..g.polys.len() {
            if g.leads[i].is_coprime(&g.leads[j]) {
                continue;
            }
            let l = g.leads[i].lcm(&g.leads[j]);
            let ci = g.polys[i].coefficient(&g.leads[i]);
            let cj = g.polys[j].coefficient(&g.leads[j]);
            let mut work: BTreeMap<Key, F::Elem> = BTreeMap::new();
            for (p, u, s) in [
                (&g.polys[i], l.div(&g.leads[i]).expect("lcm"), f.inv(&ci).expect("lead")),
                (&g.polys[j], l.div(&g.leads[j]).expect("lcm"), f.neg(&f.inv(&cj).expect("lead"))),
            ] {
                for (m, a) in p.terms() {
                    let k = Key(m.mul(&u), g.order);
                    let e = work.entry(k.clone()).or_insert_with(|| f.zero());
                    *e = f.add(e, &f.mul(&s, a));
                    if f.is_zero(e) {
                        work.remove(&k);
                    }
                }
            }
            if !sparse_remainder(g, work) {
                return Err(format!("S-polynomial of ({i}, {j}) does not reduce to zero"));
            }
        }
    }
    Ok(())
}

/// Intersection of two ideals given by Gröbner bases in the same ring.
///
/// Uses `⟨t·f, (s − t)·g⟩` in two extra variables, eliminates `t`, and sets
/// `s = 1` in the surviving generators.
pub fn ideal_intersection<F: Field>(g1: &GroebnerBasis<F>, g2: &GroebnerBasis<F>) -> Result<GroebnerBasis<F>> {
    ideal_intersection_with(g1, g2, GroebnerOptions::default())
}

pub fn ideal_intersection_with<F: Field>(
    g1: &GroebnerBasis<F>,
    g2: &GroebnerBasis<F>,
    opts: GroebnerOptions,
) -> Result<GroebnerBasis<F>> {
    if g1.field != g2.field {
        return Err(Error::FieldMismatch);
    }
    if g1.n != g2.n {
        return Err(Error::ArityMismatch {
            expected: g1.n,
            found: g2.n,
        });
    }
    let field = &g1.field;
    let n = g1.n;
    if g1.is_unit() {
        return Ok(g2.clone());
    }
    if g2.is_unit() {
        return Ok(g1.clone());
    }
    let lift = |p: &Polynomial<F>, extra: &[u16]| -> Polynomial<F> {
        Polynomial::from_terms(
            field,
            n + 2,
            p.terms().iter().map(|(m, c)| {
                let mut e = extra.to_vec();
                e.extend_from_slice(m.exponents());
                (Monomial::from_exponents(&e), c.clone())
            }),
        )
    };
    let mut gens = Vec::new();
    for p in &g1.polys {
        gens.push(lift(p, &[1, 0]));
    }
    for p in &g2.polys {
        gens.push(lift(p, &[0, 1]).sub(&lift(p, &[1, 0]))?);
    }
    let big = buchberger_with(field, n + 2, &gens, MonomialOrder::Elimination(1), opts)?;
    let mut out = Vec::new();
    for p in big.polynomials() {
        if p.terms().iter().all(|(m, _)| m.exp(0) == 0) {
            out.push(Polynomial::from_terms(
                field,
                n,
                p.terms()
                    .iter()
                    .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[2..]), c.clone())),
            ));
        }
    }
    buchberger_with(field, n, &out, MonomialOrder::Grevlex, opts)
}

/// Dimension and degree of the projective scheme cut out by an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionDegree {
    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub krull_dimension: isize,
    /// Dimension of the projective scheme; `-1` when it is empty.
    pub projective_dimension: isize,
    /// `n − krull_dimension`.
    pub codimension: isize,
    /// Hilbert-polynomial degree; for an empty scheme this is the vector
    /// space length of the quotient, and zero for the unit ideal.
    pub degree: u64,
    /// Numerator of the Hilbert series over `(1 − t)^n`, lowest degree first.
    pub hilbert_series_numerator: Vec<i64>,
    /// Numerator over `(1 − t)^{krull_dimension}` after cancelling.
    pub reduced_numerator: Vec<i64>,
}

/// Hilbert series data of `R/I` from the leading monomials of a basis.
pub fn dimension_degree<F: Field>(g: &GroebnerBasis<F>) -> DimensionDegree {
    let n = g.n;
    let num = hilbert_numerator(n, &g.leads);
    let (k, q) = factor_one_minus_t(&num);
    let to64 = |p: &IntPoly| p.iter().map(|&c| c as i64).collect::<Vec<_>>();
    if q.is_empty() {
        return DimensionDegree {
            krull_dimension: -1,
            projective_dimension: -1,
            codimension: n as isize + 1,
            degree: 0,
            hilbert_series_numerator: Vec::new(),
            reduced_numerator: Vec::new(),
        };
    }
    let krull = n as isize - k as isize;
    let degree: i128 = q.iter().sum();
    DimensionDegree {
        krull_dimension: krull,
        projective_dimension: (krull - 1).max(-1),
        codimension: n as isize - krull,
        degree: degree.max(0) as u64,
        hilbert_series_numerator: to64(&num),
        reduced_numerator: to64(&q),
    }
}

/// Values of the Hilbert function of `R/I` in degrees `0..len`.
pub fn hilbert_function_of<F: Field>(g: &GroebnerBasis<F>, len: usize) -> Vec<i128> {
    hilbert_function(g.n, &hilbert_numerator(g.n, &g.leads), len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{seeded_rng, PrimeField};
    use crate::poly::parse_polynomial;

    fn ps(f: &PrimeField, n: usize, xs: &[&str]) -> Vec<Polynomial<PrimeField>> {
        xs.iter().map(|s| parse_polynomial(f, n, s).unwrap()).collect()
    }

    fn gb(f: &PrimeField, n: usize, xs: &[&str]) -> GroebnerBasis<PrimeField> {
        let g = buchberger(&ps(f, n, xs)).unwrap();
        audit(&g).unwrap();
        g
    }

    #[test]
    fn monomial_ideals_are_their_own_bases() {
        let f = PrimeField::default();
        let g = gb(&f, 2, &["x1", "x2"]);
        assert_eq!(g.polynomials(), ps(&f, 2, &["x1", "x2"]).as_slice());
        let g = gb(&f, 3, &["a1*a2", "a1*a3"]);
        assert_eq!(g.polynomials(), ps(&f, 3, &["a1*a2", "a1*a3"]).as_slice());
    }

    #[test]
    fn minors_of_two_column_matrix() {
        let f = PrimeField::default();
        // maximal minors of [[a1,0],[a2,a1],[0,a2]]
        let g = gb(&f, 2, &["a1^2", "a1*a2", "a2^2"]);
        assert_eq!(g.len(), 3);
        let dd = dimension_degree(&g);
        assert_eq!(dd.projective_dimension, -1);
        assert_eq!(dd.degree, 3);
    }

    #[test]
    fn nontrivial_reduction() {
        let f = PrimeField::default();
        let g = gb(&f, 3, &["x1^2 - x2*x3", "x1*x2 - x3^2"]);
        let dd = dimension_degree(&g);
        assert_eq!(dd.projective_dimension, 0);
        assert_eq!(dd.degree, 4);
    }

    #[test]
    fn normal_forms() {
        let f = PrimeField::default();
        let g = gb(&f, 2, &["a1"]);
        let p = parse_polynomial(&f, 2, "a1^2*a2").unwrap();
        assert!(normal_form(&p, &g).unwrap().is_zero());
        let q = parse_polynomial(&f, 2, "a2^3").unwrap();
        assert_eq!(normal_form(&q, &g).unwrap(), q);
    }

    #[test]
    fn intersections() {
        let f = PrimeField::default();
        let a = gb(&f, 3, &["a1"]);
        let b = gb(&f, 3, &["a2"]);
        let c = ideal_intersection(&a, &b).unwrap();
        assert_eq!(c.polynomials(), ps(&f, 3, &["a1*a2"]).as_slice());
        let a = gb(&f, 3, &["a1", "a2"]);
        let b = gb(&f, 3, &["a3"]);
        let c = ideal_intersection(&a, &b).unwrap();
        assert_eq!(c.polynomials(), ps(&f, 3, &["a1*a3", "a2*a3"]).as_slice());
        let a = gb(&f, 3, &["a1"]);
        let c = ideal_intersection(&a, &a).unwrap();
        assert_eq!(c.polynomials(), a.polynomials());
    }

    #[test]
    fn dimension_and_degree() {
        let f = PrimeField::default();
        let dd = dimension_degree(&gb(&f, 3, &["a1*a2*a3"]));
        assert_eq!((dd.projective_dimension, dd.degree), (1, 3));
        let dd = dimension_degree(&gb(&f, 3, &["a1", "a2"]));
        assert_eq!((dd.projective_dimension, dd.degree), (0, 1));
        let dd = dimension_degree(&gb(&f, 3, &["1"]));
        assert_eq!((dd.krull_dimension, dd.degree), (-1, 0));
    }

    #[test]
    fn random_forms_are_hypersurfaces() {
        let f = PrimeField::default();
        let mut rng = seeded_rng(3);
        for t in 1..=6 {
            let p = crate::artinian::random_form(&f, 3, t, &mut rng);
            let dd = dimension_degree(&buchberger(&[p]).unwrap());
            assert_eq!((dd.projective_dimension, dd.degree), (1, t as u64));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = PrimeField::default();
        let gens = ps(&f, 3, &["x1^2 - x2*x3", "x1*x2 - x3^2", "x2^3 - x1*x3^2"]);
        let e = buchberger_with(&f, 3, &gens, MonomialOrder::Grevlex, GroebnerOptions { max_reductions: 1 });
        assert!(matches!(e, Err(Error::BudgetExceeded { limit: 1 })));
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let f = PrimeField::default();
        let e = buchberger(&ps(&f, 2, &["x1", "x2^2 + x1"])).unwrap_err();
        assert_eq!(e, Error::NonHomogeneousGenerator { index: 1 });
    }
}
