use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::monomial::Monomial;

/// A sparse multivariate polynomial.
///
/// Terms are kept sorted with the grevlex-largest monomial first and no
/// zero coefficients are ever stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    n: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, n: usize) -> Self {
        Polynomial {
            field: field.clone(),
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, n: usize, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(n), c)
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let n = m.nvars();
        let terms = if field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            field: field.clone(),
            n,
            terms,
        }
    }

    pub fn var(field: &F, n: usize, i: usize) -> Self {
        Self::term(field, Monomial::var(n, i), field.one())
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(field: &F, coeffs: &[F::Elem]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(i, c)| (Monomial::var(n, i), c.clone()))
            .collect();
        Polynomial {
            field: field.clone(),
            n,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(field: &F, n: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), n);
            let e = acc.entry(m).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
        Self::from_map(field, n, acc)
    }

    fn from_map(field: &F, n: usize, acc: HashMap<Monomial, F::Elem>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            field: field.clone(),
            n,
            terms,
        }
    }

    /// Wraps already sorted, zero-free terms.
    pub(crate) fn from_sorted_terms(field: &F, n: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !field.is_zero(c)));
        Polynomial {
            field: field.clone(),
            n,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &F::Elem| if negate { f.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            field: f.clone(),
            n: self.n,
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        Ok(Self::from_map(f, self.n, acc))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, self.n);
        }
        Polynomial {
            field: self.field.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// Multiplies by a monomial; order is preserved.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            field: self.field.clone(),
            n: self.n,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.n, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Evaluates at a full coordinate tuple.
    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        let f = &self.field;
        let mut powers: Vec<Vec<F::Elem>> = Vec::with_capacity(self.n);
        for (i, x) in point.iter().enumerate() {
            let maxe = self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0) as usize;
            let mut p = Vec::with_capacity(maxe + 1);
            p.push(f.one());
            for k in 1..=maxe {
                p.push(f.mul(&p[k - 1], x));
            }
            powers.push(p);
        }
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = f.mul(&t, &powers[i][e as usize]);
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Evaluates at scalars of the polynomial's field.
    pub fn eval_scalars(&self, point: &[Scalar]) -> Result<Scalar> {
        let pt: Vec<F::Elem> = point
            .iter()
            .map(|s| self.field.from_scalar(s))
            .collect::<Result<_>>()?;
        Ok(self.field.to_scalar(&self.eval(&pt)?))
    }

    /// Substitutes `x_i ↦ images[i]`, typically linear forms in new variables;
    /// with two new variables this restricts to a parameterized line.
    pub fn substitute_linear(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: images.len(),
            });
        }
        let m = images.first().map(|p| p.n).unwrap_or(0);
        for img in images {
            if img.field != self.field {
                return Err(Error::FieldMismatch);
            }
            if img.n != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: img.n,
                });
            }
        }
        let f = &self.field;
        let mut cache: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(f, m, f.one()), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(f, m);
        for (mono, c) in &self.terms {
            let mut t = Polynomial::constant(f, m, c.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().mul(&images[i])?;
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e])?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// True when `self = c · other` for some nonzero scalar `c`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        self.monic() == other.monic()
    }

    /// Coefficients as tagged scalars, largest monomial first.
    pub fn scalar_terms(&self) -> Vec<(Monomial, Scalar)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.to_scalar(c)))
            .collect()
    }

    /// Text form with variables named `{prefix}1..{prefix}n`; residues above
    /// p/2 are printed as negatives.
    pub fn render(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut cs = self.field.signed_repr(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let unit = m.degree() == 0;
            if unit {
                s.push_str(&cs);
            } else if cs == "1" {
                s.push_str(&m.render(prefix));
            } else {
                s.push_str(&cs);
                s.push('*');
                s.push_str(&m.render(prefix));
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn difference_of_squares() {
        let f = Rationals;
        let x1 = Polynomial::var(&f, 2, 0);
        let x2 = Polynomial::var(&f, 2, 1);
        let p = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        assert_eq!(p.render("x"), "x1^2 - x2^2");
    }

    #[test]
    fn evaluation() {
        let f = Rationals;
        let m = Polynomial::term(&f, Monomial::from_exponents(&[1, 1, 1]), f.one());
        assert_eq!(m.eval(&[f.one(), f.one(), f.zero()]).unwrap(), f.zero());
        let a = Polynomial::term(&f, Monomial::from_exponents(&[4, 4, 4]), f.one());
        assert_eq!(
            a.eval(&[f.from_i64(1), f.from_i64(2), f.from_i64(1)]).unwrap(),
            f.from_i64(16)
        );
        assert!(a.eval(&[f.one()]).is_err());
    }

    #[test]
    fn line_restriction() {
        let f = PrimeField::default();
        // a1*a2 on the line (s, t) -> (s + t, s - t) gives s^2 - t^2
        let p = Polynomial::term(&f, Monomial::from_exponents(&[1, 1]), 1);
        let l1 = Polynomial::linear(&f, &[1, 1]);
        let l2 = Polynomial::linear(&f, &[1, f.neg(&1)]);
        let r = p.substitute_linear(&[l1, l2]).unwrap();
        assert_eq!(r.render("s"), "s1^2 - s2^2");
    }

    #[test]
    fn mismatched_rings() {
        let f = PrimeField::default();
        let g = PrimeField::new(101).unwrap();
        let a = Polynomial::var(&f, 2, 0);
        let b = Polynomial::var(&f, 3, 0);
        assert!(matches!(a.add(&b), Err(Error::ArityMismatch { .. })));
        let c = Polynomial::var(&g, 2, 0);
        assert_eq!(a.mul(&c), Err(Error::FieldMismatch));
    }

    #[test]
    fn render_negative_residues() {
        let f = PrimeField::default();
        let p = Polynomial::term(&f, Monomial::from_exponents(&[1, 1, 1]), f.from_i64(-2));
        assert_eq!(p.render("a"), "-2*a1*a2*a3");
    }

    #[test]
    fn scalar_multiples() {
        let f = PrimeField::default();
        let p = Polynomial::linear(&f, &[1, 2, 3]);
        assert!(p.scale(&5).is_scalar_multiple_of(&p));
        assert!(!p.is_scalar_multiple_of(&Polynomial::linear(&f, &[1, 2, 4])));
    }
}
