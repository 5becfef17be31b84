use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial in a fixed number of variables.
///
/// The `Ord` instance is graded reverse lexicographic with
/// `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

/// A monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Block order eliminating the first `k` variables: compare the degree
    /// in those variables first, then grevlex inside each block.
    Elimination(usize),
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// Index of the only variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn cmp_in(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => grevlex(&self.exps, &other.exps),
            MonomialOrder::Elimination(k) => {
                let k = k.min(self.exps.len());
                let da: u32 = self.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = other.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| grevlex(&self.exps[..k], &other.exps[..k]))
                    .then_with(|| grevlex(&self.exps[k..], &other.exps[k..]))
            }
        }
    }

    /// Renders with variables named `{prefix}1 .. {prefix}n`; the unit monomial renders as `1`.
    pub fn render(&self, prefix: &str) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{prefix}{}", i + 1)),
                _ => parts.push(format!("{prefix}{}^{e}", i + 1)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

/// All monomials of degree `d` in `n` variables, largest first in grevlex.
pub fn monomial_basis(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fill(&mut cur, 0, d, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Same as [`monomial_basis`] but sorted decreasingly for `order`.
pub fn monomial_basis_in(n: usize, d: usize, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = monomial_basis(n, d);
    if order != MonomialOrder::Grevlex {
        out.sort_unstable_by(|a, b| b.cmp_in(a, order));
    }
    out
}

fn fill(cur: &mut Vec<u16>, i: usize, left: usize, out: &mut Vec<Monomial>) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left as u16;
        out.push(Monomial::from_exponents(cur));
        return;
    }
    for e in 0..=left {
        cur[i] = e as u16;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// `C(n, k)` in 128-bit arithmetic; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial((d + n - 1) as u64, (n - 1) as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_forms_in_variable_order() {
        let b = monomial_basis(3, 1);
        assert_eq!(b, vec![Monomial::var(3, 0), Monomial::var(3, 1), Monomial::var(3, 2)]);
    }

    #[test]
    fn quadrics_in_grevlex_order() {
        let b: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]);
        assert_eq!(monomial_basis(4, 3).len(), 20);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 1..=6 {
            for d in 0..=12 {
                assert_eq!(monomial_basis(n, d).len(), monomial_count(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn elimination_puts_first_variable_on_top() {
        let t = Monomial::from_exponents(&[1, 0, 0]);
        let big = Monomial::from_exponents(&[0, 5, 0]);
        assert_eq!(t.cmp_in(&big, MonomialOrder::Elimination(1)), Ordering::Greater);
        let b = monomial_basis_in(3, 2, MonomialOrder::Elimination(1));
        assert_eq!(b[0], Monomial::from_exponents(&[2, 0, 0]));
        assert_eq!(b.last().unwrap(), &Monomial::from_exponents(&[0, 0, 2]));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 3, 0]));
        assert!(!a.divides(&b));
        assert!(Monomial::from_exponents(&[1, 1, 0]).divides(&a));
        assert_eq!(a.div(&b), None);
        assert!(a.is_coprime(&Monomial::var(3, 2)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(19, 16), 969);
        assert_eq!(binomial(3, 5), 0);
    }
}
