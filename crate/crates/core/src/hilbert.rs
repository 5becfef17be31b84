//! Hilbert series of monomial ideals by pivot splitting.
//!
//! For a monomial ideal `M` in `n` variables the Hilbert series of `R/M` is
//! `N(t) / (1 − t)^n`. The numerator satisfies
//! `N(M) = N(M + p) + t^{deg p} · N(M : p)` for any monomial `p`, which
//! terminates in ideals generated by pairwise coprime monomials where
//! `N = ∏ (1 − t^{deg g})`.

use crate::poly::Monomial;

/// Integer polynomial in `t`, lowest degree first.
pub type IntPoly = Vec<i128>;

fn add_into(acc: &mut IntPoly, p: &IntPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as usize).sum::<usize>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn numerator_rec(gens: Vec<Vec<u16>>) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    let n = gens[0].len();
    let all_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| coprime(a, b)));
    if all_coprime {
        let mut p: IntPoly = vec![1];
        for g in &gens {
            let d: usize = g.iter().map(|&e| e as usize).sum();
            let mut q = vec![0i128; p.len() + d];
            for (k, c) in p.iter().enumerate() {
                q[k] += c;
                q[k + d] -= c;
            }
            p = q;
        }
        return trim(p);
    }
    // Pivot on the variable occurring in the most generators that share
    // variables with others, at the smallest such positive exponent.
    let mut best = (0usize, 0usize);
    for v in 0..n {
        let count = gens.iter().filter(|g| g[v] > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let v = best.0;
    let a = gens
        .iter()
        .filter(|g| g[v] > 0 && g.iter().filter(|&&e| e > 0).count() > 1)
        .map(|g| g[v])
        .min()
        .unwrap_or_else(|| gens.iter().filter(|g| g[v] > 0).map(|g| g[v]).min().unwrap());
    let mut pivot = vec![0u16; n];
    pivot[v] = a;
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(a);
            h
        })
        .collect();
    let mut out = numerator_rec(plus);
    add_into(&mut out, &numerator_rec(colon), a as usize);
    trim(out)
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1 − t)^n` of `R/⟨gens⟩`.
pub fn hilbert_numerator(n: usize, gens: &[Monomial]) -> IntPoly {
    let g: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    if g.is_empty() {
        return vec![1];
    }
    debug_assert!(g.iter().all(|x| x.len() == n));
    numerator_rec(g)
}

/// Splits `N(t) = (1 − t)^k · Q(t)` with `Q(1) ≠ 0`; returns `(k, Q)`.
/// The zero polynomial yields `(0, [])`.
pub fn factor_one_minus_t(num: &IntPoly) -> (usize, IntPoly) {
    let mut q = trim(num.clone());
    if q.is_empty() {
        return (0, q);
    }
    let mut k = 0;
    while q.iter().sum::<i128>() == 0 {
        let mut next = Vec::with_capacity(q.len());
        let mut acc = 0i128;
        for c in &q[..q.len() - 1] {
            acc += c;
            next.push(acc);
        }
        q = trim(next);
        k += 1;
    }
    (k, q)
}

/// Hilbert function values `dim (R/M)_d` for `d = 0..len` from a numerator.
pub fn hilbert_function(n: usize, num: &IntPoly, len: usize) -> Vec<i128> {
    if n == 0 {
        return (0..len).map(|d| num.get(d).copied().unwrap_or(0)).collect();
    }
    // Multiply by 1/(1 − t)^n = Σ C(d + n − 1, n − 1) t^d.
    let mut series = vec![0i128; len];
    for (k, c) in num.iter().enumerate() {
        for (d, slot) in series.iter_mut().enumerate().skip(k) {
            let m = d - k;
            *slot += c * crate::poly::binomial((m + n - 1) as u64, (n - 1) as u64) as i128;
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn principal_ideal() {
        let n = hilbert_numerator(3, &[m(&[1, 1, 1])]);
        assert_eq!(n, vec![1, 0, 0, -1]);
        let (k, q) = factor_one_minus_t(&n);
        assert_eq!(k, 1);
        assert_eq!(q.iter().sum::<i128>(), 3);
    }

    #[test]
    fn mixed_ideal_matches_direct_count() {
        let gens = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 3, 1]), m(&[0, 1, 2])];
        let num = hilbert_numerator(3, &gens);
        let hf = hilbert_function(3, &num, 8);
        for d in 0..8 {
            let count = crate::poly::monomial_basis(3, d)
                .iter()
                .filter(|x| !gens.iter().any(|g| g.divides(x)))
                .count();
            assert_eq!(hf[d], count as i128, "degree {d}");
        }
    }

    #[test]
    fn unit_ideal() {
        let n = hilbert_numerator(2, &[m(&[0, 0])]);
        assert!(trim(n).is_empty());
    }
}
