use leflab_core::artinian::{gorenstein_from_points, random_ci, random_form, GradedAlgebra, LinearForm};
use leflab_core::field::{derive_seed, seeded_rng};
use leflab_core::groebner::{buchberger, dimension_degree};
use leflab_core::locus::{
    dual_matrix, gorenstein_middle_degree, is_in_locus, locus_in_degree, minors_vanish_at, non_lefschetz_locus,
};
use leflab_core::{Field, PrimeField};
use rand::Rng;

#[test]
fn hypersurfaces_have_their_degree() {
    let f = PrimeField::default();
    let mut rng = seeded_rng(3);
    for t in 1..=12 {
        let g = buchberger(&[random_form(&f, 3, t, &mut rng)]).unwrap();
        let dd = dimension_degree(&g);
        assert_eq!((dd.projective_dimension, dd.degree), (1, t as u64), "degree {t}");
    }
}

/// A linear form with some coordinates zeroed, so special points are hit.
fn sparse_form(f: &PrimeField, n: usize, rng: &mut impl Rng) -> LinearForm<PrimeField> {
    loop {
        let c: Vec<u64> = (0..n)
            .map(|_| if rng.gen_range(0..3) == 0 { 0 } else { f.random(rng, true) })
            .collect();
        if let Ok(l) = LinearForm::new(f, c) {
            return l;
        }
    }
}

#[test]
fn minors_vanish_exactly_where_rank_drops() {
    let f = PrimeField::default();
    let algebras = [
        GradedAlgebra::monomial_ci(&f, &[2, 2, 3, 3]).unwrap(),
        GradedAlgebra::monomial_ci(&f, &[2, 2, 5]).unwrap(),
        random_ci(&f, &[2, 2, 3], 4).unwrap(),
    ];
    let mut rng = seeded_rng(25);
    for a in &algebras {
        for i in 0..a.socle_degree() {
            let loc = locus_in_degree(a, i).unwrap();
            for _ in 0..25 {
                let l = sparse_form(&f, a.nvars(), &mut rng);
                assert_eq!(
                    is_in_locus(a, i, &l).unwrap(),
                    minors_vanish_at(&loc.minors, &l).unwrap(),
                    "{} degree {i}",
                    a.hvector()
                );
            }
        }
    }
}

#[test]
fn points_on_the_locus_fail_maximal_rank() {
    // The locus of a general (2,2,3) is a set of points; the matrix B_i
    // evaluated at a point of the locus must drop rank.
    let f = PrimeField::new(101).unwrap();
    let a = random_ci(&f, &[2, 2, 3], 9).unwrap();
    let i = gorenstein_middle_degree(a.socle_degree()).unwrap();
    let loc = locus_in_degree(&a, i).unwrap();
    let b = dual_matrix(&a, i).unwrap();
    let (rows, cols) = b.shape();
    let mut found = 0;
    for x in 0..101u64 {
        for y in 0..101u64 {
            let l = LinearForm::new(&f, vec![1, x, y]).unwrap();
            if minors_vanish_at(&loc.minors, &l).unwrap() {
                found += 1;
                assert!(b.specialize(&l).rank() < rows.min(cols));
            }
        }
    }
    assert!(found <= loc.report.computed_degree as usize);
}

#[test]
fn gorenstein_duality_of_rank_drops() {
    let f = PrimeField::default();
    let mut rng = seeded_rng(50);
    let pts: Vec<Vec<u64>> = (0..7).map(|_| (0..3).map(|_| f.random(&mut rng, true)).collect()).collect();
    let algebras = [
        gorenstein_from_points(&f, &pts, 6, 1).unwrap(),
        GradedAlgebra::monomial_ci(&f, &[2, 3, 4]).unwrap(),
        random_ci(&f, &[2, 2, 2, 3], 2).unwrap(),
    ];
    for a in &algebras {
        let e = a.socle_degree();
        for _ in 0..50 {
            let l = sparse_form(&f, a.nvars(), &mut rng);
            for i in 0..e {
                assert_eq!(is_in_locus(a, i, &l).unwrap(), is_in_locus(a, e - 1 - i, &l).unwrap());
            }
        }
    }
}

#[test]
fn seeded_loci_are_reproducible() {
    let f = PrimeField::default();
    let seed = derive_seed(5, 5);
    let a = random_ci(&f, &[2, 2, 2, 2], seed).unwrap();
    let b = random_ci(&f, &[2, 2, 2, 2], seed).unwrap();
    assert_eq!(a.generators(), b.generators());
    let la = non_lefschetz_locus(&a, true).unwrap();
    let lb = non_lefschetz_locus(&b, true).unwrap();
    assert_eq!(la.reports(), lb.reports());
    assert_eq!((la.dimension.projective_dimension, la.dimension.degree), (0, 20));
}
