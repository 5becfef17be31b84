use leflab_core::artinian::{random_ci, random_form, LinearForm};
use leflab_core::field::seeded_rng;
use leflab_core::groebner::{audit, buchberger, ideal_intersection, normal_form};
use leflab_core::lefjordan::jordan_type;
use leflab_core::linalg::ExactMatrix;
use leflab_core::{Field, PrimeField};
use proptest::prelude::*;
use rand::Rng;

fn cofactor_det(f: &PrimeField, m: &[Vec<u64>]) -> u64 {
    if m.len() == 1 {
        return m[0][0];
    }
    let mut acc = f.zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<u64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| *x).collect())
            .collect();
        let term = f.mul(&m[0][c], &cofactor_det(f, &minor));
        acc = if c % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
    }
    acc
}

#[test]
fn determinant_matches_cofactor_expansion() {
    let f = PrimeField::default();
    let mut rng = seeded_rng(17);
    for _ in 0..100 {
        let rows: Vec<Vec<u64>> = (0..4).map(|_| (0..4).map(|_| f.random(&mut rng, false)).collect()).collect();
        let m = ExactMatrix::from_rows(&f, rows.clone()).unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&f, &rows));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_invariant_under_row_permutation(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7, rot in 0usize..7) {
        let f = PrimeField::new(101).unwrap();
        let mut rng = seeded_rng(seed);
        let data: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { 0 } else { f.random(&mut rng, false) }).collect())
            .collect();
        let mut permuted = data.clone();
        permuted.rotate_left(rot % rows);
        permuted.reverse();
        let a = ExactMatrix::from_rows(&f, data).unwrap();
        let b = ExactMatrix::from_rows(&f, permuted).unwrap();
        prop_assert_eq!(a.rank(), b.rank());
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn products_with_ideal_elements_reduce_to_zero(seed in any::<u64>(), d1 in 1usize..4, d2 in 1usize..4, d3 in 0usize..3) {
        let f = PrimeField::default();
        let mut rng = seeded_rng(seed);
        let gens = vec![random_form(&f, 3, d1, &mut rng), random_form(&f, 3, d2, &mut rng)];
        prop_assume!(gens.iter().all(|g| !g.is_zero()));
        let g = buchberger(&gens).unwrap();
        prop_assert!(audit(&g).is_ok());
        let h = random_form(&f, 3, d3, &mut rng);
        for p in &gens {
            let prod = p.mul(&h).unwrap();
            prop_assert!(normal_form(&prod, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn intersection_contains_products(seed in any::<u64>(), d1 in 1usize..3, d2 in 1usize..3) {
        let f = PrimeField::default();
        let mut rng = seeded_rng(seed);
        let a = random_form(&f, 3, d1, &mut rng);
        let b = random_form(&f, 3, d2, &mut rng);
        let c = random_form(&f, 3, 1, &mut rng);
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let gi = buchberger(&[a.clone(), c.clone()]).unwrap();
        let gj = buchberger(std::slice::from_ref(&b)).unwrap();
        let meet = ideal_intersection(&gi, &gj).unwrap();
        prop_assert!(audit(&meet).is_ok());
        prop_assert!(meet.contains(&a.mul(&b).unwrap()).unwrap());
        prop_assert!(meet.contains(&c.mul(&b).unwrap()).unwrap());
        for g in meet.polynomials() {
            prop_assert!(gi.contains(g).unwrap());
            prop_assert!(gj.contains(g).unwrap());
        }
    }

    #[test]
    fn jordan_partitions_sum_to_dimension(seed in any::<u64>(), d1 in 2usize..4, d2 in 2usize..4, d3 in 2usize..4) {
        let f = PrimeField::default();
        let a = random_ci(&f, &[d1, d2, d3], seed).unwrap();
        let mut rng = seeded_rng(seed ^ 1);
        let l = LinearForm::random(&f, 3, &mut rng);
        prop_assert_eq!(jordan_type(&a, &l).unwrap().sum(), a.dim());
    }
}
