mod common;

use common::*;
use flagpos::exact::{cauchy_binet_check, rat, subsets, Mat, SubsetIndex};
use flagpos::flags::*;
use flagpos::positivity::*;
use flagpos::sample::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unipotent(n: usize, r: &mut ChaCha8Rng) -> Mat {
    let mut m = random_int_mat(n, n, 3, r);
    for i in 0..n {
        for j in 0..=i {
            m.set(i, j, rat(if i == j { 1 } else { 0 }));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_matches_cofactor_expansion(seed in any::<u64>(), n in 1usize..=5) {
        let a = random_int_mat(n, n, 4, &mut rng(seed));
        prop_assert_eq!(a.det().unwrap(), cofactor_det(&a.to_rows()));
    }

    #[test]
    fn all_minors_match_oracle(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=4) {
        let a = random_int_mat(rows, cols, 3, &mut rng(seed));
        let order = rows.min(cols);
        let got = a.all_minors(order).unwrap();
        let mut expected = Vec::new();
        for r in subsets_oracle(rows, order) {
            for c in subsets_oracle(cols, order) {
                expected.push((r.clone(), c.clone(), cofactor_minor(&a, &r, &c)));
            }
        }
        let got: Vec<_> = got.into_iter().map(|(r, c, v)| (r.members().to_vec(), c.members().to_vec(), v)).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn cauchy_binet_holds(seed in any::<u64>(), m in 1usize..=4, p in 1usize..=4, q in 1usize..=4) {
        let mut r = rng(seed);
        let a = random_int_mat(m, p, 3, &mut r);
        let b = random_int_mat(p, q, 3, &mut r);
        for k in 1..=m.min(q) {
            prop_assert!(cauchy_binet_check(&a, &b, k).unwrap());
        }
    }

    #[test]
    fn rank_nullity(seed in any::<u64>(), rows in 1usize..=5, cols in 1usize..=5) {
        let a = random_int_mat(rows, cols, 1, &mut rng(seed));
        let kernel = a.nullspace();
        prop_assert_eq!(a.rank() + kernel.cols(), cols);
        if kernel.cols() > 0 {
            let product = a.mul(&kernel).unwrap();
            prop_assert_eq!(product, Mat::zeros(rows, kernel.cols()));
        }
        let (echelon, pivots) = a.column_echelon();
        prop_assert_eq!(echelon.cols(), a.rank());
        prop_assert_eq!(pivots.len(), a.rank());
        prop_assert!(a.column_span_eq(&echelon));
    }

    #[test]
    fn perp_is_an_involution_with_complementary_coordinates(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let k = 1 + (seed as usize) % (n - 1);
        let v = random_gr_point(n, k, &mut r);
        let w = perp(&v);
        prop_assert_eq!(w.k(), n - k);
        prop_assert!(perp(&w).same_subspace(&v));
        let lhs: Vec<_> = v.plucker_coords().into_iter().map(|(_, x)| x).collect();
        let rhs: Vec<_> = subsets(n, k)
            .iter()
            .map(|i| {
                let comp = i.complement();
                w.plucker_coords().into_iter().find(|(j, _)| *j == comp).unwrap().1
            })
            .collect();
        prop_assert!(proportional(&lhs, &rhs));
    }

    #[test]
    fn plucker_vector_ignores_column_operations(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let a = random_int_mat(n, n - 1, 3, &mut r);
        let dims: Vec<usize> = (1..n).filter(|&k| a.first_columns(k).rank() == k).collect();
        prop_assume!(dims.len() == n - 1);
        let flag = Flag::new(n, dims.clone(), a.clone()).unwrap();
        let mixed = Flag::new(n, dims.clone(), a.mul(&unipotent(n - 1, &mut r)).unwrap()).unwrap();
        for &k in &dims {
            prop_assert_eq!(plucker(&flag, k).unwrap(), plucker(&mixed, k).unwrap());
            let oracle: Vec<_> = plucker_oracle(&a, k).into_iter().map(|(_, x)| x).collect();
            let got: Vec<_> = plucker(&flag, k).unwrap().coords().values().map(|x| flagpos::exact::Rat::from_integer(x.clone())).collect();
            prop_assert!(proportional(&oracle, &got));
        }
    }

    #[test]
    fn fekete_is_sound(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=3) {
        let mut r = rng(seed);
        let a = if rows >= cols { random_tp_matrix(rows, &mut r).first_columns(cols) } else { random_int_mat(rows, cols, 3, &mut r) };
        if a.rows() >= a.cols() && fekete_positive(&a).unwrap() {
            prop_assert!(top_minors_positive(&a));
        }
        let b = fekete_candidate(rows.max(cols), cols, &mut r);
        if fekete_positive(&b).unwrap() {
            prop_assert!(top_minors_positive(&b));
        }
        let c = random_int_mat(rows.max(cols), cols, 3, &mut r);
        if fekete_positive(&c).unwrap() {
            prop_assert!(top_minors_positive(&c));
        }
    }

    #[test]
    fn extensions_stay_positive(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let k = 1 + (seed as usize) % (n - 1);
        let v = random_positive_gr_point(n, k, &mut r);
        let up = extend_up(&v).unwrap();
        prop_assert_eq!(up.k(), k + 1);
        prop_assert!(up.contains(&v));
        prop_assert!(up.is_plucker_positive());
        let down = extend_down(&v).unwrap();
        prop_assert_eq!(down.k(), k - 1);
        prop_assert!(v.contains(&down));
        prop_assert!(down.k() == 0 || down.is_plucker_positive());
    }

    #[test]
    fn nested_pair_lemma(seed in any::<u64>(), n in 2usize..=6) {
        let (v, w, c) = random_nested_pair(n, &mut rng(seed));
        prop_assert!(counterexample_lemma_check(&v, &w, &c).unwrap());
    }

    #[test]
    fn cyclic_shift_rotates_coordinates(seed in any::<u64>(), n in 3usize..=6, odd in any::<bool>()) {
        let eps = if odd { Parity::Odd } else { Parity::Even };
        let dims: Vec<usize> = (1..n).filter(|&k| Parity::of(k) == eps).collect();
        let flag = random_positive_flag(n, &dims, &mut rng(seed)).unwrap();
        let shifted = cyclic_shift(&flag, eps).unwrap();
        for &k in &dims {
            prop_assert_eq!(plucker(&shifted, k).unwrap(), plucker(&flag, k).unwrap().rotated());
        }
        prop_assert_eq!(classify_plucker(&shifted).unwrap(), PluckerClass::PluckerPositive);
        let mut back = shifted;
        for _ in 1..n {
            back = cyclic_shift(&back, eps).unwrap();
        }
        for &k in &dims {
            prop_assert_eq!(plucker(&back, k).unwrap(), plucker(&flag, k).unwrap());
        }
    }

    #[test]
    fn witnesses_represent_the_flag(seed in any::<u64>(), n in 2usize..=4, low in 1usize..=3, span in 0usize..=2) {
        prop_assume!(low + span < n);
        let dims: Vec<usize> = (low..=low + span).collect();
        let flag = random_positive_flag(n, &dims, &mut rng(seed)).unwrap();
        let complete = complete_flag(&flag).unwrap();
        for &k in &dims {
            prop_assert_eq!(plucker(&complete, k).unwrap(), plucker(&flag, k).unwrap());
        }
        let witness = tp_witness_complete(&complete).unwrap();
        prop_assert!(all_minors_positive(&witness.matrix));
        let as_flag = Flag::new(n, (1..n).collect(), witness.matrix.clone()).unwrap();
        for k in 1..n {
            prop_assert_eq!(plucker(&as_flag, k).unwrap(), plucker(&complete, k).unwrap());
        }
    }

    #[test]
    fn flag_json_round_trip(seed in any::<u64>(), n in 2usize..=5) {
        let flag = random_positive_flag(n, &[1], &mut rng(seed)).unwrap();
        let text = serde_json::to_string(&flag).unwrap();
        let back: Flag = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, flag);
    }
}

#[test]
fn subset_enumeration_matches_bitmask_oracle() {
    for n in 0..=6 {
        for k in 0..=n {
            let got: Vec<Vec<usize>> = subsets(n, k).iter().map(|s| s.members().to_vec()).collect();
            assert_eq!(got, subsets_oracle(n, k));
        }
    }
    assert!(SubsetIndex::new(3, vec![2, 1]).is_err());
}
