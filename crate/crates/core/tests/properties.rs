use lrhive::bijections::{
    gz1_to_hive, gz2_to_hive, hive_content_matrix, hive_gz_maps, hive_to_lr, lr_to_hive,
    lr_to_hive_direct, phi_gz_to_lr, phi_lr_to_gz, psi_gz2_to_lr, psi_lr_to_gz2,
};
use lrhive::gt::{check_exponents, check_ic1, check_ic2, exponent, gz_membership, is_gt_pattern};
use lrhive::hives::{
    boundary_of, check_rc, derived_t1, derived_t2, derived_t3, fiber_coordinates, is_hive,
    reconstruct_from_t1, reconstruct_from_t2,
};
use lrhive::sample;
use lrhive::tableaux::{
    gt_to_tableau, is_yamanouchi_word, pattern_content_matrix, skew_to_truncated_gt, symbolic,
    tableau_to_gt, truncated_gt_to_skew,
};
use lrhive::types::dual_weight;
use lrhive::{DominantWeight, Entry, HArray, LRTriple, Shape, SkewTableau, TArray};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn triple_of(h: &HArray) -> LRTriple {
    let b = boundary_of(h).unwrap();
    LRTriple::new(b.mu().clone(), b.nu().clone(), b.lambda().clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dual_weight_is_an_involution(mut parts in prop::collection::vec(-9i64..9, 1..7)) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let w = DominantWeight::new(parts).unwrap();
        prop_assert_eq!(dual_weight(&dual_weight(&w)), w);
    }

    #[test]
    fn tarray_duality_laws(seed in any::<u64>(), n in 1usize..7) {
        let t = sample::tarray(&mut rng(seed), n, -5, 5);
        let d = t.dual();
        prop_assert_eq!(d.dual(), t.clone());
        let neg: Vec<Entry> = t.weight().iter().map(|w| -w).collect();
        prop_assert_eq!(d.weight(), neg);
        prop_assert_eq!(t.weight().iter().sum::<Entry>(), t.type_row().iter().sum::<Entry>());
        prop_assert_eq!(check_ic1(&t), check_ic2(&d));
        prop_assert_eq!(check_ic2(&t), check_ic1(&d));
    }

    #[test]
    fn exponent_is_linear(seed in any::<u64>(), n in 2usize..7) {
        let mut r = rng(seed);
        let s = sample::tarray(&mut r, n, -5, 5);
        let t = sample::tarray(&mut r, n, -5, 5);
        let sum = s.checked_add(&t).unwrap();
        for i in 1..n {
            for j in 1..=i {
                prop_assert_eq!(
                    exponent(&sum, i, j).unwrap(),
                    exponent(&s, i, j).unwrap() + exponent(&t, i, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn rhombus_and_interlacing_conditions(seed in any::<u64>(), n in 1usize..6) {
        let h = sample::harray(&mut rng(seed), n, -5, 5);
        let (t1, t2, t3) = (derived_t1(&h), derived_t2(&h), derived_t3(&h));
        let (rc1, rc2, rc3) = check_rc(&h);
        prop_assert_eq!(rc1, check_ic2(&t1) && check_ic1(&t2));
        prop_assert_eq!(rc2, check_ic1(&t1) && check_ic1(&t3));
        prop_assert_eq!(rc3, check_ic2(&t2) && check_ic2(&t3));
        prop_assert_eq!(check_ic1(&t3), check_ic1(&t1));
        prop_assert_eq!(check_ic2(&t3), check_ic2(&t2));
        prop_assert_eq!(is_hive(&h), is_gt_pattern(&t1) && is_gt_pattern(&t2));
        let (f1, f2) = fiber_coordinates(&h);
        prop_assert_eq!(f1, f2);
    }

    #[test]
    fn boundary_restricted_equivalences(seed in any::<u64>(), n in 1usize..5) {
        let (t, h) = sample::perturbed_hive(&mut rng(seed), n, 3, 2);
        let (t1, t2) = (derived_t1(&h), derived_t2(&h));
        let t1s = t1.dual();
        let lam_minus_nu: Vec<Entry> = (1..=n).rev().map(|i| t.lambda().part(i) - t.nu().part(i)).collect();
        let lam_minus_mu: Vec<Entry> = (1..=n).map(|i| t.lambda().part(i) - t.mu().part(i)).collect();
        prop_assert_eq!(t1.weight(), lam_minus_nu);
        prop_assert_eq!(t2.weight(), lam_minus_mu);
        prop_assert_eq!(check_ic1(&t1), check_exponents(&t2, t.mu().parts()));
        prop_assert_eq!(check_ic2(&t1), check_ic1(&t2));
        prop_assert_eq!(check_exponents(&t1s, t.nu().dual().parts()), check_ic2(&t2));
        let hive = is_hive(&h);
        prop_assert_eq!(hive, gz_membership(&t1s, &t.gz1()).unwrap().is_ok());
        prop_assert_eq!(hive, gz_membership(&t2, &t.gz2()).unwrap().is_ok());
        let b = t.boundary().unwrap();
        prop_assert_eq!(reconstruct_from_t1(&b, &t1).unwrap(), h.clone());
        prop_assert_eq!(reconstruct_from_t2(&b, &t2).unwrap(), h);
    }

    #[test]
    fn tableau_conditions_match_rhombus_conditions(seed in any::<u64>(), n in 1usize..5) {
        let (t, h) = sample::perturbed_hive(&mut rng(seed), n, 3, 2);
        let a = hive_content_matrix(&h);
        let (rc1, rc2, rc3) = check_rc(&h);
        let off_diagonal_nonneg = (0..n).all(|l| (l + 1..n).all(|m| a[l][m] >= 0));
        prop_assert_eq!(rc1, off_diagonal_nonneg);
        prop_assert_eq!(rc2, symbolic::is_semistandard(t.mu().parts(), &a));
        prop_assert_eq!(rc3, symbolic::is_yamanouchi(&a));
    }

    #[test]
    fn pattern_matrix_conditions(seed in any::<u64>(), n in 1usize..7) {
        let t = sample::tarray(&mut rng(seed), n, -5, 5);
        let a = pattern_content_matrix(&t);
        let below_diagonal_nonneg = (0..n).all(|i| (0..i).all(|j| a[i][j] >= 0));
        prop_assert_eq!(check_ic1(&t), below_diagonal_nonneg);
        prop_assert_eq!(check_ic2(&t), symbolic::is_semistandard(&vec![0; n], &a));
    }

    #[test]
    fn semigroup_closure(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        let (_, g) = sample::hive(&mut r, n, 3);
        let (_, h) = sample::hive(&mut r, n, 3);
        prop_assert!(is_hive(&g.checked_add(&h).unwrap()));
        let s = sample::gt_pattern(&mut r, n, 6);
        let t = sample::gt_pattern(&mut r, n, 6);
        prop_assert!(is_gt_pattern(&s.checked_add(&t).unwrap()));
    }

    #[test]
    fn yamanouchi_word_matches_symbolic_form(seed in any::<u64>(), n in 1usize..5) {
        let y = sample::skew_tableau(&mut rng(seed), n, 4);
        prop_assert_eq!(is_yamanouchi_word(&y.reverse_reading_word()), y.is_yamanouchi_symbolic());
    }

    #[test]
    fn straight_tableau_round_trip(seed in any::<u64>(), n in 1usize..6) {
        let t = sample::gt_pattern(&mut rng(seed), n, 5);
        let y = gt_to_tableau(&t).unwrap();
        prop_assert_eq!(y.content(), t.weight());
        prop_assert_eq!(tableau_to_gt(&y).unwrap(), t);
    }

    #[test]
    fn truncated_pattern_round_trip(seed in any::<u64>(), n in 1usize..5) {
        let y = sample::skew_tableau(&mut rng(seed), n, 4);
        let f = skew_to_truncated_gt(&y).unwrap();
        prop_assert_eq!(f.interlacing_violation(), None);
        prop_assert_eq!(truncated_gt_to_skew(&f, y.shape().inner()).unwrap(), y);
    }

    #[test]
    fn bijections_round_trip(seed in any::<u64>(), n in 1usize..5) {
        let (t, y) = sample::lr_tableau(&mut rng(seed), n, 3);
        let s1 = phi_lr_to_gz(&y, &t).unwrap();
        prop_assert_eq!(phi_gz_to_lr(&s1, &t).unwrap(), y.clone());
        let s2 = psi_lr_to_gz2(&y, &t).unwrap();
        prop_assert_eq!(psi_gz2_to_lr(&s2, &t).unwrap(), y.clone());
        let h = lr_to_hive(&y, &t).unwrap();
        prop_assert_eq!(lr_to_hive_direct(&y, &t).unwrap(), h.clone());
        prop_assert_eq!(hive_to_lr(&h, &t).unwrap(), y);
        let (g1, g2) = hive_gz_maps(&h).unwrap();
        prop_assert_eq!(g1.clone(), s1);
        prop_assert_eq!(g2.clone(), s2);
        prop_assert_eq!(gz1_to_hive(&g1, &t).unwrap(), h.clone());
        prop_assert_eq!(gz2_to_hive(&g2, &t).unwrap(), h.clone());
        prop_assert_eq!(triple_of(&h), t);
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        let (t, y) = sample::lr_tableau(&mut r, n, 3);
        let h = lr_to_hive(&y, &t).unwrap();
        let s = sample::tarray(&mut r, n, -5, 5);
        let w = sample::partition(&mut r, n, 5);
        let shape = y.shape().clone();
        prop_assert_eq!(serde_json::from_str::<LRTriple>(&serde_json::to_string(&t).unwrap()).unwrap(), t);
        prop_assert_eq!(serde_json::from_str::<SkewTableau>(&serde_json::to_string(&y).unwrap()).unwrap(), y);
        prop_assert_eq!(serde_json::from_str::<HArray>(&serde_json::to_string(&h).unwrap()).unwrap(), h);
        prop_assert_eq!(serde_json::from_str::<TArray>(&serde_json::to_string(&s).unwrap()).unwrap(), s);
        prop_assert_eq!(serde_json::from_str::<DominantWeight>(&serde_json::to_string(&w).unwrap()).unwrap(), w);
        prop_assert_eq!(serde_json::from_str::<Shape>(&serde_json::to_string(&shape).unwrap()).unwrap(), shape);
    }
}
