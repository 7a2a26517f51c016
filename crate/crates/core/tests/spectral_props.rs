mod common;

use matsemi::harness::pattern_power_positive;
use matsemi::spectral::{is_primitive, perron, power_iteration, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use matsemi::Matrix;
use proptest::prelude::*;

fn row_sums(m: &Matrix) -> Vec<f64> {
    m.to_f64_rows().iter().map(|r| r.iter().sum()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn perron_root_is_bounded_by_row_sums(m in (1usize..=6).prop_flat_map(|n| common::sparse_square(n, 0, 5))) {
        let r = perron(&m, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        let sums = row_sums(&m);
        let lo = sums.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = sums.iter().cloned().fold(0.0, f64::max);
        prop_assert!(lo - 1e-7 <= r.rho && r.rho <= hi + 1e-7);
        let diag_max = m.to_f64_rows().iter().enumerate().map(|(i, r)| r[i]).fold(0.0, f64::max);
        prop_assert!(r.rho + 1e-7 >= diag_max);
        prop_assert!(r.residual <= DEFAULT_TOL);
        prop_assert!(r.right_vector.iter().all(|&x| x >= 0.0));
        prop_assert!(r.left_vector.iter().all(|&x| x >= 0.0));
        prop_assert!((r.right_vector.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn positive_matrices_have_positive_vectors(m in (1usize..=5).prop_flat_map(|n| common::square(n, 1, 5))) {
        let r = perron(&m, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        prop_assert!(r.right_vector.iter().all(|&x| x > 0.0));
        prop_assert!(r.left_vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn primitive_inputs_converge_unshifted(m in (1usize..=4).prop_flat_map(|n| common::sparse_square(n, 0, 3))) {
        prop_assume!(is_primitive(&m).unwrap());
        let shifted = perron(&m, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        let plain = power_iteration(&m, 0.0, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        prop_assert!((shifted.rho - plain.rho).abs() <= 1e-6 * shifted.rho.max(1.0));
    }

    #[test]
    fn primitivity_matches_pattern_powers(m in (1usize..=5).prop_flat_map(|n| common::sparse_square(n, 0, 2))) {
        prop_assert_eq!(is_primitive(&m).unwrap(), pattern_power_positive(&m).unwrap());
    }
}
