mod common;

use common::{signs, sparse_square};
use matsemi::diagsim::{conjugate, diag_sim_nonneg, simultaneous_diag_sim};
use matsemi::harness::{sign_search_oracle, subset_invariance_oracle};
use matsemi::structure::{classify_decomposability, pattern_digraph};
use matsemi::{DecompositionKind, Matrix, Scalar, SignDiagonal};
use proptest::prelude::*;

fn sized<S: Strategy>(
    max_n: usize,
    f: impl Fn(usize) -> S,
) -> impl Strategy<Value = (usize, S::Value)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), f(n)))
}

fn permuted(m: &Matrix, p: &[usize]) -> Matrix {
    let pm = Matrix::permutation(p);
    pm.product(m).unwrap().product(&pm.transpose()).unwrap()
}

proptest! {
    #[test]
    fn pattern_survives_diagonal_conjugation((n, (m, s)) in sized(5, |n| (sparse_square(n, -2, 2), signs(n)))) {
        let _ = n;
        let w = SignDiagonal::new(s).unwrap().to_witness();
        let c = conjugate(&w, &m).unwrap();
        prop_assert_eq!(pattern_digraph(&c).unwrap(), pattern_digraph(&m).unwrap());
    }

    #[test]
    fn scc_count_is_permutation_invariant((n, (m, p)) in sized(5, |n| (sparse_square(n, -2, 2), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))) {
        let _ = n;
        let a = classify_decomposability(&m).unwrap();
        let b = classify_decomposability(&permuted(&m, &p)).unwrap();
        prop_assert_eq!(a.scc_count, b.scc_count);
        prop_assert_eq!(a.kind, b.kind);
    }

    #[test]
    fn decomposable_iff_invariant_coordinate_subspace(m in (1usize..=5).prop_flat_map(|n| sparse_square(n, -2, 2))) {
        let report = classify_decomposability(&m).unwrap();
        let oracle = subset_invariance_oracle(&m).unwrap();
        prop_assert_eq!(report.is_decomposable(), oracle.decomposable);
        prop_assert_eq!(report.kind == DecompositionKind::Indecomposable, report.scc_count == 1);
    }

    #[test]
    fn witness_permutation_is_block_upper_triangular(m in (1usize..=5).prop_flat_map(|n| sparse_square(n, -2, 2))) {
        let report = classify_decomposability(&m).unwrap();
        let pm = report.permute(&m);
        let mut block = vec![0; m.rows()];
        let mut pos = 0;
        for (b, comp) in report.sccs.iter().enumerate() {
            for _ in comp {
                block[pos] = b;
                pos += 1;
            }
        }
        for i in 0..m.rows() {
            for j in 0..m.rows() {
                if block[i] > block[j] {
                    prop_assert!(pm.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn diagsim_agrees_with_sign_search(ms in common::collection(4, 3)) {
        let fast = simultaneous_diag_sim(&ms).unwrap();
        let oracle = sign_search_oracle(&ms).unwrap();
        prop_assert_eq!(fast.is_some(), oracle.is_some());
        if let Some(w) = fast {
            for m in &ms {
                prop_assert!(conjugate(&w, m).unwrap().is_nonnegative());
            }
            prop_assert!(w.to_signs().is_some());
        }
    }

    #[test]
    fn planted_collections_are_recovered((n, (base, s)) in sized(5, |n| (prop::collection::vec(sparse_square(n, 0, 3), 1..=3), signs(n)))) {
        let _ = n;
        let w = SignDiagonal::new(s).unwrap().to_witness();
        let ms: Vec<Matrix> = base.iter().map(|m| conjugate(&w, m).unwrap()).collect();
        let found = simultaneous_diag_sim(&ms).unwrap();
        prop_assert!(found.is_some());
    }

    #[test]
    fn verdict_is_gauge_invariant((n, (m, s)) in sized(5, |n| (sparse_square(n, -2, 2), signs(n)))) {
        let _ = n;
        let w = SignDiagonal::new(s).unwrap().to_witness();
        let c = conjugate(&w, &m).unwrap();
        prop_assert_eq!(diag_sim_nonneg(&m).unwrap().is_some(), diag_sim_nonneg(&c).unwrap().is_some());
    }

    #[test]
    fn complex_phases_are_found((n, (base, phases)) in sized(4, |n| (sparse_square(n, 0, 3), prop::collection::vec(0usize..4, n)))) {
        let _ = n;
        let unit = [Scalar::from_int(1), Scalar::complex(0, 1), Scalar::from_int(-1), Scalar::complex(0, -1)];
        let d: Vec<Scalar> = phases.iter().map(|&k| unit[k].clone()).collect();
        let w = matsemi::DiagonalWitness::new(d).unwrap();
        let m = conjugate(&w, &base).unwrap();
        let found = diag_sim_nonneg(&m).unwrap();
        prop_assert!(found.is_some());
        prop_assert!(conjugate(&found.unwrap(), &m).unwrap().is_nonnegative());
    }
}
