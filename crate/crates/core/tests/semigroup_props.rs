mod common;

use matsemi::harness::random;
use matsemi::harness::{verify_semigroup_theorem, TheoremKind};
use matsemi::semigroup::{algebra_dimension, canonical_form, generate_closure, rank_one_ideal};
use matsemi::{Caps, Matrix, Scalar};
use proptest::prelude::*;

const SMALL: Caps = Caps {
    max_elements: 200,
    max_word_length: 6,
};

fn generators(max_n: usize, max_count: usize) -> impl Strategy<Value = Vec<Matrix>> {
    (2..=max_n, 1..=max_count)
        .prop_flat_map(|(n, k)| prop::collection::vec(common::sparse_square(n, -1, 1), k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent_and_scale_free(m in common::any_square(4, -3, 3), num in 1i64..=7, den in 1i64..=7) {
        let c = canonical_form(&m);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(canonical_form(&m.scale_by(&Scalar::from_ratio(num, den))), c);
    }

    #[test]
    fn closure_elements_are_their_words(gens in generators(3, 3)) {
        let c = generate_closure(&gens, SMALL).unwrap();
        for e in &c.elements {
            prop_assert!(!e.word.is_empty() && e.word.len() <= SMALL.max_word_length);
            prop_assert_eq!(canonical_form(&c.evaluate(&e.word).unwrap()), e.canonical.clone());
        }
        prop_assert!(c.elements.len() <= SMALL.max_elements);
        for g in &gens {
            prop_assert!(c.contains(g));
        }
        if !c.truncated {
            prop_assert_eq!(c.find_unclosed_product(), None);
        }
    }

    #[test]
    fn rank_one_part_is_an_ideal(gens in generators(3, 3)) {
        let c = generate_closure(&gens, SMALL).unwrap();
        prop_assume!(!c.truncated);
        let ideal = rank_one_ideal(&c);
        for j in &ideal {
            for s in &c.elements {
                for p in [j.canonical.product(&s.canonical).unwrap(), s.canonical.product(&j.canonical).unwrap()] {
                    prop_assert!(p.rank() <= 1);
                    prop_assert!(c.contains(&p));
                }
            }
        }
    }

    #[test]
    fn algebra_dimension_is_similarity_invariant(gens in generators(3, 2), s in common::signs(3)) {
        let n = gens[0].rows();
        let d = matsemi::SignDiagonal::new(s[..n].to_vec()).unwrap();
        let conj = random::conjugate_all(&d, &gens);
        prop_assert_eq!(algebra_dimension(&gens).unwrap(), algebra_dimension(&conj).unwrap());
        prop_assert!(algebra_dimension(&gens).unwrap() <= n * n);
    }

    #[test]
    fn rank_one_semigroups_never_falsify(seed in any::<u64>(), n in 2usize..=3, count in 2usize..=4) {
        let mut rng = random::rng(seed);
        let gens = random::rank_one_generators(&mut rng, n, count);
        let report = verify_semigroup_theorem(&gens, Caps::default()).unwrap();
        prop_assert!(!report.falsified(), "{:?}", report);
        if n == 2 {
            prop_assert_eq!(report.theorem, TheoremKind::Semigroup2x2);
        }
    }
}
