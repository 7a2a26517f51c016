//! Inputs shared by the criterion benchmarks.

use matsemi::harness::fixtures::{a3, outer_products};
use matsemi::harness::random::{self, planted_collection};
use matsemi::{Cone, Matrix};

/// The final worked example: nine rank-one outer products plus `A_3`.
pub fn final_example_generators() -> Vec<Matrix> {
    let mut gens = outer_products(3);
    gens.push(a3());
    gens
}

/// Seeded sign-conjugated nonnegative collections of order `n`.
pub fn planted_collections(n: usize, count: usize, seed: u64) -> Vec<Vec<Matrix>> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| planted_collection(&mut rng, n, 3).0)
        .collect()
}

/// Seeded random cones with `2n` generators.
pub fn random_cones(n: usize, count: usize, seed: u64) -> Vec<Cone> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| random::cone(&mut rng, n, 2 * n))
        .collect()
}
