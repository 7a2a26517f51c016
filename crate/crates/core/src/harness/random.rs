//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cones::Cone;
use crate::diagsim::{conjugate, SignDiagonal};
use crate::linalg::{ints, Matrix, Scalar};
use crate::semigroup::is_irreducible;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer matrix with entries drawn uniformly from `lo..=hi`.
pub fn int_matrix<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect();
    Matrix::from_ints(&rows)
}

/// Entries in `{-2..2}` with roughly half of them zero.
pub fn sign_sparse_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        0
                    } else {
                        rng.gen_range(-2..=2)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_ints(&rows)
}

pub fn sign_diagonal<R: Rng>(rng: &mut R, n: usize) -> SignDiagonal {
    SignDiagonal::new(
        (0..n)
            .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect(),
    )
    .expect("signs are ±1")
}

/// Conjugates every member by the same sign diagonal.
pub fn conjugate_all(signs: &SignDiagonal, ms: &[Matrix]) -> Vec<Matrix> {
    let w = signs.to_witness();
    ms.iter()
        .map(|m| conjugate(&w, m).expect("matching order"))
        .collect()
}

/// A nonnegative collection conjugated by a hidden sign diagonal.
pub fn planted_collection<R: Rng>(
    rng: &mut R,
    n: usize,
    count: usize,
) -> (Vec<Matrix>, SignDiagonal) {
    let d = sign_diagonal(rng, n);
    let base: Vec<Matrix> = (0..count)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_bool(0.5) {
                                0
                            } else {
                                rng.gen_range(1..=3)
                            }
                        })
                        .collect()
                })
                .collect();
            Matrix::from_ints(&rows)
        })
        .collect();
    (conjugate_all(&d, &base), d)
}

fn random_cycle<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut perm = vec![0; n];
    for k in 0..n {
        perm[order[k]] = order[(k + 1) % n];
    }
    perm
}

fn weighted_cycle<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let p = Matrix::permutation(&random_cycle(rng, n));
    let w: Vec<Scalar> = (0..n)
        .map(|_| Scalar::from_int(rng.gen_range(1..=3)))
        .collect();
    Matrix::diagonal(&w).product(&p).expect("same order")
}

/// Two positively weighted `n`-cycles, sign-conjugated. Each generator `g`
/// satisfies `g^n = c·I` with `c > 0`, so its inverse is a positive multiple
/// of `g^(n-1)`. Irreducibility is retried for, not assumed; the returned
/// flag reports whether it was found.
pub fn planted_monomial_group<R: Rng>(rng: &mut R, n: usize) -> (Vec<Matrix>, SignDiagonal, bool) {
    let mut gens = Vec::new();
    let mut irreducible = false;
    for _ in 0..20 {
        gens = vec![weighted_cycle(rng, n), weighted_cycle(rng, n)];
        if is_irreducible(&gens).unwrap_or(false) {
            irreducible = true;
            break;
        }
    }
    let d = sign_diagonal(rng, n);
    (conjugate_all(&d, &gens), d, irreducible)
}

fn spanning_nonneg_vectors<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Scalar>> {
    loop {
        let vs: Vec<Vec<Scalar>> = (0..n)
            .map(|_| ints(&(0..n).map(|_| rng.gen_range(0..=2)).collect::<Vec<_>>()))
            .collect();
        if crate::linalg::elim::rank(vs.clone()) == n {
            return vs;
        }
    }
}

/// Nonnegative idempotent of rank two: two positive rank-one idempotents on
/// complementary coordinate blocks. Its pattern has exactly two strongly
/// connected components.
pub fn block_idempotent<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut coords: Vec<usize> = (0..n).collect();
    coords.shuffle(rng);
    let split = rng.gen_range(1..n);
    let mut e = Matrix::zeros(n, n);
    for block in [&coords[..split], &coords[split..]] {
        let u: Vec<i64> = block.iter().map(|_| rng.gen_range(1..=3)).collect();
        let v: Vec<i64> = block.iter().map(|_| rng.gen_range(1..=3)).collect();
        let uv: i64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        for (a, &i) in block.iter().enumerate() {
            for (b, &j) in block.iter().enumerate() {
                e.set(i, j, Scalar::from_ratio(u[a] * v[b], uv));
            }
        }
    }
    e
}

/// Rank-one outer products `x_i y_i^T` from spanning nonnegative families
/// plus a rank-two block idempotent, all sign-conjugated. The closure is
/// finite; rank-two members are 1-decomposable.
pub fn planted_semigroup<R: Rng>(rng: &mut R, n: usize) -> (Vec<Matrix>, SignDiagonal) {
    let xs = spanning_nonneg_vectors(rng, n);
    let ys = spanning_nonneg_vectors(rng, n);
    let mut gens: Vec<Matrix> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| Matrix::outer(x, y))
        .collect();
    // cross terms keep the rank-one part irreducible more often
    gens.push(Matrix::outer(&xs[0], &ys[n - 1]));
    gens.push(block_idempotent(rng, n));
    let d = sign_diagonal(rng, n);
    (conjugate_all(&d, &gens), d)
}

/// Rank-one generators with entries in `{-1, 0, 1}` and no planted
/// structure. Their closures are finite up to positive scaling.
pub fn rank_one_generators<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<Matrix> {
    (0..count)
        .map(|_| loop {
            let x = ints(&(0..n).map(|_| rng.gen_range(-1..=1)).collect::<Vec<_>>());
            let y = ints(&(0..n).map(|_| rng.gen_range(-1..=1)).collect::<Vec<_>>());
            let m = Matrix::outer(&x, &y);
            if !m.is_zero() {
                break m;
            }
        })
        .collect()
}

/// Random rational cone with `count` generators in `{-3..3}^n`.
pub fn cone<R: Rng>(rng: &mut R, n: usize, count: usize) -> Cone {
    let rays = (0..count)
        .map(|_| ints(&(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>()))
        .collect();
    Cone::new(n, rays).expect("dimensions agree")
}

/// Random nonnegative matrix with entries in `0..=max`.
pub fn nonneg_matrix<R: Rng>(rng: &mut R, n: usize, max: i64) -> Matrix {
    int_matrix(rng, n, 0, max)
}
