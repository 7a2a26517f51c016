#![allow(dead_code)]

use matsemi::{Matrix, Scalar};
use proptest::prelude::*;

pub fn int_rows(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n)
}

pub fn square(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    int_rows(n, lo, hi).prop_map(|r| Matrix::from_ints(&r))
}

pub fn any_square(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(move |n| square(n, lo, hi))
}

/// Entries in `lo..=hi`, about half of them zero.
pub fn sparse_square(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec((any::<bool>(), lo..=hi), n), n).prop_map(|rows| {
        let r: Vec<Vec<i64>> = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|(z, v)| if z { 0 } else { v })
                    .collect()
            })
            .collect();
        Matrix::from_ints(&r)
    })
}

pub fn collection(max_n: usize, max_count: usize) -> impl Strategy<Value = Vec<Matrix>> {
    (1..=max_n, 1..=max_count)
        .prop_flat_map(|(n, k)| prop::collection::vec(sparse_square(n, -2, 2), k))
}

pub fn signs(n: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n)
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}
