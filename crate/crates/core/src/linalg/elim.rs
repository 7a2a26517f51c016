//! Exact Gaussian elimination.
//!
//! Pivots are chosen by largest `|z|^2` in the current column, ties going to
//! the lowest row index, so every run is deterministic.

use super::scalar::Scalar;

fn pick_pivot(rows: &[Vec<Scalar>], from: usize, col: usize) -> Option<usize> {
    let mut best: Option<(usize, num_rational::BigRational)> = None;
    for (r, row) in rows.iter().enumerate().skip(from) {
        if row[col].is_zero() {
            continue;
        }
        let mag = row[col].norm_sqr();
        match &best {
            Some((_, b)) if *b >= mag => {}
            _ => best = Some((r, mag)),
        }
    }
    best.map(|(r, _)| r)
}

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
pub(crate) fn echelon(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, r, c) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] * &inv;
            let (top, bottom) = rows.split_at_mut(i);
            let pivot_row = &top[r];
            for (dst, src) in bottom[0].iter_mut().zip(pivot_row).skip(c) {
                if !src.is_zero() {
                    *dst = &*dst - &(&f * src);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    echelon(&mut rows).len()
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn inverse(rows: Vec<Vec<Scalar>>) -> Option<Vec<Vec<Scalar>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Scalar>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = pick_pivot(&aug, c, c)?;
        aug.swap(c, p);
        let inv = aug[c][c].inv().expect("nonzero pivot");
        for v in aug[c].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst = &*dst - &(&f * src);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `A x = b` where the columns of `A` are linearly independent.
/// Returns `None` if `b` is outside their span.
pub fn solve_independent(columns: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = columns.len();
    let m = b.len();
    let mut aug: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    // back substitution on the upper triangular k×k block
    let mut x = vec![Scalar::zero(); k];
    for r in (0..k).rev() {
        let mut acc = aug[r][k].clone();
        for j in r + 1..k {
            acc = &acc - &(&aug[r][j] * &x[j]);
        }
        x[r] = &acc / &aug[r][r];
    }
    Some(x)
}

/// Incrementally grown basis of a subspace, kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    vectors: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, b) in &self.vectors {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (dst, src) in v.iter_mut().zip(b) {
                if !src.is_zero() {
                    *dst = &*dst - &(&f * src);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns `true` iff it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        let r = r.iter().map(|x| x * &inv).collect();
        self.vectors.push((p, r));
        true
    }
}
