//! Perron root and vectors of nonnegative matrices.
//!
//! This is the only floating-point module. Primitivity, by contrast, is
//! decided exactly from the zero pattern.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::structure::{is_indecomposable, pattern_digraph, scc_condensation};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITERS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Normalized to unit max-norm, entrywise nonnegative.
    pub right_vector: Vec<f64>,
    pub left_vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn check_nonnegative(m: &Matrix) -> Result<usize> {
    let n = m.require_square()?;
    if !m.is_real() {
        return Err(Error::ComplexInput);
    }
    if !m.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    Ok(n)
}

fn mat_vec(a: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn max_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Power iteration on `A + shift·I`; returns the eigenpair of `A`.
fn iterate(
    a: &[Vec<f64>],
    shift: f64,
    tol: f64,
    max_iters: usize,
) -> Result<(f64, Vec<f64>, f64, usize)> {
    let n = a.len();
    let mut v = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=max_iters {
        let mut w = mat_vec(a, &v);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += shift * vi;
        }
        let mu = max_norm(&w);
        if mu == 0.0 {
            // A v = -shift·v with v > 0 forces A v = 0
            return Ok((0.0, v, 0.0, it));
        }
        v = w.into_iter().map(|x| x / mu).collect();
        let rho = mu - shift;
        let av = mat_vec(a, &v);
        residual = av
            .iter()
            .zip(&v)
            .fold(0.0f64, |m, (x, y)| m.max((x - rho * y).abs()));
        if residual <= tol {
            return Ok((rho, v, residual, it));
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iters,
        residual,
    })
}

/// Perron root with right and left Perron vectors, iterating on `A + I`.
pub fn perron(m: &Matrix, tol: f64, max_iters: usize) -> Result<SpectralResult> {
    power_iteration(m, 1.0, tol, max_iters)
}

/// Power iteration with an explicit diagonal shift (`shift = 0` iterates on
/// `A` itself, which converges for primitive inputs).
///
/// The iteration runs on each strongly connected diagonal block, where the
/// shifted matrix is primitive. Decomposable inputs then get their vector by
/// back substitution through the block triangular form, which avoids the
/// sublinear convergence of plain power iteration on defective matrices.
pub fn power_iteration(
    m: &Matrix,
    shift: f64,
    tol: f64,
    max_iters: usize,
) -> Result<SpectralResult> {
    check_nonnegative(m)?;
    let (rho, right, iterations) = block_perron(m, shift, tol, max_iters)?;
    let (_, left, left_iters) = block_perron(&m.transpose(), shift, tol, max_iters)?;
    let a = m.to_f64_rows();
    let residual = mat_vec(&a, &right)
        .iter()
        .zip(&right)
        .fold(0.0f64, |r, (x, y)| r.max((x - rho * y).abs()));
    if residual > tol {
        return Err(Error::NonConvergence {
            iterations: iterations.max(left_iters),
            residual,
        });
    }
    Ok(SpectralResult {
        rho,
        right_vector: right,
        left_vector: left,
        residual,
        iterations: iterations.max(left_iters),
    })
}

fn block_perron(
    m: &Matrix,
    shift: f64,
    tol: f64,
    max_iters: usize,
) -> Result<(f64, Vec<f64>, usize)> {
    let a = m.to_f64_rows();
    let n = a.len();
    let classes = scc_condensation(&pattern_digraph(m)?).sccs;
    if classes.len() == 1 {
        let (rho, v, _, it) = iterate(&a, shift, tol, max_iters)?;
        return Ok((rho, v, it));
    }
    let sub = |rows: &[usize], cols: &[usize]| -> Vec<Vec<f64>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| a[i][j]).collect())
            .collect()
    };
    let mut iterations = 0;
    let mut roots = Vec::with_capacity(classes.len());
    let mut vectors = Vec::with_capacity(classes.len());
    for c in &classes {
        let (rho, v, _, it) = iterate(&sub(c, c), shift, tol, max_iters)?;
        iterations = iterations.max(it);
        roots.push(rho);
        vectors.push(v);
    }
    let rho = roots.iter().cloned().fold(0.0, f64::max);
    let slack = tol * rho.max(1.0);
    // the first class reaching rho has no other such class upstream of it
    let k = roots
        .iter()
        .position(|&r| r >= rho - slack)
        .expect("nonempty");

    let mut class_of = vec![0; n];
    for (c, members) in classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let mut reaches_k = vec![false; classes.len()];
    reaches_k[k] = true;
    for c in (0..k).rev() {
        reaches_k[c] = classes[c]
            .iter()
            .any(|&i| (0..n).any(|j| a[i][j] != 0.0 && class_of[j] != c && reaches_k[class_of[j]]));
    }

    let mut v = vec![0.0; n];
    for (&i, x) in classes[k].iter().zip(&vectors[k]) {
        v[i] = *x;
    }
    for c in (0..k).rev().filter(|&c| reaches_k[c]) {
        let members = &classes[c];
        let rhs: Vec<f64> = members
            .iter()
            .map(|&i| {
                (0..n)
                    .filter(|&j| class_of[j] != c)
                    .map(|j| a[i][j] * v[j])
                    .sum()
            })
            .collect();
        let mut shifted = sub(members, members);
        for (r, row) in shifted.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = -*x;
            }
            row[r] += rho;
        }
        let x = solve(shifted, rhs).ok_or(Error::Singular)?;
        for (&i, xi) in members.iter().zip(x) {
            v[i] = xi.max(0.0);
        }
    }
    let top = max_norm(&v);
    Ok((rho, v.into_iter().map(|x| x / top).collect(), iterations))
}

/// Gaussian elimination with partial pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[p][col] == 0.0 {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Strongly connected pattern with cycle-length gcd one.
pub fn is_primitive(m: &Matrix) -> Result<bool> {
    check_nonnegative(m)?;
    if !is_indecomposable(m)? {
        return Ok(false);
    }
    Ok(period(m)? == 1)
}

/// Index of imprimitivity of a strongly connected pattern: the gcd of
/// `level(u) + 1 - level(v)` over all edges of a BFS level structure.
/// Zero when the pattern has no cycle at all.
pub fn period(m: &Matrix) -> Result<usize> {
    let g = pattern_digraph(m)?;
    let n = g.n();
    let mut level = vec![usize::MAX; n];
    level[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for v in g.successors(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut d: i64 = 0;
    for (u, v) in g.edges() {
        if level[u] == usize::MAX || level[v] == usize::MAX {
            continue;
        }
        let diff = level[u] as i64 + 1 - level[v] as i64;
        d = d.gcd(&diff);
    }
    Ok(d as usize)
}
