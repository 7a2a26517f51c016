//! Exhaustive oracles, independent of the propagation and SCC code paths.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::diagsim::SignDiagonal;
use crate::error::{Error, Result};
use crate::linalg::{common_order, Matrix};

/// Tries every sign vector with `s_0 = +1`, `+1` ordered before `-1`, and
/// returns the first one making every member nonnegative.
pub fn sign_search_oracle(ms: &[Matrix]) -> Result<Option<SignDiagonal>> {
    let n = common_order(ms)?;
    if ms.iter().any(|m| !m.is_real()) {
        return Err(Error::ComplexInput);
    }
    if n > 24 {
        return Err(Error::InvalidArgument(format!(
            "sign search over n = {n} is impractical"
        )));
    }
    let free = n - 1;
    for mask in 0u64..(1u64 << free) {
        let signs: Vec<i8> = (0..n)
            .map(|i| {
                if i == 0 || mask >> (free - i) & 1 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let ok = ms.iter().all(|m| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let v = m.get(i, j);
                    let positive = !v.re().is_negative();
                    v.is_zero() || positive == (signs[i] * signs[j] == 1)
                })
            })
        });
        if ok {
            return SignDiagonal::new(signs).map(Some);
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetReport {
    pub decomposable: bool,
    pub witness_subset: Option<Vec<usize>>,
}

/// Searches for a nontrivial index set `S` with `m[i][j] = 0` whenever
/// `i ∉ S` and `j ∈ S` (so `span{e_j : j ∈ S}` is invariant). Smallest
/// cardinality first, then lexicographic.
pub fn subset_invariance_oracle(m: &Matrix) -> Result<SubsetReport> {
    let n = m.require_square()?;
    if n > 24 {
        return Err(Error::InvalidArgument(format!(
            "subset search over n = {n} is impractical"
        )));
    }
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..(1u32 << n) - 1 {
        let inside = |k: usize| mask >> k & 1 == 1;
        let invariant = (0..n)
            .filter(|&i| !inside(i))
            .all(|i| (0..n).filter(|&j| inside(j)).all(|j| m.get(i, j).is_zero()));
        if !invariant {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&k| inside(k)).collect();
        let better = match &best {
            None => true,
            Some(b) => (s.len(), &s) < (b.len(), b),
        };
        if better {
            best = Some(s);
        }
    }
    Ok(SubsetReport {
        decomposable: best.is_some(),
        witness_subset: best,
    })
}

/// `true` iff some power `A^k`, `k <= (n-1)^2 + 1`, of the 0/1 pattern is
/// strictly positive.
pub fn pattern_power_positive(m: &Matrix) -> Result<bool> {
    let n = m.require_square()?;
    let pat: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| !m.get(i, j).is_zero()).collect())
        .collect();
    let mut power = pat.clone();
    let bound = (n - 1) * (n - 1) + 1;
    for _ in 0..bound {
        if power.iter().all(|r| r.iter().all(|&b| b)) {
            return Ok(true);
        }
        power = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).any(|k| power[i][k] && pat[k][j]))
                    .collect()
            })
            .collect();
    }
    Ok(power.iter().all(|r| r.iter().all(|&b| b)))
}
