//! Diagonal similarity to nonnegative matrices.
//!
//! A nonzero entry `m_ij` constrains the ratio `d_i / d_j` of a diagonal
//! conjugator up to a positive factor: `d_i m_ij / d_j` must be real and
//! positive. Fixing `d = 1` at the smallest vertex of every component of the
//! undirected support graph and propagating along a breadth-first spanning
//! forest determines every other phase, so a witness exists iff the
//! propagated one passes verification.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{common_order, Matrix, Scalar};

/// The diagonal of an invertible diagonal matrix `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalWitness {
    d: Vec<Scalar>,
}

/// A `±1` diagonal with the first sign fixed to `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignDiagonal {
    signs: Vec<i8>,
}

impl DiagonalWitness {
    pub fn new(d: Vec<Scalar>) -> Result<Self> {
        if d.iter().any(Scalar::is_zero) {
            return Err(Error::Singular);
        }
        Ok(Self { d })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            d: vec![Scalar::one(); n],
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.d)
    }

    /// The sign diagonal this witness reduces to, when every entry is real.
    pub fn to_signs(&self) -> Option<SignDiagonal> {
        if !self.d.iter().all(Scalar::is_real) {
            return None;
        }
        let flip = self.d.first().is_some_and(|v| !v.is_positive_real());
        let signs = self
            .d
            .iter()
            .map(|v| if v.is_positive_real() != flip { 1 } else { -1 })
            .collect();
        Some(SignDiagonal { signs })
    }
}

impl SignDiagonal {
    /// Normalizes so that the first sign is `+1`; entries must be `±1`.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse(
                "sign diagonal entries must be +1 or -1".into(),
            ));
        }
        let flip = signs.first().copied().unwrap_or(1);
        Ok(Self {
            signs: signs.into_iter().map(|s| s * flip).collect(),
        })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn to_witness(&self) -> DiagonalWitness {
        DiagonalWitness {
            d: self
                .signs
                .iter()
                .map(|&s| Scalar::from_int(s.into()))
                .collect(),
        }
    }
}

/// `D M D^{-1}`.
pub fn conjugate(d: &DiagonalWitness, m: &Matrix) -> Result<Matrix> {
    let n = m.require_square()?;
    if d.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "diagonal of length {} against a {n}x{n} matrix",
            d.len()
        )));
    }
    let inv: Vec<Scalar> = d.d.iter().map(|v| v.inv().expect("invertible")).collect();
    let mut out = m.clone();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v.is_zero() || i == j {
                continue;
            }
            out.set(i, j, &(&d.d[i] * v) * &inv[j]);
        }
    }
    Ok(out)
}

/// Decides whether `m` is diagonally similar to a nonnegative matrix.
pub fn diag_sim_nonneg(m: &Matrix) -> Result<Option<DiagonalWitness>> {
    m.require_square()?;
    simultaneous_diag_sim(std::slice::from_ref(m))
}

/// Decides whether a single `D` makes every member of `ms` nonnegative.
pub fn simultaneous_diag_sim(ms: &[Matrix]) -> Result<Option<DiagonalWitness>> {
    let n = common_order(ms)?;
    if ms
        .iter()
        .any(|m| !m.diagonal_entries().iter().all(Scalar::is_nonnegative_real))
    {
        // diagonal entries are invariant under conjugation
        return Ok(None);
    }
    let witness = propagate(n, ms);
    for m in ms {
        if !conjugate(&witness, m)?.is_nonnegative() {
            return Ok(None);
        }
    }
    Ok(Some(witness))
}

fn propagate(n: usize, ms: &[Matrix]) -> DiagonalWitness {
    let mut neighbors = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if ms
                .iter()
                .any(|m| !m.get(i, j).is_zero() || !m.get(j, i).is_zero())
            {
                neighbors[i].push(j);
                neighbors[j].push(i);
            }
        }
    }
    for list in &mut neighbors {
        list.sort_unstable();
    }

    let mut d: Vec<Option<Scalar>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Scalar::one());
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = d[u].clone().expect("visited");
            for &v in &neighbors[u] {
                if d[v].is_some() {
                    continue;
                }
                d[v] = Some(normalize(&forced_ratio(ms, u, v, &du)));
                queue.push_back(v);
            }
        }
    }
    DiagonalWitness {
        d: d.into_iter().map(|v| v.expect("all visited")).collect(),
    }
}

/// A `d_v` (up to positive factor) making the first constraining entry of the
/// pair positive given `d_u`.
fn forced_ratio(ms: &[Matrix], u: usize, v: usize, du: &Scalar) -> Scalar {
    for m in ms {
        let uv = m.get(u, v);
        if !uv.is_zero() {
            // d_u m_uv / d_v > 0  <=  d_v = d_u m_uv
            return du * uv;
        }
        let vu = m.get(v, u);
        if !vu.is_zero() {
            // d_v m_vu / d_u > 0  <=  d_v = d_u conj(m_vu)
            return du * &vu.conj();
        }
    }
    unreachable!("pair ({u}, {v}) has no constraining entry")
}

fn normalize(v: &Scalar) -> Scalar {
    let g = v.max_part_abs();
    v.scale(&num_traits::Inv::inv(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ints;

    fn witness(v: &[i64]) -> DiagonalWitness {
        DiagonalWitness::new(ints(v)).unwrap()
    }

    fn b3() -> Matrix {
        Matrix::outer(&ints(&[1, 1, -2]), &ints(&[1, 1, -2]))
    }

    fn a3() -> Matrix {
        Matrix::from_ints(&[[1, 0, 1], [0, 1, -1], [0, 0, 0]])
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            conjugate(&witness(&[1, 1, -1]), &b3()).unwrap(),
            Matrix::from_ints(&[[1, 1, 2], [1, 1, 2], [2, 2, 4]])
        );
        assert_eq!(conjugate(&witness(&[1, 1, 1]), &a3()).unwrap(), a3());
        assert_eq!(
            conjugate(&witness(&[1, -1]), &Matrix::from_ints(&[[1, -1], [0, 0]])).unwrap(),
            Matrix::from_ints(&[[1, 1], [0, 0]])
        );
        assert!(conjugate(&witness(&[1, 1]), &a3()).is_err());
    }

    #[test]
    fn single_matrix_decisions() {
        assert_eq!(diag_sim_nonneg(&b3()).unwrap(), Some(witness(&[1, 1, -1])));
        assert_eq!(
            diag_sim_nonneg(&Matrix::ones(3)).unwrap(),
            Some(DiagonalWitness::identity(3))
        );
        assert_eq!(
            diag_sim_nonneg(&Matrix::from_ints(&[[0, 1], [-1, 0]])).unwrap(),
            None
        );
        assert_eq!(diag_sim_nonneg(&a3()).unwrap(), Some(witness(&[1, -1, 1])));
        assert_eq!(
            diag_sim_nonneg(&Matrix::zeros(3, 3)).unwrap(),
            Some(DiagonalWitness::identity(3))
        );
        // negative diagonal can never be fixed
        assert_eq!(
            diag_sim_nonneg(&Matrix::from_ints(&[[-1, 0], [0, 1]])).unwrap(),
            None
        );
    }

    #[test]
    fn collections() {
        let a = Matrix::ones(2);
        let b = Matrix::from_ints(&[[1, -1], [-1, 1]]);
        assert_eq!(simultaneous_diag_sim(&[a, b]).unwrap(), None);
        assert_eq!(
            simultaneous_diag_sim(&[Matrix::ones(3), a3()]).unwrap(),
            None
        );
        assert_eq!(simultaneous_diag_sim(&[]), Err(Error::Empty));
    }

    #[test]
    fn complex_phases() {
        // [[1, i], [-i, 1]] = D [[1,1],[1,1]] D^{-1} with D = diag(1, -i)
        let m = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::complex(0, 1)],
            vec![Scalar::complex(0, -1), Scalar::one()],
        ])
        .unwrap();
        let d = diag_sim_nonneg(&m).unwrap().expect("feasible");
        assert_eq!(d.entries()[0], Scalar::one());
        assert_eq!(conjugate(&d, &m).unwrap(), Matrix::ones(2));
        assert!(d.to_signs().is_none());

        // a 3-cycle whose phases do not multiply to a positive number
        let c = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::complex(0, 1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::complex(0, 1)],
            vec![Scalar::complex(0, 1), Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        assert_eq!(diag_sim_nonneg(&c).unwrap(), None);
    }

    #[test]
    fn sign_diagonal_gauge() {
        let s = SignDiagonal::new(vec![-1, 1, -1]).unwrap();
        assert_eq!(s.signs(), &[1, -1, 1]);
        assert!(SignDiagonal::new(vec![1, 0]).is_err());
        assert_eq!(witness(&[-2, 3]).to_signs().unwrap().signs(), &[1, -1]);
    }
}
