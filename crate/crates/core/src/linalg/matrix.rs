use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::elim;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Entrywise flags of a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryClassification {
    pub is_real: bool,
    pub is_nonnegative: bool,
    pub has_nonneg_diagonal: bool,
    pub is_monomial: bool,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(
                "matrices need at least one row and one column".into(),
            ));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer matrices; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Scalar::one(); n])
    }

    pub fn ones(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: vec![Scalar::one(); n * n],
        }
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    /// `x y^T`.
    pub fn outer(x: &[Scalar], y: &[Scalar]) -> Self {
        let data = x
            .iter()
            .flat_map(|a| y.iter().map(move |b| a * b))
            .collect();
        Self {
            rows: x.len(),
            cols: y.len(),
            data,
        }
    }

    /// Permutation matrix `P` with `P e_j = e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = Scalar::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data
            .chunks(self.cols)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    pub fn diagonal_entries(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn scale_by(&self, s: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Exact product `self · other`.
    pub fn product(&self, other: &Matrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = Scalar::zero();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self ⊕ 0_k`: pads with `k` zero rows and columns.
    pub fn pad_zero(&self, k: usize) -> Self {
        let mut m = Self::zeros(self.rows + k, self.cols + k);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Exact rank over the Gaussian rationals.
    pub fn rank(&self) -> usize {
        elim::rank(self.to_rows())
    }

    /// Factor a rank-one matrix as `x y^T` with the first nonzero entry of
    /// `x` equal to one.
    pub fn rank_one_factor(&self) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        let r = self.rank();
        if r != 1 {
            return Err(Error::NotRankOne(r));
        }
        let j0 = (0..self.cols)
            .find(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
            .expect("rank one has a nonzero column");
        let col = self.column(j0);
        let i0 = col
            .iter()
            .position(|v| !v.is_zero())
            .expect("nonzero column");
        let pivot = col[i0].clone();
        let x = col.iter().map(|v| v / &pivot).collect();
        let y = self.row(i0).to_vec();
        Ok((x, y))
    }

    pub fn classify_entries(&self) -> EntryClassification {
        let is_real = self.is_real();
        let is_nonnegative = self.data.iter().all(Scalar::is_nonnegative_real);
        let has_nonneg_diagonal = self
            .diagonal_entries()
            .iter()
            .all(Scalar::is_nonnegative_real);
        EntryClassification {
            is_real,
            is_nonnegative,
            has_nonneg_diagonal,
            is_monomial: self.is_monomial(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(Scalar::is_nonnegative_real)
    }

    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_count = vec![0usize; n];
        for i in 0..n {
            let mut row_count = 0;
            for (j, c) in col_count.iter_mut().enumerate() {
                if !self.get(i, j).is_zero() {
                    row_count += 1;
                    *c += 1;
                }
            }
            if row_count != 1 {
                return false;
            }
        }
        col_count.iter().all(|&c| c == 1)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        elim::inverse(self.to_rows())
            .map(|rows| Self::from_rows(rows).expect("square inverse"))
            .ok_or(Error::Singular)
    }

    /// Largest `max(|Re|, |Im|)` over the entries.
    pub fn max_part_abs(&self) -> BigRational {
        self.data
            .iter()
            .map(Scalar::max_part_abs)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
    }

    /// Real parts as `f64`; callers check `is_real` first.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.cols)
            .map(|r| r.iter().map(Scalar::re_f64).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Converts an integer slice to scalars.
pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// Checks that every matrix in `ms` is square of the same order.
pub fn common_order(ms: &[Matrix]) -> Result<usize> {
    let first = ms.first().ok_or(Error::Empty)?;
    let n = first.require_square()?;
    for m in ms {
        m.require_square()?;
        if m.rows() != n {
            return Err(Error::MixedSizes);
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Matrix {
        Matrix::from_ints(&[[1, 0, 1], [0, 1, -1], [0, 0, 0]])
    }

    fn b() -> Matrix {
        let b = ints(&[1, 1, -2]);
        Matrix::outer(&b, &b)
    }

    #[test]
    fn products_of_first_example() {
        let a = Matrix::ones(3);
        assert!(a.product(&b()).unwrap().is_zero());
        assert!(b().product(&a).unwrap().is_zero());
        assert_eq!(a.product(&a).unwrap(), a.scale_by(&Scalar::from_int(3)));
        assert_eq!(Matrix::identity(3).product(&a3()).unwrap(), a3());
        assert!(matches!(
            Matrix::ones(2).product(&Matrix::ones(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(b().rank(), 1);
        assert_eq!(a3().rank(), 2);
        assert_eq!(Matrix::identity(4).rank(), 4);
        let c = Matrix::from_rows(vec![
            vec![Scalar::complex(1, 1), Scalar::complex(2, 0)],
            vec![Scalar::complex(0, 2), Scalar::complex(2, 2)],
        ])
        .unwrap();
        // second row = (1+i) · first row
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn rank_one_factorization() {
        let (x, y) = b().rank_one_factor().unwrap();
        assert_eq!(x, ints(&[1, 1, -2]));
        assert_eq!(y, ints(&[1, 1, -2]));

        let e1 = ints(&[1, 0, 0]);
        let (x, y) = Matrix::outer(&e1, &e1).rank_one_factor().unwrap();
        assert_eq!((x, y), (e1.clone(), e1));

        assert_eq!(
            Matrix::identity(3).rank_one_factor(),
            Err(Error::NotRankOne(3))
        );

        // leading entry of the column is normalized, sign moves into y
        let m = Matrix::outer(&ints(&[0, -2, 4]), &ints(&[3, 0, 1]));
        let (x, y) = m.rank_one_factor().unwrap();
        assert_eq!(x, ints(&[0, 1, -2]));
        assert_eq!(Matrix::outer(&x, &y), m);
    }

    #[test]
    fn classification() {
        let c = Matrix::ones(3).classify_entries();
        assert!(c.is_real && c.is_nonnegative && c.has_nonneg_diagonal && !c.is_monomial);

        let c = a3().classify_entries();
        assert!(c.is_real && !c.is_nonnegative && c.has_nonneg_diagonal && !c.is_monomial);

        let c = Matrix::from_ints(&[[0, 2], [3, 0]]).classify_entries();
        assert!(c.is_nonnegative && c.is_monomial);

        let c = Matrix::from_rows(vec![vec![Scalar::complex(0, 1)]])
            .unwrap()
            .classify_entries();
        assert!(!c.is_real && !c.is_nonnegative && !c.has_nonneg_diagonal && c.is_monomial);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(&[[2, 1, 0], [0, 1, 3], [1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.product(&inv).unwrap(), Matrix::identity(3));
        assert_eq!(Matrix::ones(2).inverse(), Err(Error::Singular));
    }

    #[test]
    fn padded_a3_is_idempotent() {
        let a4 = a3().pad_zero(1);
        assert_eq!(a4.product(&a4).unwrap(), a4);
    }

    #[test]
    fn construction_errors() {
        assert!(Matrix::new(2, 2, ints(&[1, 2, 3])).is_err());
        assert!(Matrix::from_rows(vec![ints(&[1, 2]), ints(&[1])]).is_err());
        assert_eq!(common_order(&[]), Err(Error::Empty));
        assert_eq!(
            common_order(&[Matrix::ones(2), Matrix::ones(3)]),
            Err(Error::MixedSizes)
        );
    }
}
