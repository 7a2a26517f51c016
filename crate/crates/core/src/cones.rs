//! Finitely generated polyhedral cones over the rationals.
//!
//! A cone is stored by generators (its V-representation). The dual cone is
//! computed with the double description method; membership, extremality and
//! invariance all reduce to sign checks against dual generators.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

type Q = BigRational;

/// A nonzero direction, scaled so its largest absolute coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray {
    v: Vec<Q>,
}

impl Ray {
    /// `None` for the zero vector.
    fn from_rational(v: Vec<Q>) -> Option<Self> {
        let m = v.iter().map(Signed::abs).max()?;
        if m.is_zero() {
            return None;
        }
        Some(Self {
            v: v.into_iter().map(|x| x / &m).collect(),
        })
    }

    pub fn new(v: &[Scalar]) -> Result<Option<Self>> {
        Ok(Self::from_rational(to_rational(v)?))
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::from_rational(v.iter().map(|&x| Q::from_integer(x.into())).collect())
            .expect("nonzero ray")
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.v.iter().cloned().map(Scalar::real).collect()
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub(crate) fn rational(&self) -> &[Q] {
        &self.v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<Ray>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropernessReport {
    pub is_pointed: bool,
    pub is_solid: bool,
    pub is_proper: bool,
}

fn to_rational(v: &[Scalar]) -> Result<Vec<Q>> {
    v.iter()
        .map(|s| {
            if s.is_real() {
                Ok(s.re().clone())
            } else {
                Err(Error::ComplexInput)
            }
        })
        .collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn axpy(y: &[Q], f: &Q, x: &[Q]) -> Vec<Q> {
    // y - f·x
    y.iter().zip(x).map(|(a, b)| a - f * b).collect()
}

fn rank_q(rows: &[&Vec<Q>]) -> usize {
    crate::linalg::elim::rank(
        rows.iter()
            .map(|r| r.iter().cloned().map(Scalar::real).collect())
            .collect(),
    )
}

impl Cone {
    /// Builds a cone from generators; zero generators are dropped and
    /// duplicates (up to positive scaling) merged.
    pub fn new(dim: usize, generators: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut rays = Vec::new();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "ray of length {} in dimension {dim}",
                    g.len()
                )));
            }
            if let Some(r) = Ray::new(g)? {
                rays.push(r);
            }
        }
        Ok(Self::from_rays(dim, rays))
    }

    pub fn from_rays(dim: usize, rays: Vec<Ray>) -> Self {
        let mut seen = BTreeSet::new();
        let rays = rays
            .into_iter()
            .filter(|r| seen.insert(r.clone()))
            .collect();
        Self { dim, rays }
    }

    pub fn from_ints<R: AsRef<[i64]>>(dim: usize, rays: &[R]) -> Self {
        Self::from_rays(
            dim,
            rays.iter().map(|r| Ray::from_ints(r.as_ref())).collect(),
        )
    }

    /// The nonnegative orthant.
    pub fn orthant(n: usize) -> Self {
        let rays = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                Ray::from_ints(&v)
            })
            .collect();
        Self { dim: n, rays }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// Canonical rays as a set, for order-independent comparison.
    pub fn ray_set(&self) -> BTreeSet<Ray> {
        self.rays.iter().cloned().collect()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "vector of length {n} against a cone in dimension {}",
                self.dim
            )))
        }
    }

    /// Sign test `z·v >= 0` against a fixed set of dual generators.
    fn contains_with(dual_gens: &[Ray], v: &[Q]) -> bool {
        dual_gens
            .iter()
            .all(|z| !dot(z.rational(), v).is_negative())
    }
}

/// Output of the double description method: a lineality basis plus rays of
/// the pointed part.
struct DoubleDescription {
    lineality: Vec<Vec<Q>>,
    rays: Vec<Vec<Q>>,
}

/// Generators of `{z : a·z >= 0 for every a in constraints}` in dimension `n`.
fn double_description(n: usize, constraints: &[Vec<Q>]) -> DoubleDescription {
    let mut order: Vec<&Vec<Q>> = constraints.iter().collect();
    order.sort();

    let mut lineality: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut e = vec![Q::zero(); n];
            e[i] = Q::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Vec<Q>> = Vec::new();
    let mut processed: Vec<&Vec<Q>> = Vec::new();

    for a in order {
        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut pivot = lineality.remove(p);
            let mut alpha = dot(a, &pivot);
            if alpha.is_negative() {
                pivot = pivot.iter().map(|x| -x).collect();
                alpha = -alpha;
            }
            let project = |v: &Vec<Q>| {
                let f = dot(a, v) / &alpha;
                if f.is_zero() {
                    v.clone()
                } else {
                    axpy(v, &f, &pivot)
                }
            };
            lineality = lineality.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(pivot);
        } else {
            let target = n - lineality.len();
            let (mut keep, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
            for r in rays {
                let s = dot(a, &r);
                if s.is_positive() {
                    pos.push((r.clone(), s));
                    keep.push(r);
                } else if s.is_zero() {
                    keep.push(r);
                } else {
                    neg.push((r, s));
                }
            }
            for (p, sp) in &pos {
                for (q, sq) in &neg {
                    let active: Vec<&Vec<Q>> = processed
                        .iter()
                        .copied()
                        .filter(|b| dot(b, p).is_zero() && dot(b, q).is_zero())
                        .collect();
                    if target < 2 || rank_q(&active) != target - 2 {
                        continue;
                    }
                    // sp > 0 > sq; the combination lies on a·z = 0
                    let combo: Vec<Q> = p.iter().zip(q).map(|(x, y)| sp * y - sq * x).collect();
                    keep.push(combo);
                }
            }
            rays = keep;
        }
        processed.push(a);
        rays = rays
            .into_iter()
            .filter_map(Ray::from_rational)
            .map(|r| r.v)
            .collect();
    }
    DoubleDescription { lineality, rays }
}

/// `{z : z·r >= 0 for every ray r}`.
pub fn dual(k: &Cone) -> Cone {
    let constraints: Vec<Vec<Q>> = k.rays.iter().map(|r| r.v.clone()).collect();
    let dd = double_description(k.dim, &constraints);
    let mut rays: Vec<Ray> = dd.rays.into_iter().filter_map(Ray::from_rational).collect();
    for l in dd.lineality {
        let neg: Vec<Q> = l.iter().map(|x| -x).collect();
        rays.extend(Ray::from_rational(l));
        rays.extend(Ray::from_rational(neg));
    }
    rays.sort();
    Cone::from_rays(k.dim, rays)
}

pub fn contains(k: &Cone, v: &[Scalar]) -> Result<bool> {
    k.check_dim(v.len())?;
    let v = to_rational(v)?;
    Ok(Cone::contains_with(&dual(k).rays, &v))
}

pub fn properness(k: &Cone) -> PropernessReport {
    let is_solid = k.dim > 0 && rank_q(&k.rays.iter().map(|r| &r.v).collect::<Vec<_>>()) == k.dim;
    let dual_gens = dual(k).rays;
    // the lineality space is spanned by the generators whose negatives lie in K
    let is_pointed = k.rays.iter().all(|r| {
        let neg: Vec<Q> = r.v.iter().map(|x| -x).collect();
        !Cone::contains_with(&dual_gens, &neg)
    });
    PropernessReport {
        is_pointed,
        is_solid,
        is_proper: is_pointed && is_solid,
    }
}

/// The inclusion-minimal generating subset of a pointed cone.
pub fn extreme_rays(k: &Cone) -> Result<Vec<Ray>> {
    if !properness(k).is_pointed {
        return Err(Error::NotPointed);
    }
    let mut current = k.rays.clone();
    let mut i = 0;
    while i < current.len() {
        let others = Cone::from_rays(
            k.dim,
            current
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect(),
        );
        let others_dual = dual(&others).rays;
        if Cone::contains_with(&others_dual, &current[i].v) {
            current.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(current)
}

/// Whether `m` maps every generator of `k` back into `k`.
pub fn is_invariant(m: &Matrix, k: &Cone) -> Result<bool> {
    let n = m.require_square()?;
    if !m.is_real() {
        return Err(Error::ComplexInput);
    }
    k.check_dim(n)?;
    let dual_gens = dual(k).rays;
    for r in &k.rays {
        let image = to_rational(&m.mul_vec(&r.coords())?)?;
        if !Cone::contains_with(&dual_gens, &image) {
            return Ok(false);
        }
    }
    Ok(true)
}
