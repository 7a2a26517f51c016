//! Finitely generated matrix semigroups, up to positive scaling.
//!
//! Elements are kept in projective canonical form: the zero matrix, or the
//! matrix divided by its largest `max(|Re|, |Im|)` entry. Two matrices that
//! differ by a positive real factor share a canonical form.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{common_order, Matrix, Scalar, SpanBasis};

/// Representative of `M` modulo positive real scaling.
pub fn canonical_form(m: &Matrix) -> Matrix {
    let g = m.max_part_abs();
    if num_traits::Zero::is_zero(&g) {
        return m.clone();
    }
    m.scale(&num_traits::Inv::inv(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveElement {
    pub canonical: Matrix,
    /// Generator indices whose left-to-right product yields this element.
    pub word: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_elements: usize,
    pub max_word_length: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_elements: 10_000,
            max_word_length: 12,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemigroupClosure {
    pub elements: Vec<ProjectiveElement>,
    pub truncated: bool,
    pub caps: Caps,
    #[serde(skip)]
    generators: Vec<Matrix>,
    #[serde(skip)]
    index: HashMap<Matrix, usize>,
}

impl SemigroupClosure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.elements.iter().map(|e| e.canonical.clone()).collect()
    }

    /// Whether the projective class of `m` was reached.
    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(&canonical_form(m))
    }

    /// Product of the generators named by `word`.
    pub fn evaluate(&self, word: &[usize]) -> Result<Matrix> {
        let n = self.order();
        word.iter().try_fold(Matrix::identity(n), |acc, &g| {
            let gen = self
                .generators
                .get(g)
                .ok_or_else(|| Error::InvalidArgument(format!("no generator {g}")))?;
            acc.product(gen)
        })
    }

    /// First pair `(u, v)` whose product falls outside the set, if any.
    pub fn find_unclosed_product(&self) -> Option<(usize, usize)> {
        for (i, u) in self.elements.iter().enumerate() {
            for (j, v) in self.elements.iter().enumerate() {
                let p = u.canonical.product(&v.canonical).expect("same order");
                if !self.contains(&p) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Breadth-first closure under right multiplication by generators.
pub fn generate_closure(gens: &[Matrix], caps: Caps) -> Result<SemigroupClosure> {
    common_order(gens)?;
    if caps.max_elements == 0 || caps.max_word_length == 0 {
        return Err(Error::InvalidArgument("caps must be positive".into()));
    }
    let mut c = SemigroupClosure {
        elements: Vec::new(),
        truncated: false,
        caps,
        generators: gens.to_vec(),
        index: HashMap::new(),
    };
    let push = |c: &mut SemigroupClosure, m: Matrix, word: Vec<usize>| {
        if c.index.contains_key(&m) {
            return;
        }
        if word.len() > caps.max_word_length || c.elements.len() >= caps.max_elements {
            c.truncated = true;
            return;
        }
        c.index.insert(m.clone(), c.elements.len());
        c.elements.push(ProjectiveElement { canonical: m, word });
    };

    for (i, g) in gens.iter().enumerate() {
        push(&mut c, canonical_form(g), vec![i]);
    }
    let mut head = 0;
    while head < c.elements.len() {
        let current = c.elements[head].clone();
        head += 1;
        for (gi, g) in gens.iter().enumerate() {
            let p = canonical_form(&current.canonical.product(g)?);
            let mut word = current.word.clone();
            word.push(gi);
            push(&mut c, p, word);
        }
    }
    Ok(c)
}

/// Elements of rank at most one.
pub fn rank_one_ideal(c: &SemigroupClosure) -> Vec<ProjectiveElement> {
    c.elements
        .iter()
        .filter(|e| e.canonical.rank() <= 1)
        .cloned()
        .collect()
}

/// Dimension of the unital algebra generated by `ms`.
pub fn algebra_dimension(ms: &[Matrix]) -> Result<usize> {
    let n = common_order(ms)?;
    let full = n * n;
    let mut basis = SpanBasis::new();
    let mut queue: Vec<Matrix> = Vec::new();
    for m in std::iter::once(Matrix::identity(n)).chain(ms.iter().cloned()) {
        if basis.insert(m.entries()) {
            queue.push(m);
        }
    }
    let mut head = 0;
    while head < queue.len() && basis.dim() < full {
        let current = queue[head].clone();
        head += 1;
        for g in ms {
            for p in [current.product(g)?, g.product(&current)?] {
                if basis.insert(p.entries()) {
                    queue.push(p);
                }
            }
        }
    }
    Ok(basis.dim())
}

/// Irreducibility over `C^n` via Burnside: the generated algebra is all of
/// `M_n(C)`.
pub fn is_irreducible(ms: &[Matrix]) -> Result<bool> {
    let n = common_order(ms)?;
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    Ok(algebra_dimension(ms)? == n * n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub all_invertible: bool,
    /// Every generator's inverse, up to positive scaling, was reached inside
    /// the capped closure. This certifies that the generated semigroup is a
    /// group even when the closure itself is truncated.
    pub closed_under_inverse_within_cap: bool,
    pub closure_truncated: bool,
}

pub fn group_info(ms: &[Matrix], caps: Caps) -> Result<GroupInfo> {
    let n = common_order(ms)?;
    let all_invertible = ms.iter().all(|m| m.rank() == n);
    if !all_invertible {
        return Ok(GroupInfo {
            all_invertible,
            closed_under_inverse_within_cap: false,
            closure_truncated: false,
        });
    }
    let closure = generate_closure(ms, caps)?;
    group_info_from_closure(ms, &closure)
}

pub(crate) fn group_info_from_closure(
    ms: &[Matrix],
    closure: &SemigroupClosure,
) -> Result<GroupInfo> {
    let n = common_order(ms)?;
    let all_invertible = ms.iter().all(|m| m.rank() == n);
    let mut closed = all_invertible;
    if all_invertible {
        for m in ms {
            if !closure.contains(&m.inverse()?) {
                closed = false;
                break;
            }
        }
    }
    Ok(GroupInfo {
        all_invertible,
        closed_under_inverse_within_cap: closed,
        closure_truncated: closure.truncated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XYFactorization {
    pub x: Vec<Vec<Scalar>>,
    pub y: Vec<Vec<Scalar>>,
    /// `(element index, x index, y index)` for every nonzero element.
    pub pairing: Vec<(usize, usize, usize)>,
    pub x_spans: bool,
    pub y_spans: bool,
}

fn positive_canonical(v: &[Scalar]) -> Vec<Scalar> {
    let g = v
        .iter()
        .map(Scalar::max_part_abs)
        .max()
        .expect("nonempty vector");
    let inv = num_traits::Inv::inv(g);
    v.iter().map(|s| s.scale(&inv)).collect()
}

fn intern(list: &mut Vec<Vec<Scalar>>, v: Vec<Scalar>) -> usize {
    if let Some(i) = list.iter().position(|u| *u == v) {
        return i;
    }
    list.push(v);
    list.len() - 1
}

/// Writes every nonzero rank-one element as `x y^T`.
pub fn xy_decomposition(ideal: &[ProjectiveElement]) -> Result<XYFactorization> {
    let mut x = Vec::new();
    let mut y = Vec::new();
    let mut pairing = Vec::new();
    let mut n = 0;
    for (k, e) in ideal.iter().enumerate() {
        n = e.canonical.rows();
        let r = e.canonical.rank();
        if r > 1 {
            return Err(Error::RankTooHigh(r));
        }
        if r == 0 {
            continue;
        }
        let (xv, yv) = e.canonical.rank_one_factor()?;
        let xi = intern(&mut x, xv);
        let yi = intern(&mut y, positive_canonical(&yv));
        pairing.push((k, xi, yi));
    }
    let spans = |vs: &Vec<Vec<Scalar>>| n > 0 && crate::linalg::elim::rank(vs.clone()) == n;
    Ok(XYFactorization {
        x_spans: spans(&x),
        y_spans: spans(&y),
        x,
        y,
        pairing,
    })
}
