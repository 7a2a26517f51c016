//! Zero-pattern digraphs and decomposability.
//!
//! A square matrix is decomposable exactly when its pattern digraph is not
//! strongly connected. The strongly connected components, listed in a
//! topological order of the condensation, give the permutation to block
//! upper-triangular form.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{common_order, Matrix};

/// Directed graph on `0..n` with an edge `(i, j)` iff `a_ij != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternDigraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl PatternDigraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].iter().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecompositionKind {
    Indecomposable,
    OneDecomposable,
    MultiDecomposable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub kind: DecompositionKind,
    pub scc_count: usize,
    /// Components in topological order of the condensation, each sorted.
    pub sccs: Vec<Vec<usize>>,
    /// `permutation[k]` is the original index placed at position `k`.
    pub permutation: Vec<usize>,
}

impl DecompositionReport {
    pub fn is_decomposable(&self) -> bool {
        self.scc_count >= 2
    }

    /// `P M P^T` for the witness permutation.
    pub fn permute(&self, m: &Matrix) -> Matrix {
        let p = &self.permutation;
        let n = p.len();
        let mut out = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                out.set(a, b, m.get(p[a], p[b]).clone());
            }
        }
        out
    }
}

pub fn pattern_digraph(m: &Matrix) -> Result<PatternDigraph> {
    let n = m.require_square()?;
    let mut g = PatternDigraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).is_zero() {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Pattern of the collection: an edge wherever any member is nonzero.
pub fn union_pattern(ms: &[Matrix]) -> Result<PatternDigraph> {
    let n = common_order(ms)?;
    let mut g = PatternDigraph::new(n);
    for m in ms {
        for (i, j) in pattern_digraph(m)?.edges() {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// Iterative Tarjan; returns the component id of every vertex.
fn tarjan(g: &PatternDigraph) -> (usize, Vec<usize>) {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut ncomp = 0;
    let succ: Vec<Vec<usize>> = (0..n).map(|v| g.successors(v).collect()).collect();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, pos)) = call.last() {
            if pos < succ[v].len() {
                let w = succ[v][pos];
                call.last_mut().expect("nonempty").1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if w == v {
                        break;
                    }
                }
                ncomp += 1;
            }
        }
    }
    (ncomp, comp)
}

/// Strongly connected components in topological order; among components
/// that are simultaneously available the one with the smallest vertex comes
/// first.
pub fn scc_condensation(g: &PatternDigraph) -> DecompositionReport {
    let n = g.n();
    let (ncomp, comp) = tarjan(g);
    let mut members = vec![Vec::new(); ncomp];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut indegree = vec![0usize; ncomp];
    let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for (i, j) in g.edges() {
        let (a, b) = (comp[i], comp[j]);
        if a != b && out[a].insert(b) {
            indegree[b] += 1;
        }
    }
    // Kahn's algorithm keyed on the smallest member vertex.
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..ncomp)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((members[c][0], c)))
        .collect();
    let mut sccs = Vec::with_capacity(ncomp);
    while let Some(Reverse((_, c))) = ready.pop() {
        sccs.push(members[c].clone());
        for &d in &out[c] {
            indegree[d] -= 1;
            if indegree[d] == 0 {
                ready.push(Reverse((members[d][0], d)));
            }
        }
    }
    debug_assert_eq!(sccs.len(), ncomp);

    let scc_count = ncomp.max(1);
    let kind = match ncomp {
        0 | 1 => DecompositionKind::Indecomposable,
        2 => DecompositionKind::OneDecomposable,
        _ => DecompositionKind::MultiDecomposable,
    };
    let permutation = sccs.iter().flatten().copied().collect();
    DecompositionReport {
        kind,
        scc_count,
        sccs,
        permutation,
    }
}

pub fn classify_decomposability(m: &Matrix) -> Result<DecompositionReport> {
    Ok(scc_condensation(&pattern_digraph(m)?))
}

/// Strong connectivity of the pattern (the `n = 1` case is connected).
pub fn is_indecomposable(m: &Matrix) -> Result<bool> {
    classify_decomposability(m).map(|r| r.scc_count == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{ints, Scalar};

    fn a3() -> Matrix {
        Matrix::from_ints(&[[1, 0, 1], [0, 1, -1], [0, 0, 0]])
    }

    #[test]
    fn pattern_edges() {
        assert_eq!(
            pattern_digraph(&Matrix::ones(2)).unwrap().edges(),
            vec![(0, 0), (0, 1), (1, 0), (1, 1)]
        );
        assert_eq!(
            pattern_digraph(&a3()).unwrap().edges(),
            vec![(0, 0), (0, 2), (1, 1), (1, 2)]
        );
        assert!(pattern_digraph(&Matrix::zeros(3, 3))
            .unwrap()
            .edges()
            .is_empty());
        assert!(matches!(
            pattern_digraph(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn condensation_examples() {
        let r = classify_decomposability(&Matrix::ones(4)).unwrap();
        assert_eq!(
            (r.kind, r.scc_count),
            (DecompositionKind::Indecomposable, 1)
        );

        let r = classify_decomposability(&Matrix::from_ints(&[[1, 1], [0, 1]])).unwrap();
        assert_eq!(r.kind, DecompositionKind::OneDecomposable);
        assert_eq!(r.permutation, vec![0, 1]);

        let r = classify_decomposability(&a3()).unwrap();
        assert_eq!(r.kind, DecompositionKind::MultiDecomposable);
        assert_eq!(r.sccs, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn witness_orders_sinks_last() {
        // 0 <- 1 : the edge (1,0) forces vertex 1 before vertex 0
        let m = Matrix::from_ints(&[[1, 0], [1, 1]]);
        let r = classify_decomposability(&m).unwrap();
        assert_eq!(r.permutation, vec![1, 0]);
        let p = r.permute(&m);
        assert!(p.get(1, 0).is_zero());
    }

    #[test]
    fn first_example_members_are_indecomposable() {
        let a = Matrix::ones(3);
        let b = Matrix::outer(&ints(&[1, 1, -2]), &ints(&[1, 1, -2]));
        for m in [a, b] {
            assert_eq!(
                classify_decomposability(&m).unwrap().kind,
                DecompositionKind::Indecomposable
            );
        }
    }

    #[test]
    fn one_by_one_is_indecomposable() {
        for v in [0, 5] {
            let m = Matrix::from_rows(vec![vec![Scalar::from_int(v)]]).unwrap();
            assert_eq!(classify_decomposability(&m).unwrap().scc_count, 1);
        }
    }

    #[test]
    fn union_patterns() {
        let a = Matrix::ones(3);
        let b = Matrix::outer(&ints(&[1, 1, -2]), &ints(&[1, 1, -2]));
        assert_eq!(union_pattern(&[a, b]).unwrap().edges().len(), 9);
        assert!(union_pattern(&[Matrix::zeros(2, 2)])
            .unwrap()
            .edges()
            .is_empty());
        let e12 = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let e21 = Matrix::from_ints(&[[0, 0], [1, 0]]);
        assert_eq!(
            union_pattern(&[e12, e21]).unwrap().edges(),
            vec![(0, 1), (1, 0)]
        );
        assert_eq!(union_pattern(&[]), Err(Error::Empty));
        assert_eq!(
            union_pattern(&[Matrix::ones(2), Matrix::ones(3)]),
            Err(Error::MixedSizes)
        );
    }
}
