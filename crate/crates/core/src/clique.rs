//! Clique number `w(G)` of the non-commuting graph.
//!
//! A set of pairwise non-commuting elements holds at most one element per
//! twin class, so the search runs on the class quotient graph.

use serde::Serialize;

use crate::bitset::{BitMatrix, BitSet};
use crate::group::{ElementSet, FiniteGroup};
use crate::ncgraph::TwinPartition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub w: usize,
    pub witness: Vec<usize>,
    /// The search ran to completion, so `w` is optimal.
    pub exhausted: bool,
}

impl CliqueResult {
    pub fn witness_set(&self, parent_order: usize) -> ElementSet {
        ElementSet::new(parent_order, self.witness.iter().copied())
            .expect("witness elements lie in the group")
    }
}

/// Exact maximum clique of `adj`; returns vertex indices in increasing order.
///
/// Vertices are ordered by descending degree (ties by index) and each node
/// is bounded by a greedy colouring of its candidate set.
pub fn max_clique(adj: &BitMatrix) -> Vec<usize> {
    let n = adj.size();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    let degree: Vec<usize> = (0..n).map(|v| adj.row(v).count()).collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut local = BitMatrix::new(n);
    for u in 0..n {
        for v in adj.row(u).iter() {
            if u < v {
                local.set_symmetric(pos[u], pos[v]);
            }
        }
    }
    let mut search = CliqueSearch {
        adj: &local,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(BitSet::full(n));
    let mut out: Vec<usize> = search.best.iter().map(|&p| order[p]).collect();
    out.sort_unstable();
    out
}

struct CliqueSearch<'a> {
    adj: &'a BitMatrix,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn color_sort(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut uncolored = candidates.clone();
        let mut sorted = Vec::with_capacity(candidates.count());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.iter().next() {
                uncolored.remove(v);
                q.remove(v);
                q.difference_with(self.adj.row(v));
                sorted.push((v, color));
            }
        }
        sorted
    }

    fn expand(&mut self, mut candidates: BitSet) {
        let colored = self.color_sort(&candidates);
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(self.adj.row(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Clique number with an element-level witness (least member of each class).
///
/// Abelian groups of order > 1 get `w = 1` with the witness `{1}`; the
/// trivial group gets `w = 0`.
pub fn clique_number(tp: &TwinPartition) -> CliqueResult {
    if tp.is_empty() {
        let witness = if tp.group_order() > 1 {
            vec![1]
        } else {
            vec![]
        };
        return CliqueResult {
            w: witness.len(),
            witness,
            exhausted: true,
        };
    }
    let classes = max_clique(tp.class_adjacency());
    let mut witness: Vec<usize> = classes
        .iter()
        .map(|&c| tp.classes()[c].representative)
        .collect();
    witness.sort_unstable();
    CliqueResult {
        w: witness.len(),
        witness,
        exhausted: true,
    }
}

/// First pair `(x, y)` in `elements` that commutes, if any.
pub fn commuting_pair(group: &FiniteGroup, elements: &[usize]) -> Option<(usize, usize)> {
    for (i, &x) in elements.iter().enumerate() {
        for &y in &elements[i + 1..] {
            if group.commutes(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Largest pairwise non-commuting subset of an explicit element list.
pub fn clique_number_of_subset(group: &FiniteGroup, elements: &[usize]) -> usize {
    let n = elements.len();
    let mut adj = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !group.commutes(elements[i], elements[j]) {
                adj.set_symmetric(i, j);
            }
        }
    }
    max_clique(&adj).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::ncgraph::{build_nc_graph, twin_partition};

    fn w(spec: &str) -> CliqueResult {
        let group = build_group(&spec.parse().unwrap()).unwrap();
        let tp = twin_partition(&build_nc_graph(&group), &group).unwrap();
        let res = clique_number(&tp);
        assert_eq!(commuting_pair(&group, &res.witness), None, "{spec} witness");
        res
    }

    #[test]
    fn named_clique_numbers() {
        assert_eq!(w("S:3").w, 4);
        assert_eq!(w("D:8").w, 3);
        assert_eq!(w("Q:8").w, 3);
        assert_eq!(w("A:5").w, 21);
    }

    #[test]
    fn abelian_conventions() {
        let r = w("C:12");
        assert_eq!((r.w, r.witness.clone()), (1, vec![1]));
        assert_eq!(w("C:1").w, 0);
    }

    #[test]
    fn max_clique_on_small_graphs() {
        // 5-cycle plus a chord: max clique is the triangle 0-1-2.
        let mut adj = BitMatrix::new(5);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)] {
            adj.set_symmetric(a, b);
        }
        assert_eq!(max_clique(&adj), vec![0, 1, 2]);
        assert_eq!(max_clique(&BitMatrix::new(3)).len(), 1);
    }
}
