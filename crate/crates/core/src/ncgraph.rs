//! The non-commuting graph on noncentral elements and its compression into
//! centralizer-twin classes.
//!
//! Two noncentral elements with the same centralizer commute with each other
//! and have identical neighbourhoods, so the graph collapses to a quotient on
//! classes whose edges are all-or-nothing between any two classes.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::{BitMatrix, BitSet};
use crate::error::{GroupError, Result};
use crate::group::{ElementSet, FiniteGroup};

#[derive(Debug, Clone)]
pub struct NCGraph {
    vertices: Vec<usize>,
    vertex_of: Vec<Option<usize>>,
    adjacency: BitMatrix,
    center: ElementSet,
}

impl NCGraph {
    pub fn build(group: &FiniteGroup) -> Self {
        let center = group.center();
        let vertices: Vec<usize> = group.elements().filter(|&x| !center.contains(x)).collect();
        let mut vertex_of = vec![None; group.order()];
        for (v, &x) in vertices.iter().enumerate() {
            vertex_of[x] = Some(v);
        }
        let mut adjacency = BitMatrix::new(vertices.len());
        for (u, &x) in vertices.iter().enumerate() {
            for (v, &y) in vertices.iter().enumerate().skip(u + 1) {
                if !group.commutes(x, y) {
                    adjacency.set_symmetric(u, v);
                }
            }
        }
        NCGraph {
            vertices,
            vertex_of,
            adjacency,
            center,
        }
    }

    /// Noncentral elements in increasing index order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.edge_count()
    }

    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.vertex_of.get(element).copied().flatten()
    }

    pub fn center(&self) -> &ElementSet {
        &self.center
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    /// True iff both elements are noncentral and do not commute.
    pub fn adjacent_elements(&self, x: usize, y: usize) -> bool {
        match (self.vertex_of(x), self.vertex_of(y)) {
            (Some(u), Some(v)) => self.adjacency.get(u, v),
            _ => false,
        }
    }
}

pub fn build_nc_graph(group: &FiniteGroup) -> NCGraph {
    NCGraph::build(group)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub capacity: usize,
}

#[derive(Debug, Clone)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
    class_of: Vec<Option<usize>>,
    class_adjacency: BitMatrix,
    complete_multipartite: bool,
    noncentral: usize,
    group_order: usize,
}

impl TwinPartition {
    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn capacities(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.capacity).collect()
    }

    pub fn class_of(&self, element: usize) -> Option<usize> {
        self.class_of.get(element).copied().flatten()
    }

    pub fn class_adjacency(&self) -> &BitMatrix {
        &self.class_adjacency
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.class_adjacency.get(a, b)
    }

    pub fn complete_multipartite(&self) -> bool {
        self.complete_multipartite
    }

    /// `|G| − |Z(G)|`.
    pub fn noncentral_count(&self) -> usize {
        self.noncentral
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

/// Groups noncentral elements by exact centralizer equality and verifies
/// every partition invariant before returning.
pub fn twin_partition(graph: &NCGraph, group: &FiniteGroup) -> Result<TwinPartition> {
    let k = group.order();
    let mut by_centralizer: HashMap<BitSet, usize> = HashMap::new();
    let mut classes: Vec<TwinClass> = Vec::new();
    let mut class_of = vec![None; k];
    for &x in graph.vertices() {
        let mut c = BitSet::new(k);
        for y in group.elements() {
            if group.commutes(x, y) {
                c.insert(y);
            }
        }
        let next = classes.len();
        let id = *by_centralizer.entry(c).or_insert(next);
        if id == next {
            classes.push(TwinClass {
                representative: x,
                members: Vec::new(),
                capacity: 0,
            });
        }
        classes[id].members.push(x);
        classes[id].capacity += 1;
        class_of[x] = Some(id);
    }

    let violation = |msg: String| GroupError::Invariant(format!("twin partition: {msg}"));
    let total: usize = classes.iter().map(|c| c.capacity).sum();
    if total != graph.vertex_count() || total != k - graph.center().len() {
        return Err(violation(format!("capacities sum to {total}")));
    }
    for class in &classes {
        for (i, &x) in class.members.iter().enumerate() {
            for &y in &class.members[i + 1..] {
                if !group.commutes(x, y) {
                    return Err(violation(format!(
                        "class members {x} and {y} do not commute"
                    )));
                }
            }
        }
    }

    let n = classes.len();
    let mut class_adjacency = BitMatrix::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (classes[a].representative, classes[b].representative);
            let adjacent = !group.commutes(x, y);
            for &u in &classes[a].members {
                for &v in &classes[b].members {
                    if group.commutes(u, v) == adjacent {
                        return Err(violation(format!(
                            "classes {a} and {b} mix commuting and non-commuting pairs at ({u}, {v})"
                        )));
                    }
                }
            }
            if adjacent {
                class_adjacency.set_symmetric(a, b);
            }
        }
    }
    let complete_multipartite = class_adjacency.edge_count() == n * n.saturating_sub(1) / 2;
    Ok(TwinPartition {
        classes,
        class_of,
        class_adjacency,
        complete_multipartite,
        noncentral: total,
        group_order: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn g(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    /// Independent count: noncentral vertices and non-commuting unordered pairs.
    fn brute_counts(group: &FiniteGroup) -> (usize, usize) {
        let noncentral: Vec<usize> = group
            .elements()
            .filter(|&x| group.elements().any(|y| !group.commutes(x, y)))
            .collect();
        let mut edges = 0;
        for (i, &x) in noncentral.iter().enumerate() {
            for &y in &noncentral[i + 1..] {
                if group.commutes(x, y) {
                    continue;
                }
                edges += 1;
            }
        }
        (noncentral.len(), edges)
    }

    #[test]
    fn graph_sizes() {
        for (spec, vertices, edges) in [("S:3", 5, 9), ("D:8", 6, 12), ("C:12", 0, 0)] {
            let group = g(spec);
            let graph = build_nc_graph(&group);
            assert_eq!(brute_counts(&group), (vertices, edges), "{spec} oracle");
            assert_eq!(graph.vertex_count(), vertices, "{spec}");
            assert_eq!(graph.edge_count(), edges, "{spec}");
        }
    }

    fn sorted_caps(spec: &str) -> (Vec<usize>, bool) {
        let group = g(spec);
        let tp = twin_partition(&build_nc_graph(&group), &group).unwrap();
        let mut caps = tp.capacities();
        caps.sort_unstable_by(|a, b| b.cmp(a));
        (caps, tp.complete_multipartite())
    }

    #[test]
    fn twin_classes_of_named_groups() {
        assert_eq!(sorted_caps("S:3"), (vec![2, 1, 1, 1], true));
        let mut a5 = vec![4; 6];
        a5.extend([3; 5]);
        a5.extend([2; 10]);
        assert_eq!(sorted_caps("A:5"), (a5, true));
        let mut s4 = vec![2; 10];
        s4.extend([1; 3]);
        assert_eq!(sorted_caps("S:4"), (s4, false));
        assert_eq!(sorted_caps("D:8"), (vec![2, 2, 2], true));
    }

    #[test]
    fn class_order_follows_least_member() {
        let group = g("S:4");
        let tp = twin_partition(&build_nc_graph(&group), &group).unwrap();
        let reps: Vec<usize> = tp.classes().iter().map(|c| c.representative).collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        for c in tp.classes() {
            assert_eq!(c.representative, c.members[0]);
        }
    }

    #[test]
    fn abelian_groups_have_no_classes() {
        let group = g("C:6*C:2");
        let tp = twin_partition(&build_nc_graph(&group), &group).unwrap();
        assert!(tp.is_empty());
        assert!(tp.complete_multipartite());
    }
}
