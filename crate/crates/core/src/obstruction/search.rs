//! Class-level obstruction search.
//!
//! Members of one twin class commute, so a class feeds at most one part, and
//! whether two elements in different classes commute is decided by the class
//! pair. An obstruction therefore exists iff there are `m` pairwise disjoint
//! class sets ("supports"), each of total capacity `>= n`, with every class of
//! one support adjacent to every class of every other support. Classes inside
//! one support are unconstrained.
//!
//! Classes are searched in descending capacity (ties by class index). Parts
//! are built one at a time; a part's classes are added in increasing search
//! position and the part closes as soon as its capacity reaches `n`. Parts
//! are ordered by their least position. At every branching point only the
//! first of a set of interchangeable candidates (equal capacity and identical
//! adjacency, i.e. swapping them is an automorphism) is expanded; the first
//! solution in canonical order always survives this cut.

use std::collections::HashMap;
use std::time::Instant;

use super::{check_params, ObstructionCert, SearchBudget, SearchOutcome, SearchResult};
use crate::analysis::Analysis;
use crate::bitset::BitSet;
use crate::error::Result;
use crate::ncgraph::TwinPartition;

/// Searches for an `(m,n)`-obstruction; the first certificate in canonical
/// order is returned when one exists.
pub fn find_obstruction(
    analysis: &Analysis,
    m: usize,
    n: usize,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    check_params(m, n)?;
    let tp = analysis.twins();
    if m.saturating_mul(n) > tp.noncentral_count() {
        return Ok(SearchResult {
            outcome: SearchOutcome::None,
            nodes: 0,
        });
    }
    let mut search = ClassSearch::new(tp, m, n, budget);
    let k = search.caps.len();
    let flow = search.start_part(&BitSet::full(k), &mut BitSet::new(k), None);
    let outcome = match flow {
        Flow::Found => SearchOutcome::Found(search.expand_certificate(tp)),
        Flow::Exhausted => SearchOutcome::None,
        Flow::Aborted => SearchOutcome::BudgetExceeded,
    };
    Ok(SearchResult {
        outcome,
        nodes: search.nodes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    Aborted,
}

struct ClassSearch {
    /// Class id at each search position.
    order: Vec<usize>,
    caps: Vec<usize>,
    adj: Vec<BitSet>,
    false_twin: Vec<usize>,
    true_twin: Vec<usize>,
    m: usize,
    n: usize,
    parts: Vec<Vec<usize>>,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

fn equivalence_ids(keys: Vec<(usize, BitSet)>) -> Vec<usize> {
    let mut ids: HashMap<(usize, BitSet), usize> = HashMap::new();
    keys.into_iter()
        .map(|key| {
            let next = ids.len();
            *ids.entry(key).or_insert(next)
        })
        .collect()
}

impl ClassSearch {
    fn new(tp: &TwinPartition, m: usize, n: usize, budget: &SearchBudget) -> Self {
        let caps_by_class = tp.capacities();
        let mut order: Vec<usize> = (0..tp.len()).collect();
        order.sort_by(|&a, &b| caps_by_class[b].cmp(&caps_by_class[a]).then(a.cmp(&b)));
        let k = order.len();
        let mut pos = vec![0; k];
        for (p, &c) in order.iter().enumerate() {
            pos[c] = p;
        }
        let mut adj = vec![BitSet::new(k); k];
        for (p, &c) in order.iter().enumerate() {
            for d in tp.class_adjacency().row(c).iter() {
                adj[p].insert(pos[d]);
            }
        }
        let caps: Vec<usize> = order.iter().map(|&c| caps_by_class[c]).collect();
        let false_twin = equivalence_ids((0..k).map(|p| (caps[p], adj[p].clone())).collect());
        let true_twin = equivalence_ids(
            (0..k)
                .map(|p| {
                    let mut closed = adj[p].clone();
                    closed.insert(p);
                    (caps[p], closed)
                })
                .collect(),
        );
        ClassSearch {
            order,
            caps,
            adj,
            false_twin,
            true_twin,
            m,
            n,
            parts: Vec::with_capacity(m),
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return false;
        }
        !(self.nodes.is_multiple_of(1024) && Instant::now() > self.deadline)
    }

    /// Upper bound on how many disjoint groups of total `>= n` the pool
    /// (plus an optional partial part of size `extra < n`) can form.
    ///
    /// Items of capacity `>= n` fill a group alone; the rest need at least
    /// `t` items per group, where `t` is the fewest largest small items
    /// reaching `n`.
    fn max_groups(&self, pool: &BitSet, extra: usize) -> usize {
        let n = self.n;
        let mut big = 0;
        let mut small_sum = extra;
        let mut small_count = usize::from(extra > 0);
        let mut pending_extra = extra > 0;
        let mut prefix = 0;
        let mut t = 0;
        let take = |c: usize, prefix: &mut usize, t: &mut usize| {
            if *prefix < n {
                *prefix += c;
                *t += 1;
            }
        };
        for p in pool.iter() {
            let c = self.caps[p];
            if c >= n {
                big += 1;
                continue;
            }
            // Pool positions come in descending capacity; splice the partial part in.
            if pending_extra && extra >= c {
                take(extra, &mut prefix, &mut t);
                pending_extra = false;
            }
            take(c, &mut prefix, &mut t);
            small_sum += c;
            small_count += 1;
        }
        if pending_extra {
            take(extra, &mut prefix, &mut t);
        }
        let small_groups = if prefix < n || t == 0 {
            0
        } else {
            (small_sum / n).min(small_count / t)
        };
        big + small_groups
    }

    fn start_part(
        &mut self,
        compat: &BitSet,
        used: &mut BitSet,
        prev_first: Option<usize>,
    ) -> Flow {
        let i = self.parts.len();
        if i == self.m {
            return Flow::Found;
        }
        let mut cands = compat.clone();
        cands.difference_with(used);
        if let Some(f) = prev_first {
            cands.clear_through(f);
        }
        if self.max_groups(&cands, 0) < self.m - i {
            return Flow::Exhausted;
        }
        let k = self.caps.len();
        let (mut tried_false, mut tried_true) = (BitSet::new(k), BitSet::new(k));
        for f in cands.iter() {
            if tried_false.contains(self.false_twin[f]) || tried_true.contains(self.true_twin[f]) {
                continue;
            }
            tried_false.insert(self.false_twin[f]);
            tried_true.insert(self.true_twin[f]);
            if !self.tick() {
                return Flow::Aborted;
            }
            self.parts.push(vec![f]);
            used.insert(f);
            let flow = self.extend_part(compat, used, f, self.caps[f]);
            if flow != Flow::Exhausted {
                return flow;
            }
            used.remove(f);
            self.parts.pop();
        }
        Flow::Exhausted
    }

    fn extend_part(
        &mut self,
        compat: &BitSet,
        used: &mut BitSet,
        first: usize,
        sum: usize,
    ) -> Flow {
        let i = self.parts.len() - 1;
        if sum >= self.n {
            let mut next = compat.clone();
            for &c in &self.parts[i] {
                next.intersect_with(&self.adj[c]);
            }
            return self.start_part(&next, used, Some(first));
        }
        let mut pool = compat.clone();
        pool.difference_with(used);
        pool.clear_through(first);
        if self.max_groups(&pool, sum) < self.m - i {
            return Flow::Exhausted;
        }
        let last = *self.parts[i].last().unwrap();
        let mut cands = pool;
        cands.clear_through(last);
        let k = self.caps.len();
        let (mut tried_false, mut tried_true) = (BitSet::new(k), BitSet::new(k));
        for c in cands.iter() {
            if tried_false.contains(self.false_twin[c]) || tried_true.contains(self.true_twin[c]) {
                continue;
            }
            tried_false.insert(self.false_twin[c]);
            tried_true.insert(self.true_twin[c]);
            if !self.tick() {
                return Flow::Aborted;
            }
            self.parts[i].push(c);
            used.insert(c);
            let flow = self.extend_part(compat, used, first, sum + self.caps[c]);
            if flow != Flow::Exhausted {
                return flow;
            }
            used.remove(c);
            self.parts[i].pop();
        }
        Flow::Exhausted
    }

    /// Each support becomes `n` elements: whole classes in search order, the
    /// last one cut to its least members.
    fn expand_certificate(&self, tp: &TwinPartition) -> ObstructionCert {
        let parts = self
            .parts
            .iter()
            .map(|support| {
                support
                    .iter()
                    .flat_map(|&p| tp.classes()[self.order[p]].members.iter().copied())
                    .take(self.n)
                    .collect()
            })
            .collect();
        ObstructionCert::canonical(parts)
    }
}
