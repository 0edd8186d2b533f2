use std::collections::BTreeSet;

use super::{AssocCheck, ElementSet, FiniteGroup};
use crate::error::{GroupError, Result};

/// Quotient group `G/N` with the projection `x ↦ xN`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[x]` is the coset index of `x`; cosets are numbered by
    /// increasing least member.
    pub projection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    /// `G = G⁽⁰⁾ ⊇ G⁽¹⁾ ⊇ …` up to and including the first repeated term.
    pub terms: Vec<ElementSet>,
    pub solvable: bool,
    pub derived_length: Option<usize>,
}

impl DerivedSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(ElementSet::len).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperCentralSeries {
    /// `1 = Z₀ ⊆ Z₁ ⊆ …` until stabilization.
    pub terms: Vec<ElementSet>,
    pub nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowCount {
    pub p: usize,
    pub count: usize,
    pub subgroup_order: usize,
    /// Distinct Sylow p-subgroups pairwise meet in the identity (vacuously
    /// true when there is only one).
    pub trivial_intersection: bool,
    pub representative: ElementSet,
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl FiniteGroup {
    pub fn center(&self) -> ElementSet {
        let members = self
            .elements()
            .filter(|&x| self.elements().all(|y| self.commutes(x, y)))
            .collect();
        ElementSet::from_sorted(self.order(), members)
    }

    pub fn centralizer(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        let members = self.elements().filter(|&y| self.commutes(x, y)).collect();
        Ok(ElementSet::from_sorted(self.order(), members))
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.check_element(x)?;
        let mut t = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            t += 1;
        }
        Ok(t)
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &ElementSet) -> ElementSet {
        self.closure(gens.members(), usize::MAX)
            .expect("unbounded closure always completes")
    }

    /// Worklist closure from the identity; `None` once the size exceeds `limit`.
    fn closure(&self, gens: &[usize], limit: usize) -> Option<ElementSet> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut found = vec![0];
        let mut head = 0;
        while head < found.len() {
            let x = found[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    found.push(y);
                    if found.len() > limit {
                        return None;
                    }
                }
            }
        }
        Some(ElementSet::from_mask(&mask))
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        h.contains(0)
            && h.iter()
                .all(|x| h.iter().all(|y| h.contains(self.mul(x, y))))
    }

    /// First conjugation witness `(g, n)` with `g n g⁻¹ ∉ h`, if any.
    fn normality_witness(&self, h: &ElementSet) -> Option<(usize, usize, usize)> {
        for g in self.elements() {
            for n in h.iter() {
                let c = self.conjugate(g, n);
                if !h.contains(c) {
                    return Some((g, n, c));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &ElementSet) -> bool {
        self.is_subgroup(h) && self.normality_witness(h).is_none()
    }

    pub fn quotient(&self, n: &ElementSet) -> Result<Quotient> {
        if n.parent_order() != self.order() {
            return Err(GroupError::NotSubgroup {
                reason: "set belongs to a different group".into(),
            });
        }
        if !self.is_subgroup(n) {
            return Err(GroupError::NotSubgroup {
                reason: "not closed under products or missing identity".into(),
            });
        }
        if let Some((g, x, conj)) = self.normality_witness(n) {
            return Err(GroupError::NotNormal { g, n: x, conj });
        }
        let k = self.order();
        let mut projection = vec![usize::MAX; k];
        let mut reps = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            // x is the least member of its coset since cosets are scanned in order.
            for y in n.iter() {
                projection[self.mul(x, y)] = reps.len();
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                table.push(projection[self.mul(a, b)]);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("{}N", self.label(r)))
            .collect();
        let group = FiniteGroup::from_table(
            q,
            table,
            labels,
            format!("{}/N{}", self.origin(), n.len()),
            AssocCheck::Sampled { per_element: 0 },
        )?;
        for x in self.elements() {
            for y in self.elements() {
                if projection[self.mul(x, y)] != group.mul(projection[x], projection[y]) {
                    return Err(GroupError::Invariant(format!(
                        "projection fails to be a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(Quotient { group, projection })
    }

    /// Subgroup generated by commutators of elements of `h`.
    pub fn commutator_subgroup(&self, h: &ElementSet) -> ElementSet {
        let mut mask = vec![false; self.order()];
        for x in h.iter() {
            for y in h.iter() {
                mask[self.commutator(x, y)] = true;
            }
        }
        let gens: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
        self.closure(&gens, usize::MAX).unwrap()
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![ElementSet::whole(self.order())];
        loop {
            let last = terms.last().unwrap();
            let next = self.commutator_subgroup(last);
            assert!(
                self.is_normal(&next),
                "derived term of order {} is not normal",
                next.len()
            );
            if next == *last {
                break;
            }
            terms.push(next);
        }
        let solvable = terms.last().unwrap().len() == 1;
        let derived_length = solvable.then(|| terms.len() - 1);
        DerivedSeries {
            terms,
            solvable,
            derived_length,
        }
    }

    pub fn upper_central_series(&self) -> UpperCentralSeries {
        let mut terms = vec![ElementSet::from_sorted(self.order(), vec![0])];
        loop {
            let last = terms.last().unwrap();
            let members: Vec<usize> = self
                .elements()
                .filter(|&x| {
                    self.elements()
                        .all(|g| last.contains(self.commutator(x, g)))
                })
                .collect();
            let next = ElementSet::from_sorted(self.order(), members);
            if next == *last {
                break;
            }
            terms.push(next);
        }
        let nilpotent = terms.last().unwrap().len() == self.order();
        if nilpotent {
            assert!(
                self.derived_series().solvable,
                "nilpotent group reported non-solvable"
            );
        }
        UpperCentralSeries { terms, nilpotent }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series().nilpotent
    }

    pub fn prime_divisors(&self) -> Vec<usize> {
        prime_divisors(self.order())
    }

    /// Finds one Sylow p-subgroup and counts its conjugates.
    pub fn sylow_count(&self, p: usize) -> Result<SylowCount> {
        let k = self.order();
        if p < 2 || !k.is_multiple_of(p) || prime_divisors(p) != [p] {
            return Err(GroupError::NotPrimeDivisor { p, order: k });
        }
        let mut target = 1;
        while k.is_multiple_of(target * p) {
            target *= p;
        }
        let orders: Vec<usize> = self
            .elements()
            .map(|x| self.element_order(x).unwrap())
            .collect();
        let p_elements: Vec<usize> = self
            .elements()
            .filter(|&x| x != 0 && is_power_of(orders[x], p))
            .collect();
        let trivial = ElementSet::from_sorted(k, vec![0]);
        let sylow = self
            .grow_p_subgroup(trivial, Vec::new(), &p_elements, p, target)
            .ok_or_else(|| GroupError::Invariant(format!("no Sylow {p}-subgroup found")))?;

        let mut conjugates: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in self.elements() {
            let mut c: Vec<usize> = sylow.iter().map(|x| self.conjugate(g, x)).collect();
            c.sort_unstable();
            conjugates.insert(c);
        }
        let conjugates: Vec<ElementSet> = conjugates
            .into_iter()
            .map(|c| ElementSet::from_sorted(k, c))
            .collect();
        let count = conjugates.len();
        if count % p != 1 || !(k / target).is_multiple_of(count) {
            return Err(GroupError::Invariant(format!(
                "Sylow {p}-subgroup count {count} violates Sylow's theorems"
            )));
        }
        let trivial_intersection = conjugates.iter().enumerate().all(|(i, a)| {
            conjugates[i + 1..]
                .iter()
                .all(|b| a.intersection(b).len() == 1)
        });
        Ok(SylowCount {
            p,
            count,
            subgroup_order: target,
            trivial_intersection,
            representative: sylow,
        })
    }

    /// Greedy growth of a p-subgroup, backtracking if a branch stalls below `target`.
    fn grow_p_subgroup(
        &self,
        current: ElementSet,
        gens: Vec<usize>,
        p_elements: &[usize],
        p: usize,
        target: usize,
    ) -> Option<ElementSet> {
        if current.len() == target {
            return Some(current);
        }
        for &x in p_elements {
            if current.contains(x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            if let Some(h) = self.closure(&next_gens, target) {
                if is_power_of(h.len(), p) {
                    if let Some(s) = self.grow_p_subgroup(h, next_gens, p_elements, p, target) {
                        return Some(s);
                    }
                }
            }
        }
        None
    }

    pub fn normal_closure(&self, x: usize) -> ElementSet {
        let mut conj: Vec<usize> = self.elements().map(|g| self.conjugate(g, x)).collect();
        conj.sort_unstable();
        conj.dedup();
        self.closure(&conj, usize::MAX).unwrap()
    }

    /// Proper nontrivial normal subgroups reachable as normal closures of
    /// single elements, products of two such closures, or terms of the
    /// derived and upper central series. Sorted by order then members.
    pub fn sample_normal_subgroups(&self) -> Vec<ElementSet> {
        let k = self.order();
        let mut found: BTreeSet<(usize, ElementSet)> = BTreeSet::new();
        let mut seen_class = vec![false; k];
        let mut closures = Vec::new();
        for x in self.elements() {
            if seen_class[x] {
                continue;
            }
            for g in self.elements() {
                seen_class[self.conjugate(g, x)] = true;
            }
            let n = self.normal_closure(x);
            if !closures.contains(&n) {
                closures.push(n);
            }
        }
        for (i, a) in closures.iter().enumerate() {
            found.insert((a.len(), a.clone()));
            for b in &closures[i + 1..] {
                let gens: Vec<usize> = a.iter().chain(b.iter()).collect();
                let ab = self.closure(&gens, usize::MAX).unwrap();
                found.insert((ab.len(), ab));
            }
        }
        for t in self.derived_series().terms {
            found.insert((t.len(), t));
        }
        for t in self.upper_central_series().terms {
            found.insert((t.len(), t));
        }
        found
            .into_iter()
            .map(|(_, s)| s)
            .filter(|s| s.len() > 1 && s.len() < k)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn g(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn centers() {
        let d8 = g("D:8");
        let z = d8.center();
        assert_eq!(z.len(), 2);
        assert!(z.contains(d8.element_by_label("a^2").unwrap()));
        assert_eq!(g("S:4").center().len(), 1);
        assert_eq!(g("Q:8").center().len(), 2);
    }

    #[test]
    fn centralizers() {
        let s3 = g("S:3");
        let r = s3.element_by_label("(1,2,3)").unwrap();
        let c = s3.centralizer(r).unwrap();
        let labels: Vec<&str> = c.iter().map(|x| s3.label(x)).collect();
        assert_eq!(labels, vec!["()", "(1,2,3)", "(1,3,2)"]);

        let d8 = g("D:8");
        let b = d8.element_by_label("b").unwrap();
        let mut labels: Vec<&str> = d8
            .centralizer(b)
            .unwrap()
            .iter()
            .map(|x| d8.label(x))
            .collect();
        labels.sort();
        assert_eq!(labels, vec!["a^2", "a^2b", "b", "e"]);

        let a5 = g("A:5");
        let inv = a5.element_by_label("(1,2)(3,4)").unwrap();
        assert_eq!(a5.centralizer(inv).unwrap().len(), 4);
        assert!(a5.centralizer(60).is_err());
    }

    #[test]
    fn element_orders() {
        let c12 = g("C:12");
        assert_eq!(
            c12.element_order(c12.element_by_label("g").unwrap())
                .unwrap(),
            12
        );
        let s4 = g("S:4");
        assert_eq!(
            s4.element_order(s4.element_by_label("(1,2,3,4)").unwrap())
                .unwrap(),
            4
        );
        let d8 = g("D:8");
        assert_eq!(
            d8.element_order(d8.element_by_label("b").unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn generated_subgroups() {
        let s4 = g("S:4");
        let t = s4.element_by_label("(1,2)").unwrap();
        let c = s4.element_by_label("(1,2,3,4)").unwrap();
        assert_eq!(
            s4.subgroup_generated(&ElementSet::new(24, [t]).unwrap())
                .len(),
            2
        );
        assert_eq!(
            s4.subgroup_generated(&ElementSet::new(24, [t, c]).unwrap())
                .len(),
            24
        );
        let a5 = g("A:5");
        let x = a5.element_by_label("(1,2,3)").unwrap();
        let y = a5.element_by_label("(1,2,3,4,5)").unwrap();
        assert_eq!(
            a5.subgroup_generated(&ElementSet::new(60, [x, y]).unwrap())
                .len(),
            60
        );
    }

    #[test]
    fn quotients() {
        let s4 = g("S:4");
        let v: Vec<usize> = ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
            .iter()
            .map(|l| s4.element_by_label(l).unwrap())
            .collect();
        let v = ElementSet::new(24, v).unwrap();
        let q = s4.quotient(&v).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());

        let d8 = g("D:8");
        let q = d8.quotient(&d8.center()).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_abelian());

        let t = s4.element_by_label("(1,2)").unwrap();
        let h = s4.subgroup_generated(&ElementSet::new(24, [t]).unwrap());
        assert!(matches!(s4.quotient(&h), Err(GroupError::NotNormal { .. })));
        let not_sub = ElementSet::new(24, [0, t, s4.element_by_label("(1,3)").unwrap()]).unwrap();
        assert!(matches!(
            s4.quotient(&not_sub),
            Err(GroupError::NotSubgroup { .. })
        ));
    }

    #[test]
    fn derived_series_examples() {
        let s4 = g("S:4").derived_series();
        assert_eq!(s4.orders(), vec![24, 12, 4, 1]);
        assert_eq!(s4.derived_length, Some(3));
        let a5 = g("A:5").derived_series();
        assert_eq!(a5.orders(), vec![60]);
        assert!(!a5.solvable);
        assert_eq!(a5.derived_length, None);
        let c6 = g("C:6").derived_series();
        assert_eq!(c6.orders(), vec![6, 1]);
        assert_eq!(c6.derived_length, Some(1));
    }

    #[test]
    fn nilpotency() {
        assert!(g("D:8").is_nilpotent());
        assert!(!g("S:3").is_nilpotent());
        assert!(g("C:12").is_nilpotent());
        assert!(g("Q:16").is_nilpotent());
        assert!(!g("A:4").is_nilpotent());
    }

    #[test]
    fn sylow_counts() {
        let a5 = g("A:5");
        for (p, count) in [(2, 5), (3, 10), (5, 6)] {
            let s = a5.sylow_count(p).unwrap();
            assert_eq!(s.count, count, "p = {p}");
            assert!(s.trivial_intersection);
        }
        let s3 = g("S:3").sylow_count(2).unwrap();
        assert_eq!((s3.count, s3.trivial_intersection), (3, true));
        let d8 = g("D:8").sylow_count(2).unwrap();
        assert_eq!(
            (d8.count, d8.trivial_intersection, d8.subgroup_order),
            (1, true, 8)
        );
        assert!(g("S:3").sylow_count(5).is_err());
        assert!(g("S:4").sylow_count(4).is_err());
        // S4 has 3 Sylow 2-subgroups (dihedral of order 8) sharing the Klein group.
        let s4 = g("S:4").sylow_count(2).unwrap();
        assert_eq!((s4.count, s4.trivial_intersection), (3, false));
    }

    #[test]
    fn normal_subgroup_sample_of_s4() {
        let s4 = g("S:4");
        let orders: Vec<usize> = s4
            .sample_normal_subgroups()
            .iter()
            .map(|n| n.len())
            .collect();
        assert_eq!(orders, vec![4, 12]);
    }
}
