//! Finite groups as explicit multiplication tables.
//!
//! Every group in this crate is an order-`k` Cayley table whose identity is
//! element `0`. Elements are plain indices; [`ElementSet`] holds subsets
//! (subgroups, centralizers, obstruction parts) as sorted index lists.

mod families;
mod ingest;
mod ops;
mod spec;

pub use families::{permutation_label, Permutation};
pub use ingest::{ingest_cayley, ingest_permutations};
pub use ops::{DerivedSeries, Quotient, SylowCount, UpperCentralSeries};
pub use spec::{build_group, build_group_with, BuildOptions, GroupSpec, DEFAULT_ORDER_CAP};

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GroupError, Result};

/// How much of the associativity law to verify when a table is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCheck {
    /// Every triple; O(k³).
    Full,
    /// `per_element * k` random triples drawn from a fixed-seed generator.
    Sampled { per_element: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    origin: String,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("origin", &self.origin)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a row-major table (`table[x*k + y] = x*y`) and builds a group.
    ///
    /// Checks, in order: entry range, Latin-square rows then columns, identity
    /// at index 0, label distinctness and associativity per `assoc`.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
        origin: impl Into<String>,
        assoc: AssocCheck,
    ) -> Result<Self> {
        if order == 0 {
            return Err(GroupError::Dimension {
                expected: 1,
                found: 0,
                context: "group order must be positive".into(),
            });
        }
        if table.len() != order * order {
            return Err(GroupError::Dimension {
                expected: order * order,
                found: table.len(),
                context: "table entries".into(),
            });
        }
        if labels.len() != order {
            return Err(GroupError::Dimension {
                expected: order,
                found: labels.len(),
                context: "labels".into(),
            });
        }
        for (pos, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(GroupError::IndexRange {
                    row: pos / order,
                    col: pos % order,
                    value: v,
                    order,
                });
            }
        }
        let mut seen = vec![usize::MAX; order];
        for x in 0..order {
            for y in 0..order {
                let v = table[x * order + y];
                if seen[v] == x {
                    return Err(GroupError::LatinSquare {
                        axis: "row",
                        index: x,
                        value: v,
                    });
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..order {
            for x in 0..order {
                let v = table[x * order + y];
                if seen[v] == y {
                    return Err(GroupError::LatinSquare {
                        axis: "column",
                        index: y,
                        value: v,
                    });
                }
                seen[v] = y;
            }
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(GroupError::Identity { x });
            }
        }
        let mut distinct = HashSet::with_capacity(order);
        for l in &labels {
            if !distinct.insert(l.as_str()) {
                return Err(GroupError::DuplicateLabel { label: l.clone() });
            }
        }

        let mul: Vec<u32> = table.iter().map(|&v| v as u32).collect();
        let mut inv = vec![0u32; order];
        for x in 0..order {
            // Latin rows guarantee exactly one right inverse.
            let y = (0..order).find(|&y| table[x * order + y] == 0).unwrap();
            inv[x] = y as u32;
        }
        let group = FiniteGroup {
            order,
            mul,
            inv,
            labels,
            origin: origin.into(),
        };
        group.check_associativity(assoc)?;
        // With associativity, right inverses are two-sided; recheck anyway for sampled tables.
        for x in 0..order {
            if group.mul(group.inv(x), x) != 0 {
                return Err(GroupError::Invariant(format!(
                    "element {x} has a right inverse that is not a left inverse"
                )));
            }
        }
        Ok(group)
    }

    fn check_associativity(&self, assoc: AssocCheck) -> Result<()> {
        let k = self.order;
        let check = |x: usize, y: usize, z: usize| -> Result<()> {
            let left = self.mul(self.mul(x, y), z);
            let right = self.mul(x, self.mul(y, z));
            if left != right {
                return Err(GroupError::Associativity {
                    x,
                    y,
                    z,
                    left,
                    right,
                });
            }
            Ok(())
        };
        match assoc {
            AssocCheck::Full => {
                for x in 0..k {
                    for y in 0..k {
                        let xy = self.mul(x, y);
                        for z in 0..k {
                            if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                                check(x, y, z)?;
                            }
                        }
                    }
                }
            }
            AssocCheck::Sampled { per_element } => {
                let mut rng = ChaCha8Rng::seed_from_u64(0x7a6e_5f61_7373_6f63);
                for _ in 0..per_element * k {
                    let (x, y, z) = (
                        rng.gen_range(0..k),
                        rng.gen_range(0..k),
                        rng.gen_range(0..k),
                    );
                    check(x, y, z)?;
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// `x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx_inv = self.inv(self.mul(y, x));
        self.mul(yx_inv, xy)
    }

    pub fn pow(&self, x: usize, e: usize) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(GroupError::ElementRange {
                index: x,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Row `x` of the Cayley table.
    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.mul[x * self.order..(x + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    /// The subgroup `h` as a group in its own right, elements relabelled in
    /// increasing parent-index order (so the identity stays at 0).
    pub fn restrict(&self, h: &ElementSet, origin: impl Into<String>) -> Result<FiniteGroup> {
        let members = h.members();
        if members.first() != Some(&0) {
            return Err(GroupError::NotSubgroup {
                reason: "identity missing".into(),
            });
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in members {
            for &y in members {
                let xy = self.mul(x, y);
                match members.binary_search(&xy) {
                    Ok(i) => table.push(i),
                    Err(_) => {
                        return Err(GroupError::NotSubgroup {
                            reason: format!("{x}*{y} = {xy} escapes the set"),
                        })
                    }
                }
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        FiniteGroup::from_table(
            k,
            table,
            labels,
            origin,
            AssocCheck::Sampled { per_element: 0 },
        )
    }

    /// Serializes to the Cayley file format accepted by [`ingest_cayley`].
    pub fn to_cayley(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for x in 0..self.order {
            let row: Vec<String> = self.row(x).map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("label {i} {l}\n"));
        }
        out
    }

    /// Direct product with lexicographic pair ordering: `(g, h)` has index `g*|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup, assoc: AssocCheck) -> Result<FiniteGroup> {
        let (a, b) = (self.order, other.order);
        let k = a * b;
        let mut table = Vec::with_capacity(k * k);
        for x in 0..k {
            let (x1, x2) = (x / b, x % b);
            for y in 0..k {
                let (y1, y2) = (y / b, y % b);
                table.push(self.mul(x1, y1) * b + other.mul(x2, y2));
            }
        }
        let labels = (0..k)
            .map(|x| format!("({},{})", self.labels[x / b], other.labels[x % b]))
            .collect();
        FiniteGroup::from_table(
            k,
            table,
            labels,
            format!("{}*{}", self.origin, other.origin),
            assoc,
        )
    }
}

/// Sorted, duplicate-free subset of a group's elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<usize>,
    parent_order: usize,
}

impl ElementSet {
    pub fn new(parent_order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= parent_order) {
            return Err(GroupError::ElementRange {
                index: bad,
                order: parent_order,
            });
        }
        Ok(ElementSet {
            members,
            parent_order,
        })
    }

    pub(crate) fn from_sorted(parent_order: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|&x| x < parent_order));
        ElementSet {
            members,
            parent_order,
        }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        ElementSet {
            members,
            parent_order: mask.len(),
        }
    }

    pub fn whole(parent_order: usize) -> Self {
        ElementSet {
            members: (0..parent_order).collect(),
            parent_order,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent_order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        ElementSet::from_sorted(self.parent_order, members)
    }
}
