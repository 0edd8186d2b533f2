//! Formula-built group families and permutation closure.
//!
//! Canonical element orderings:
//! * cyclic `C:n`: `g^i` at index `i`;
//! * dihedral `D:2t` and dicyclic `Q:4t`: normal form `a^i b^j`, `j ∈ {0,1}`,
//!   at index `j*|a| + i` (lexicographic on `(j, i)`);
//! * symmetric / alternating: lexicographic on the image tuple;
//! * permutation closure: breadth-first layers from the identity, each layer
//!   sorted lexicographically.
//!
//! Permutations act on the right: `i^(xy) = (i^x)^y`.

use std::collections::{BTreeSet, HashMap};

use super::{AssocCheck, FiniteGroup};
use crate::error::{GroupError, Result};

/// A permutation of `0..d` stored as its image tuple.
pub type Permutation = Vec<u8>;

fn compose(x: &[u8], y: &[u8]) -> Permutation {
    x.iter().map(|&i| y[i as usize]).collect()
}

/// Cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`; identity is `()`.
pub fn permutation_label(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut i = p[start] as usize;
        while i != start {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i] as usize;
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(GroupError::OrderCap { order, cap });
    }
    Ok(())
}

pub(crate) fn cyclic(n: usize, cap: usize, assoc: AssocCheck) -> Result<FiniteGroup> {
    check_cap(n, cap)?;
    let table = (0..n * n).map(|p| (p / n + p % n) % n).collect();
    let labels = (0..n)
        .map(|i| {
            if i == 0 {
                "e".into()
            } else {
                power_label("g", i)
            }
        })
        .collect();
    FiniteGroup::from_table(n, table, labels, format!("C:{n}"), assoc)
}

fn normal_form_labels(rot: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(2 * rot);
    for j in 0..2 {
        for i in 0..rot {
            let l = format!("{}{}", power_label("a", i), if j == 1 { "b" } else { "" });
            labels.push(if l.is_empty() { "e".into() } else { l });
        }
    }
    labels
}

/// `⟨a, b | a^t = b² = 1, b⁻¹ab = a⁻¹⟩` of order `2t`.
pub(crate) fn dihedral(order: usize, cap: usize, assoc: AssocCheck) -> Result<FiniteGroup> {
    check_cap(order, cap)?;
    let t = order / 2;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (j, i) = (x / t, x % t);
        for y in 0..order {
            let (l, k) = (y / t, y % t);
            let rot = if j == 0 { (i + k) % t } else { (i + t - k) % t };
            table.push((j ^ l) * t + rot);
        }
    }
    FiniteGroup::from_table(
        order,
        table,
        normal_form_labels(t),
        format!("D:{order}"),
        assoc,
    )
}

/// `⟨a, b | a^{2t} = 1, b² = a^t, b⁻¹ab = a⁻¹⟩` of order `4t`.
pub(crate) fn dicyclic(order: usize, cap: usize, assoc: AssocCheck) -> Result<FiniteGroup> {
    check_cap(order, cap)?;
    let r = order / 2;
    let t = order / 4;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (j, i) = (x / r, x % r);
        for y in 0..order {
            let (l, k) = (y / r, y % r);
            let mut rot = if j == 0 { (i + k) % r } else { (i + r - k) % r };
            let jj = if j == 1 && l == 1 {
                rot = (rot + t) % r;
                0
            } else {
                j ^ l
            };
            table.push(jj * r + rot);
        }
    }
    FiniteGroup::from_table(
        order,
        table,
        normal_form_labels(r),
        format!("Q:{order}"),
        assoc,
    )
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

fn table_from_perms(elements: &[Permutation]) -> Result<Vec<usize>> {
    let index: HashMap<&[u8], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let k = elements.len();
    let mut table = Vec::with_capacity(k * k);
    for x in elements {
        for y in elements {
            let xy = compose(x, y);
            let idx = *index.get(xy.as_slice()).ok_or_else(|| {
                GroupError::Invariant("permutation set not closed under products".into())
            })?;
            table.push(idx);
        }
    }
    Ok(table)
}

fn perm_group(
    elements: Vec<Permutation>,
    origin: String,
    assoc: AssocCheck,
) -> Result<FiniteGroup> {
    let table = table_from_perms(&elements)?;
    let labels = elements.iter().map(|p| permutation_label(p)).collect();
    FiniteGroup::from_table(elements.len(), table, labels, origin, assoc)
}

pub(crate) fn symmetric(
    n: usize,
    even_only: bool,
    cap: usize,
    assoc: AssocCheck,
) -> Result<FiniteGroup> {
    let order = if even_only && n >= 2 {
        factorial(n) / 2
    } else {
        factorial(n)
    };
    check_cap(order, cap)?;
    let mut p: Permutation = (0..n as u8).collect();
    let mut elements = Vec::with_capacity(order);
    loop {
        if !even_only || is_even(&p) {
            elements.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    let origin = format!("{}:{n}", if even_only { "A" } else { "S" });
    perm_group(elements, origin, assoc)
}

/// Closure of `generators` (0-based image tuples of one degree) under products.
pub(crate) fn permutation_closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
    origin: String,
) -> Result<FiniteGroup> {
    let identity: Permutation = (0..degree as u8).collect();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut layer: BTreeSet<Permutation> = BTreeSet::new();
        for &e in &frontier {
            for g in generators {
                let p = compose(&elements[e], g);
                if !index.contains_key(&p) {
                    layer.insert(p);
                }
            }
        }
        frontier.clear();
        for p in layer {
            if elements.len() >= cap {
                return Err(GroupError::OrderCap {
                    order: elements.len() + 1,
                    cap,
                });
            }
            index.insert(p.clone(), elements.len());
            frontier.push(elements.len());
            elements.push(p);
        }
    }
    perm_group(elements, origin, AssocCheck::Sampled { per_element: 10 })
}
