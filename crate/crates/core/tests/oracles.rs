//! Independent recomputations in test code: clique numbers, obstructions by
//! exhaustive enumeration, and packing, checked against the library.

use tmn::analysis::Analysis;
use tmn::obstruction::{is_tmn, packing_oracle, spectrum, SearchBudget, Status};
use tmn::theorems::corpus;
use tmn::FiniteGroup;

fn noncentral(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .filter(|&x| g.elements().any(|y| !g.commutes(x, y)))
        .collect()
}

/// Largest set of pairwise non-commuting non-identity elements, by plain
/// backtracking. A lone element counts, so abelian groups give 1.
fn naive_clique(g: &FiniteGroup) -> usize {
    fn grow(g: &FiniteGroup, cand: &[usize], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for (i, &x) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&y| !g.commutes(x, y))
                .collect();
            grow(g, &next, size + 1, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = g.elements().filter(|&x| x != g.identity()).collect();
    grow(g, &all, 0, &mut best);
    best
}

/// Does some choice of m disjoint n-sets have no commuting pair across sets?
/// Parts are filled one at a time; part k's first element exceeds part k-1's.
fn naive_obstruction(g: &FiniteGroup, m: usize, n: usize) -> bool {
    let v = noncentral(g);
    fn go(
        g: &FiniteGroup,
        v: &[usize],
        m: usize,
        n: usize,
        parts: &mut Vec<Vec<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if parts.len() == m && parts.last().is_none_or(|p| p.len() == n) {
            return true;
        }
        let open = parts.last().is_some_and(|p| p.len() < n);
        if !open {
            let floor = parts.last().map_or(0, |p| p[0] + 1);
            for s in floor..v.len() {
                if used[s] || !compatible(g, v, parts, parts.len(), s) {
                    continue;
                }
                used[s] = true;
                parts.push(vec![s]);
                if go(g, v, m, n, parts, used) {
                    return true;
                }
                parts.pop();
                used[s] = false;
            }
            return false;
        }
        let k = parts.len() - 1;
        let last = *parts[k].last().unwrap();
        for s in last + 1..v.len() {
            if used[s] || !compatible(g, v, parts, k, s) {
                continue;
            }
            used[s] = true;
            parts[k].push(s);
            if go(g, v, m, n, parts, used) {
                return true;
            }
            parts[k].pop();
            used[s] = false;
        }
        false
    }
    fn compatible(
        g: &FiniteGroup,
        v: &[usize],
        parts: &[Vec<usize>],
        own: usize,
        s: usize,
    ) -> bool {
        parts
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != own)
            .all(|(_, p)| p.iter().all(|&t| !g.commutes(v[s], v[t])))
    }
    m * n <= v.len() && go(g, &v, m, n, &mut Vec::new(), &mut vec![false; v.len()])
}

#[test]
fn clique_numbers_match_naive_search() {
    for entry in corpus(false) {
        let g = entry.build().unwrap();
        if g.order() > 24 {
            continue;
        }
        let a = Analysis::new(g.clone()).unwrap();
        assert_eq!(a.w(), naive_clique(&g), "{}", entry.name);
    }
}

#[test]
fn obstruction_search_matches_enumeration() {
    let budget = SearchBudget::default();
    for spec in ["S:3", "D:8", "Q:8", "D:10", "D:12", "A:4", "C:6"] {
        let a = Analysis::from_spec(spec).unwrap();
        for m in 2..=6 {
            for n in 1..=4 {
                if m * n > 12 {
                    continue;
                }
                let d = is_tmn(&a, m, n, &budget).unwrap();
                assert_ne!(d.status, Status::Unknown);
                let naive = naive_obstruction(a.group(), m, n);
                assert_eq!(d.status == Status::NotTmn, naive, "{spec} ({m},{n})");
            }
        }
    }
}

/// Exhaustive bin covering over capacity multisets: can the items be split
/// into m bins each summing to at least n?
fn naive_packing(caps: &[usize], m: usize, n: usize) -> bool {
    fn go(caps: &[usize], i: usize, bins: &mut [usize], n: usize) -> bool {
        if bins.iter().all(|&b| b >= n) {
            return true;
        }
        if i == caps.len() {
            return false;
        }
        let need: usize = bins.iter().map(|&b| n.saturating_sub(b)).sum();
        if caps[i..].iter().sum::<usize>() < need {
            return false;
        }
        if go(caps, i + 1, bins, n) {
            return true;
        }
        let mut seen = Vec::new();
        for k in 0..bins.len() {
            if bins[k] >= n || seen.contains(&bins[k]) {
                continue;
            }
            seen.push(bins[k]);
            bins[k] += caps[i];
            let ok = go(caps, i + 1, bins, n);
            bins[k] -= caps[i];
            if ok {
                return true;
            }
        }
        false
    }
    let mut sorted = caps.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    go(&sorted, 0, &mut vec![0; m], n)
}

#[test]
fn packing_matches_naive_bin_covering() {
    for spec in ["S:3", "D:12", "A:5"] {
        let a = Analysis::from_spec(spec).unwrap();
        let caps = a.twins().capacities();
        for m in 1..=12 {
            for n in 1..=8 {
                assert_eq!(
                    packing_oracle(&caps, m, n).feasible,
                    naive_packing(&caps, m, n),
                    "{spec} ({m},{n})"
                );
            }
        }
    }
}

#[test]
fn a5_spectrum_against_naive_packing() {
    let a = Analysis::from_spec("A:5").unwrap();
    let caps = a.twins().capacities();
    let rows = spectrum(&a, None, &SearchBudget::default()).unwrap();
    for r in rows {
        assert!(r.exact);
        let expected = (1..=60)
            .take_while(|&n| naive_packing(&caps, r.m, n))
            .last()
            .unwrap_or(0);
        assert_eq!(r.n_max, expected, "N({})", r.m);
    }
}
