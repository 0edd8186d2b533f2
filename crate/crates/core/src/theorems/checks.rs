use super::{CheckOutcome, CheckStatus};
use crate::analysis::Analysis;
use crate::clique::{clique_number_of_subset, commuting_pair};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::obstruction::{
    is_tmn, spectrum, tmn_from_spectrum, verify_certificate, ObstructionCert, SearchBudget,
    SpectrumRow,
};

type Verdict = (CheckStatus, String);
type Check = fn(&Facts) -> Result<Verdict>;

const CHECKS: [(&str, Check); 21] = [
    ("C1", c1),
    ("C2", c2),
    ("C3", c3),
    ("C4", c4),
    ("C5", c5),
    ("C5.strict", c5_strict),
    ("C6", c6),
    ("C7", c7),
    ("C8", c8),
    ("C9", c9),
    ("C10", c10),
    ("C11", c11),
    ("C12", c12),
    ("C13", c13),
    ("C14", c14),
    ("C15", c15),
    ("C16", c16),
    ("C17", c17),
    ("C18", c18),
    ("C19", c19),
    ("C20", c20),
];

/// Computes the spectrum and evaluates every check on one group.
pub fn run_paper_checks(analysis: &Analysis, budget: &SearchBudget) -> Result<Vec<CheckOutcome>> {
    let rows = spectrum(analysis, None, budget)?;
    run_paper_checks_with(analysis, &rows, budget)
}

/// As [`run_paper_checks`], reusing a spectrum computed with the default `m` range.
pub fn run_paper_checks_with(
    analysis: &Analysis,
    rows: &[SpectrumRow],
    budget: &SearchBudget,
) -> Result<Vec<CheckOutcome>> {
    let facts = Facts {
        a: analysis,
        rows,
        budget,
    };
    CHECKS
        .iter()
        .map(|(id, check)| {
            let (status, details) = check(&facts)?;
            Ok(CheckOutcome::new(
                *id,
                analysis.group().origin(),
                status,
                details,
            ))
        })
        .collect()
}

struct Facts<'a> {
    a: &'a Analysis,
    rows: &'a [SpectrumRow],
    budget: &'a SearchBudget,
}

impl Facts<'_> {
    fn g(&self) -> &FiniteGroup {
        self.a.group()
    }

    fn z(&self) -> usize {
        self.a.center_order()
    }

    fn w(&self) -> usize {
        self.a.w()
    }

    /// Exact `N(m)`, if the spectrum settles it.
    fn n_of(&self, m: usize) -> Option<usize> {
        match self.rows.iter().find(|r| r.m == m) {
            Some(r) => r.exact.then_some(r.n_max),
            None => {
                let last = self.rows.last()?;
                (m > last.m && last.exact && last.n_max == 0).then_some(0)
            }
        }
    }

    /// Least `n` with `T(m,n)`.
    fn boundary(&self, m: usize) -> Option<usize> {
        self.n_of(m).map(|n| n + 1)
    }

    fn tmn(&self, m: usize, n: usize) -> Result<Option<bool>> {
        if let Some(b) = tmn_from_spectrum(self.rows, m, n) {
            return Ok(Some(b));
        }
        Ok(is_tmn(self.a, m, n, self.budget)?.holds())
    }

    fn exact_rows(&self) -> Option<&[SpectrumRow]> {
        self.rows.iter().all(|r| r.exact).then_some(self.rows)
    }

    fn witnesses(&self) -> impl Iterator<Item = (usize, usize, &ObstructionCert)> {
        self.rows
            .iter()
            .filter_map(|r| r.witness.as_ref().map(|c| (r.m, r.n_max, c)))
    }

    fn set(&self, xs: &[usize]) -> String {
        let labels: Vec<&str> = xs.iter().map(|&x| self.g().label(x)).collect();
        format!("{{{}}}", labels.join(", "))
    }

    fn cert(&self, cert: &ObstructionCert) -> String {
        let parts: Vec<String> = cert.parts.iter().map(|p| self.set(p)).collect();
        parts.join(" ")
    }
}

fn unknown(what: impl std::fmt::Display) -> Result<Verdict> {
    Ok((
        CheckStatus::Unknown,
        format!("undecided within budget: {what}"),
    ))
}

fn skip(why: impl Into<String>) -> Result<Verdict> {
    Ok((CheckStatus::Skip, why.into()))
}

fn verdict(ok: bool, details: String) -> Result<Verdict> {
    Ok((CheckStatus::from_bool(ok), details))
}

fn least_noncommuting_pair(g: &FiniteGroup) -> Option<(usize, usize)> {
    g.elements()
        .flat_map(|x| (x + 1..g.order()).map(move |y| (x, y)))
        .find(|&(x, y)| !g.commutes(x, y))
}

fn smallest_prime(g: &FiniteGroup) -> Option<usize> {
    g.prime_divisors().first().copied()
}

fn c1(f: &Facts) -> Result<Verdict> {
    let (Some(t31), Some(t22)) = (f.tmn(3, 1)?, f.tmn(2, 2)?) else {
        return unknown("T(3,1) or T(2,2)");
    };
    let abelian = f.g().is_abelian();
    verdict(
        (t31 && t22) == abelian,
        format!("abelian = {abelian}, T(3,1) = {t31}, T(2,2) = {t22}"),
    )
}

fn c2(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let Some((x, y)) = least_noncommuting_pair(g) else {
        return skip("abelian");
    };
    let (xy, yx) = (g.mul(x, y), g.mul(y, x));
    let singles = ObstructionCert::new(vec![vec![x], vec![y], vec![xy]]);
    let pairs = ObstructionCert::new(vec![vec![x, y], vec![xy, yx]]);
    let r1 = verify_certificate(g, &singles, 3, 1);
    let r2 = verify_certificate(g, &pairs, 2, 2);
    let show = |r: &std::result::Result<(), _>| match r {
        Ok(()) => "valid".to_string(),
        Err(v) => format!("invalid ({v})"),
    };
    verdict(
        r1.is_ok() && r2.is_ok(),
        format!(
            "x = {}, y = {}: {} is {}; {} is {}",
            g.label(x),
            g.label(y),
            f.cert(&singles),
            show(&r1),
            f.cert(&pairs),
            show(&r2)
        ),
    )
}

fn c3(f: &Facts) -> Result<Verdict> {
    let v = f.a.noncentral();
    let mut count = 0;
    for (m, n, cert) in f.witnesses() {
        count += 1;
        if m * n > v {
            return verdict(
                false,
                format!(
                    "({m},{n})-obstruction {} exceeds |G|-|Z| = {v}",
                    f.cert(cert)
                ),
            );
        }
        if m * n == v {
            for &x in f.a.noncentral_elements() {
                let order = f.g().element_order(x)?;
                if order > n + f.z() {
                    return verdict(
                        false,
                        format!(
                            "mn = |G|-|Z| = {v} at ({m},{n}) but |{}| = {order} > n+|Z|",
                            f.g().label(x)
                        ),
                    );
                }
            }
        }
    }
    if count == 0 {
        return skip("no obstruction exists");
    }
    verdict(true, format!("{count} certificates, all with mn <= {v}"))
}

fn c4(f: &Facts) -> Result<Verdict> {
    let k = f.g().order();
    let mut seen = Vec::new();
    for m in 2..=4 {
        let n = k.div_ceil(m);
        match f.tmn(m, n)? {
            Some(true) => seen.push(format!("T({m},{n})")),
            Some(false) => return verdict(false, format!("not T({m},{n})")),
            None => return unknown(format!("T({m},{n})")),
        }
    }
    verdict(true, seen.join(", "))
}

/// `(m, n, max_i w(A_i))` for every spectrum witness.
fn part_cliques<'a>(f: &'a Facts) -> Vec<(usize, usize, usize, &'a ObstructionCert)> {
    f.witnesses()
        .map(|(m, n, cert)| {
            let best = cert
                .parts
                .iter()
                .map(|p| clique_number_of_subset(f.g(), p))
                .max()
                .unwrap_or(0);
            (m, n, best, cert)
        })
        .collect()
}

fn c5(f: &Facts) -> Result<Verdict> {
    let found = part_cliques(f);
    if found.is_empty() {
        return skip("no obstruction exists");
    }
    let w = f.w();
    for &(m, n, best, cert) in &found {
        if m - 1 + best > w {
            return verdict(
                false,
                format!(
                    "({m},{n})-obstruction {}: m-1+max w(A_i) = {} > w = {w}",
                    f.cert(cert),
                    m - 1 + best
                ),
            );
        }
    }
    verdict(
        true,
        format!("m-1+max w(A_i) <= w = {w} on {} certificates", found.len()),
    )
}

fn c5_strict(f: &Facts) -> Result<Verdict> {
    let found = part_cliques(f);
    if found.is_empty() {
        return skip("no obstruction exists");
    }
    let w = f.w();
    match found.iter().find(|&&(m, _, best, _)| m + best > w) {
        Some(&(m, n, best, cert)) => Ok((
            CheckStatus::DisputedDisagree,
            format!(
                "({m},{n})-obstruction {}: m+max w(A_i) = {} > w = {w}",
                f.cert(cert),
                m + best
            ),
        )),
        None => Ok((
            CheckStatus::DisputedAgree,
            format!("m+max w(A_i) <= w = {w} on {} certificates", found.len()),
        )),
    }
}

fn c6(f: &Facts) -> Result<Verdict> {
    let Some(rows) = f.exact_rows() else {
        return unknown("spectrum");
    };
    let w = f.w();
    for r in rows {
        let n0 = r.n_max + 1;
        if w >= r.m * n0 {
            return verdict(
                false,
                format!("T({},{n0}) but w = {w} >= {}", r.m, r.m * n0),
            );
        }
    }
    verdict(
        true,
        format!("w = {w} < m(N(m)+1) for m = 2..={}", rows.len() + 1),
    )
}

fn c7(f: &Facts) -> Result<Verdict> {
    let Some(rows) = f.exact_rows() else {
        return unknown("spectrum");
    };
    let (z, w) = (f.z(), f.w());
    for r in rows {
        let n0 = r.n_max + 1;
        if z >= n0 && w >= r.m {
            return verdict(
                false,
                format!("T({},{n0}) with |Z| = {z} >= n and w = {w} >= m", r.m),
            );
        }
    }
    verdict(
        true,
        format!("|Z| = {z}, w = {w}: holds at every boundary (m, N(m)+1)"),
    )
}

fn c8(f: &Facts) -> Result<Verdict> {
    let w = f.w();
    for m in 2..=w + 2 {
        let Some(t) = f.tmn(m, 1)? else {
            return unknown(format!("T({m},1)"));
        };
        if t != (w < m) {
            return verdict(false, format!("T({m},1) = {t} but w = {w}"));
        }
    }
    verdict(true, format!("T(m,1) iff m > {w} for m = 2..={}", w + 2))
}

fn c9(f: &Facts) -> Result<Verdict> {
    let mut notes = Vec::new();
    if f.g().is_nilpotent() {
        let Some(rows) = f.exact_rows() else {
            return unknown("spectrum");
        };
        if let Some(&p) = f.g().prime_divisors().last() {
            // T(m,n) with n <= p forces T(m,1): N(m) is 0 or at least p.
            if let Some(r) = rows.iter().find(|r| r.n_max > 0 && r.n_max < p) {
                return verdict(
                    false,
                    format!("nilpotent, T({},{}) but not T({},1)", r.m, r.n_max + 1, r.m),
                );
            }
            notes.push(format!("nilpotent: every N(m) is 0 or >= {p}"));
        }
    }
    let w = f.w();
    if w >= 2 {
        let Some(t) = f.tmn(w, 2)? else {
            return unknown(format!("T({w},2)"));
        };
        if t && f.z() != 1 {
            return verdict(false, format!("T({w},2) with |Z| = {}", f.z()));
        }
        notes.push(format!("T(w,2) = T({w},2) is {t}, |Z| = {}", f.z()));
    }
    if notes.is_empty() {
        return skip("not nilpotent and w < 2");
    }
    verdict(true, notes.join("; "))
}

fn c10(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    if g.is_abelian() {
        return skip("abelian");
    }
    let mut tested = 0;
    for n in g.sample_normal_subgroups() {
        if g.quotient(&n)?.group.is_abelian() {
            continue;
        }
        tested += 1;
        for m in [2, 3] {
            let Some(n0) = f.boundary(m) else {
                return unknown(format!("N({m})"));
            };
            if n.len() >= n0 {
                return verdict(
                    false,
                    format!(
                        "T({m},{n0}) but normal subgroup {} has order {}",
                        f.set(n.members()),
                        n.len()
                    ),
                );
            }
        }
    }
    if tested == 0 {
        return skip("no sampled normal subgroup with non-abelian quotient");
    }
    verdict(
        true,
        format!("{tested} normal subgroups with non-abelian quotient, all small enough"),
    )
}

fn c11(f: &Facts) -> Result<Verdict> {
    if f.g().is_abelian() {
        return skip("abelian");
    }
    let index = f.g().order() / f.z();
    verdict(f.w() < index, format!("w = {} vs [G:Z] = {index}", f.w()))
}

/// `{x..x^n}, {y..y^n}, {xy..(xy)^n}, {xy, xy^2, .., xy^(n-1), x^2 y}`.
fn four_set_construction(g: &FiniteGroup, x: usize, y: usize, n: usize) -> ObstructionCert {
    let powers = |a: usize| (1..=n).map(|i| g.pow(a, i)).collect::<Vec<_>>();
    let xy = g.mul(x, y);
    let mut last: Vec<usize> = (1..n).map(|i| g.mul(x, g.pow(y, i))).collect();
    last.push(g.mul(g.pow(x, 2), y));
    ObstructionCert::new(vec![powers(x), powers(y), powers(xy), last])
}

fn c12(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let Some((x, y)) = least_noncommuting_pair(g) else {
        return skip("abelian");
    };
    let p = smallest_prime(g).expect("non-abelian groups have a prime divisor");
    let qualifying: Vec<usize> = (2..=5).filter(|&n| n < p).collect();
    if qualifying.is_empty() {
        return skip(format!("smallest prime divisor {p} leaves no n in 2..=5"));
    }
    let mut notes = Vec::new();
    for &n in &qualifying {
        match f.tmn(4, n)? {
            None => return unknown(format!("T(4,{n})")),
            Some(true) => return verdict(false, format!("non-abelian yet T(4,{n})")),
            Some(false) => notes.push(format!("not T(4,{n})")),
        }
    }
    let literal = four_set_construction(g, x, y, qualifying[0]);
    let status = match verify_certificate(g, &literal, 4, qualifying[0]) {
        Ok(()) => "valid".to_string(),
        Err(v) => format!("not an obstruction ({v})"),
    };
    notes.push(format!(
        "power-set construction at n = {}: {} is {status}",
        qualifying[0],
        f.cert(&literal)
    ));
    verdict(true, notes.join("; "))
}

fn c13(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let Some((x, y)) = least_noncommuting_pair(g) else {
        return skip("abelian");
    };
    let p = smallest_prime(g).expect("non-abelian groups have a prime divisor");
    let n = p - 1;
    let mut set = vec![x, y];
    set.extend((1..=n).map(|i| g.mul(x, g.pow(y, i))));
    let mut distinct = set.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != n + 2 {
        return verdict(false, format!("{} has repeated elements", f.set(&set)));
    }
    if let Some((a, b)) = commuting_pair(g, &set) {
        return verdict(
            false,
            format!("{}: {} and {} commute", f.set(&set), g.label(a), g.label(b)),
        );
    }
    let w = f.w();
    verdict(
        w >= n + 2 && w > p,
        format!(
            "{} pairwise non-commuting; w = {w} >= p+1 = {}",
            f.set(&set),
            p + 1
        ),
    )
}

fn c14(f: &Facts) -> Result<Verdict> {
    if f.g().is_abelian() {
        return skip("abelian");
    }
    if f.z() == 1 {
        return skip("trivial center");
    }
    let Some(rows) = f.exact_rows() else {
        return unknown("spectrum");
    };
    let p = smallest_prime(f.g()).expect("non-abelian groups have a prime divisor");
    for r in rows {
        let n0 = r.n_max + 1;
        if p > r.m.saturating_sub(2).max(n0 - 1) {
            return verdict(
                false,
                format!("T({},{n0}) but p = {p} > max(m-2, n-1)", r.m),
            );
        }
    }
    verdict(true, format!("p = {p} <= max(m-2, N(m)) for every m"))
}

fn c15(f: &Facts) -> Result<Verdict> {
    let primes = f.g().prime_divisors();
    let &[p] = primes.as_slice() else {
        return skip("not a p-group");
    };
    if f.g().is_abelian() {
        return verdict(true, format!("abelian {p}-group"));
    }
    match f.tmn(p, p)? {
        None => unknown(format!("T({p},{p})")),
        Some(t) => verdict(!t, format!("non-abelian {p}-group, T({p},{p}) = {t}")),
    }
}

fn c16(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    if g.is_abelian() || !g.is_nilpotent() {
        return skip("not a non-abelian nilpotent group");
    }
    let k = g.prime_divisors().len() as u32;
    let Some(n3) = f.boundary(3) else {
        return unknown("N(3)");
    };
    let mut notes = vec![format!("|pi| = {k}, least n with T(3,n) is {n3}")];
    let mut ok = 3usize.pow(k) <= n3 + 2;
    if g.order() % 2 == 1 {
        let Some(n4) = f.boundary(4) else {
            return unknown("N(4)");
        };
        ok &= 4usize.pow(k) <= n4 + 6;
        notes.push(format!("odd order, least n with T(4,n) is {n4}"));
    }
    verdict(ok, notes.join("; "))
}

fn c17(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let normals = g.sample_normal_subgroups();
    if normals.is_empty() {
        return skip("no proper nontrivial normal subgroup sampled");
    }
    let Some(rows) = f.exact_rows() else {
        return unknown("spectrum");
    };
    let m_max = rows.last().map_or(2, |r| r.m);
    let mut checked = 0;
    for n in &normals {
        let q = Analysis::new(g.quotient(n)?.group)?;
        let q_rows = spectrum(&q, Some(m_max), f.budget)?;
        for r in rows {
            // T(m,n) for every n >= n0; the weakest requirement on G/N is n - floor(n/2) at n0.
            let n0 = (r.n_max + 1).max(2);
            let target = n0.div_ceil(2);
            let holds = match tmn_from_spectrum(&q_rows, r.m, target) {
                Some(b) => Some(b),
                None => is_tmn(&q, r.m, target, f.budget)?.holds(),
            };
            match holds {
                None => return unknown(format!("G/N T({},{target})", r.m)),
                Some(false) => {
                    let row = q_rows.iter().find(|qr| qr.m == r.m);
                    let witness = row
                        .and_then(|qr| qr.witness.as_ref())
                        .map(|c| {
                            let parts: Vec<String> = c
                                .parts
                                .iter()
                                .map(|p| {
                                    let ls: Vec<&str> =
                                        p.iter().map(|&x| q.group().label(x)).collect();
                                    format!("{{{}}}", ls.join(", "))
                                })
                                .collect();
                            parts.join(" ")
                        })
                        .unwrap_or_default();
                    return verdict(
                        false,
                        format!(
                            "T({},{n0}) but G/N with |N| = {} is not T({},{target}): {witness}",
                            r.m,
                            n.len(),
                            r.m
                        ),
                    );
                }
                Some(true) => checked += 1,
            }
        }
    }
    verdict(
        true,
        format!("{} normal subgroups, {checked} (N, m) pairs", normals.len()),
    )
}

fn c18(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let series = g.derived_series();
    let Some(d) = series.derived_length else {
        return skip("not solvable");
    };
    let Some(n3) = f.boundary(3) else {
        return unknown("N(3)");
    };
    let lhs = 1usize << d;
    let mut ok = lhs <= 2 * n3;
    let mut notes = vec![format!("d = {d}, least n with T(3,n) is {n3}")];
    if lhs == 2 * n3 {
        notes.push("bound attained".to_string());
    }
    if g.order() % 2 == 1 {
        let Some(n4) = f.boundary(4) else {
            return unknown("N(4)");
        };
        ok &= lhs <= 2 * n4;
        notes.push(format!("odd order, least n with T(4,n) is {n4}"));
    }
    verdict(ok, notes.join("; "))
}

fn c19(f: &Facts) -> Result<Verdict> {
    let g = f.g();
    let Some(rows) = f.exact_rows() else {
        return unknown("spectrum");
    };
    let mut notes = Vec::new();
    for p in g.prime_divisors() {
        let sc = g.sylow_count(p)?;
        if !sc.trivial_intersection {
            continue;
        }
        for r in rows {
            let bound = r.m * (r.n_max + 1) - 1;
            if sc.count > bound {
                return verdict(
                    false,
                    format!(
                        "v_{p} = {} but T({},{}) gives mn-1 = {bound}",
                        sc.count,
                        r.m,
                        r.n_max + 1
                    ),
                );
            }
        }
        notes.push(format!("v_{p} = {}", sc.count));
    }
    if notes.is_empty() {
        return skip("no prime with trivially intersecting Sylow subgroups");
    }
    verdict(true, notes.join(", "))
}

fn c20(f: &Facts) -> Result<Verdict> {
    if f.g().derived_series().solvable {
        return verdict(true, "solvable".to_string());
    }
    for m in 2..=21 {
        let Some(n0) = f.boundary(m) else {
            return unknown(format!("N({m})"));
        };
        if m * n0 <= 21 {
            return verdict(false, format!("not solvable yet T({m},{n0})"));
        }
    }
    verdict(
        true,
        "not solvable; T(m,n) forces mn > 21 for m = 2..=21".to_string(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::frobenius_21;

    fn statuses(a: &Analysis) -> Vec<(String, CheckStatus)> {
        run_paper_checks(a, &SearchBudget::default())
            .unwrap()
            .into_iter()
            .map(|o| (o.check_id, o.status))
            .collect()
    }

    fn status_of(all: &[(String, CheckStatus)], id: &str) -> CheckStatus {
        all.iter().find(|(i, _)| i == id).unwrap().1
    }

    #[test]
    fn cyclic_group_mostly_skips() {
        let all = statuses(&Analysis::from_spec("C:12").unwrap());
        assert_eq!(status_of(&all, "C1"), CheckStatus::Pass);
        assert_eq!(status_of(&all, "C2"), CheckStatus::Skip);
        assert!(all.iter().all(|(_, s)| *s != CheckStatus::Fail));
    }

    #[test]
    fn s4_checks() {
        let all = statuses(&Analysis::from_spec("S:4").unwrap());
        for id in [
            "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C18",
        ] {
            assert_eq!(status_of(&all, id), CheckStatus::Pass, "{id}: {all:?}");
        }
        assert_eq!(status_of(&all, "C14"), CheckStatus::Skip);
        assert_eq!(status_of(&all, "C5.strict"), CheckStatus::DisputedDisagree);
    }

    #[test]
    fn frobenius_applies_four_set_check() {
        let a = Analysis::new(frobenius_21().unwrap()).unwrap();
        let all = statuses(&a);
        assert_eq!(status_of(&all, "C12"), CheckStatus::Pass);
    }
}
