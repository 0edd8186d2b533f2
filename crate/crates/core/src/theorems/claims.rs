use rayon::prelude::*;
use serde::Serialize;

use super::checks::run_paper_checks_with;
use super::corpus::{corpus, CorpusEntry, Scope};
use super::{CheckOutcome, CheckStatus};
use crate::analysis::Analysis;
use crate::error::{GroupError, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::obstruction::{
    is_tmn, packing_oracle, spectrum, verify_certificate, Decision, LabelledElement,
    ObstructionCert, SearchBudget, SpectrumRow,
};

/// How a smaller group is obtained from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// The `i`-th term of the derived series.
    DerivedTerm(usize),
    /// `H x 1` inside `H x K`, where `|K|` is given.
    LeftFactor(usize),
    /// `G / N` for `N` the `i`-th term of the derived series.
    QuotientByDerivedTerm(usize),
    QuotientByCenter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimKind {
    Member {
        m: usize,
        n: usize,
    },
    NonMember {
        m: usize,
        n: usize,
    },
    /// A contested claim (`member` is what was asserted). Both the class
    /// search and capacity packing must finish and agree.
    Disputed {
        m: usize,
        n: usize,
        member: bool,
    },
    /// The twelve pairs `{(q,s), (-q,s)}` in `Q:8*S:3` form a `(12,2)`-obstruction.
    QuaternionCertificate,
    /// `w(G x A) = w(G)` for abelian `A`.
    CliqueOfProduct {
        base: &'static str,
    },
    /// `N_H(m) <= N_G(m)` for every `m` in the parent's spectrum.
    Inherited {
        parent: &'static str,
        how: Relation,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub group: String,
    pub kind: ClaimKind,
}

fn member(group: &str, m: usize, n: usize) -> Claim {
    Claim {
        id: format!("{group}:T({m},{n})"),
        group: group.to_string(),
        kind: ClaimKind::Member { m, n },
    }
}

fn non_member(group: &str, m: usize, n: usize) -> Claim {
    Claim {
        id: format!("{group}:!T({m},{n})"),
        group: group.to_string(),
        kind: ClaimKind::NonMember { m, n },
    }
}

/// The fixed table of claims about named groups.
pub fn claims_table() -> Vec<Claim> {
    let mut out = vec![member("S:3", 2, 3), member("S:3", 3, 2)];
    for n in 3..=12 {
        let g = format!("D:{}", 2 * n);
        out.push(member(&g, 2, n));
        if n % 2 == 0 {
            out.push(member(&g, 2, n - 1));
            out.push(non_member(&g, 2, n - 2));
            out.push(member(&g, n / 2 + 2, 1));
        } else {
            out.push(member(&g, n + 2, 1));
        }
    }
    out.push(member("D:8", 4, 1));
    out.push(member("Q:8", 4, 1));
    // a group of order p^k is T(p^(k-1), p) and T(p, p^(k-1))
    for (g, p, k) in [
        ("D:8", 2u32, 3u32),
        ("Q:8", 2, 3),
        ("D:16", 2, 4),
        ("Q:16", 2, 4),
    ] {
        let (p, big) = (p as usize, p.pow(k - 1) as usize);
        out.push(member(g, big, p));
        out.push(member(g, p, big));
    }
    out.push(non_member("S:3*S:3", 3, 2));
    out.push(member("S:3*S:3", 7, 3));
    out.push(non_member("Q:8*S:3", 12, 2));
    out.push(Claim {
        id: "Q:8*S:3:twelve-pairs".into(),
        group: "Q:8*S:3".into(),
        kind: ClaimKind::QuaternionCertificate,
    });
    out.push(member("Q:8*S:3", 13, 2));
    for (m, n) in [(14, 1), (11, 2), (6, 3), (4, 5), (3, 7)] {
        out.push(member("S:4", m, n));
    }
    for (m, n) in [(22, 1), (22, 2), (17, 3), (14, 4)] {
        out.push(member("A:5", m, n));
    }
    for (m, n) in [(21, 2), (16, 3), (13, 4), (8, 6), (7, 8)] {
        out.push(non_member("A:5", m, n));
    }
    for (m, n) in [(9, 5), (9, 6), (8, 7), (8, 8)] {
        out.push(Claim {
            id: format!("A:5:T({m},{n})?"),
            group: "A:5".into(),
            kind: ClaimKind::Disputed { m, n, member: true },
        });
    }
    for (g, base) in [("S:4*C:2", "S:4"), ("A:5*C:2", "A:5")] {
        out.push(Claim {
            id: format!("{g}:w"),
            group: g.into(),
            kind: ClaimKind::CliqueOfProduct { base },
        });
    }
    let inherited = [
        ("A:4", "S:4", Relation::DerivedTerm(1)),
        ("S:3", "S:3*S:3", Relation::LeftFactor(6)),
        ("S:4/V", "S:4", Relation::QuotientByDerivedTerm(2)),
        ("D:8/Z", "D:8", Relation::QuotientByCenter),
    ];
    for (name, parent, how) in inherited {
        out.push(Claim {
            id: format!("{parent}:inherits:{name}"),
            group: name.into(),
            kind: ClaimKind::Inherited { parent, how },
        });
    }
    out
}

/// The twelve two-element sets `{(q,s), (-q,s)}` for `q` in `i, j, k` and
/// `s` a non-identity element of `S3` other than `(1,3,2)`, with
/// `i = a`, `j = b`, `k = ab` in `Q:8`.
pub fn quaternion_s3_certificate(group: &FiniteGroup) -> Result<ObstructionCert> {
    let quaternions = [("a", "a^3"), ("b", "a^2b"), ("ab", "a^3b")];
    let perms = ["(1,2)", "(1,3)", "(2,3)", "(1,2,3)"];
    let find = |q: &str, s: &str| {
        let label = format!("({q},{s})");
        group
            .element_by_label(&label)
            .ok_or_else(|| GroupError::Parameter(format!("no element `{label}`")))
    };
    let mut parts = Vec::new();
    for (plus, minus) in quaternions {
        for s in perms {
            parts.push(vec![find(plus, s)?, find(minus, s)?]);
        }
    }
    Ok(ObstructionCert::new(parts))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub m: usize,
    #[serde(rename = "N")]
    pub n_max: usize,
    pub exact: bool,
    pub witness: Option<Vec<Vec<LabelledElement>>>,
}

impl SpectrumEntry {
    pub fn from_row(group: &FiniteGroup, row: &SpectrumRow) -> Self {
        SpectrumEntry {
            m: row.m,
            n_max: row.n_max,
            exact: row.exact,
            witness: row.witness.as_ref().map(|c| c.labelled(group)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSpectrum {
    pub group: String,
    pub w: usize,
    pub spectrum: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub claims: Vec<CheckOutcome>,
    pub checks: Vec<CheckOutcome>,
    pub spectra: Vec<GroupSpectrum>,
}

impl CheckReport {
    pub fn all(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.claims.iter().chain(&self.checks)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.all().filter(|o| o.status == status).count()
    }
}

struct GroupData {
    name: String,
    analysis: Analysis,
    rows: Option<Vec<SpectrumRow>>,
}

fn selects(only: Option<&str>, id: &str, sep: char) -> bool {
    match only {
        None => true,
        Some(o) => id == o || id.strip_prefix(o).is_some_and(|rest| rest.starts_with(sep)),
    }
}

/// Evaluates the claims table and, over the corpus, every general check.
///
/// `only` restricts the run to one claim id (or a group prefix such as
/// `A:5`) or one check id such as `C17`. Groups are processed in parallel;
/// the output order is fixed by the table and corpus order.
pub fn verify_paper_corpus(
    budget: &SearchBudget,
    only: Option<&str>,
    include_extended: bool,
) -> Result<CheckReport> {
    let claims: Vec<Claim> = claims_table()
        .into_iter()
        .filter(|c| selects(only, &c.id, ':'))
        .collect();
    let checks_selected = match only {
        None => true,
        Some(o) => o.starts_with('C') && !o.contains(':'),
    };
    let entries: Vec<CorpusEntry> = if checks_selected {
        corpus(include_extended)
    } else {
        Vec::new()
    };
    let mut needed: Vec<(String, bool)> = entries
        .iter()
        .map(|e| (e.name.clone(), e.scope != Scope::CliqueOnly))
        .collect();
    let mut want = |name: &str, with_rows: bool| match needed.iter_mut().find(|(n, _)| n == name) {
        Some(entry) => entry.1 |= with_rows,
        None => needed.push((name.to_string(), with_rows)),
    };
    for c in &claims {
        match &c.kind {
            ClaimKind::CliqueOfProduct { base } => {
                want(&c.group, false);
                want(base, false);
            }
            ClaimKind::Inherited { parent, .. } => want(parent, true),
            _ => want(&c.group, true),
        }
    }
    let data: Vec<GroupData> = needed
        .par_iter()
        .map(|(name, with_rows)| {
            let entry = CorpusEntry {
                name: name.clone(),
                scope: Scope::Full,
            };
            let analysis = Analysis::new(entry.build()?)?;
            let rows = if *with_rows {
                Some(spectrum(&analysis, None, budget)?)
            } else {
                None
            };
            Ok(GroupData {
                name: name.clone(),
                analysis,
                rows,
            })
        })
        .collect::<Result<_>>()?;
    let lookup = |name: &str| {
        data.iter()
            .find(|d| d.name == name)
            .expect("group was prepared")
    };

    let checks: Vec<CheckOutcome> = entries
        .par_iter()
        .filter(|e| e.scope != Scope::CliqueOnly)
        .map(|e| {
            let d = lookup(&e.name);
            let rows = d.rows.as_deref().expect("corpus spectra are computed");
            let mut out = run_paper_checks_with(&d.analysis, rows, budget)?;
            for o in &mut out {
                o.group = e.name.clone();
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .filter(|o| selects(only, &o.check_id, '.'))
        .collect();

    let claim_outcomes: Vec<CheckOutcome> = claims
        .par_iter()
        .map(|c| evaluate_claim(c, &lookup, budget))
        .collect::<Result<_>>()?;

    let spectra = data
        .iter()
        .filter_map(|d| {
            d.rows.as_ref().map(|rows| GroupSpectrum {
                group: d.name.clone(),
                w: d.analysis.w(),
                spectrum: rows
                    .iter()
                    .map(|r| SpectrumEntry::from_row(d.analysis.group(), r))
                    .collect(),
            })
        })
        .collect();
    Ok(CheckReport {
        claims: claim_outcomes,
        checks,
        spectra,
    })
}

fn cert_text(group: &FiniteGroup, cert: &ObstructionCert) -> String {
    cert.parts
        .iter()
        .map(|p| {
            let ls: Vec<&str> = p.iter().map(|&x| group.label(x)).collect();
            format!("{{{}}}", ls.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The class search decision, cross-checked by packing when the twin
/// partition is complete multipartite.
fn decide(
    a: &Analysis,
    m: usize,
    n: usize,
    budget: &SearchBudget,
) -> Result<(Decision, Option<bool>)> {
    let d = is_tmn(a, m, n, budget)?;
    let tp = a.twins();
    if !tp.complete_multipartite() {
        return Ok((d, None));
    }
    let packs = packing_oracle(&tp.capacities(), m, n).feasible;
    if let Some(holds) = d.holds() {
        if holds == packs {
            return Err(GroupError::Invariant(format!(
                "class search and packing disagree on {} at ({m},{n})",
                a.group().origin()
            )));
        }
    }
    Ok((d, Some(!packs)))
}

fn n_of(rows: Option<&Vec<SpectrumRow>>, m: usize) -> Option<usize> {
    let rows = rows?;
    match rows.iter().find(|r| r.m == m) {
        Some(r) => r.exact.then_some(r.n_max),
        None => rows
            .last()
            .filter(|r| r.exact && r.n_max == 0 && m > r.m)
            .map(|_| 0),
    }
}

fn evaluate_claim<'a>(
    claim: &Claim,
    lookup: &impl Fn(&str) -> &'a GroupData,
    budget: &SearchBudget,
) -> Result<CheckOutcome> {
    let out = |status, details: String| {
        Ok(CheckOutcome::new(
            claim.id.clone(),
            claim.group.clone(),
            status,
            details,
        ))
    };
    match &claim.kind {
        ClaimKind::Member { m, n } | ClaimKind::NonMember { m, n } => {
            let (m, n) = (*m, *n);
            let expect_member = matches!(claim.kind, ClaimKind::Member { .. });
            let gd = lookup(&claim.group);
            let g = gd.analysis.group();
            let (d, packing) = decide(&gd.analysis, m, n, budget)?;
            let mut notes = Vec::new();
            if let Some(nm) = n_of(gd.rows.as_ref(), m) {
                let tight = if nm + 1 == n { ", tight" } else { "" };
                notes.push(format!("N({m}) = {nm}{tight}"));
            }
            if packing.is_some() {
                notes.push("packing agrees".to_string());
            }
            notes.push(format!("{} nodes", d.nodes));
            let status = match d.holds() {
                None => CheckStatus::Unknown,
                Some(h) => CheckStatus::from_bool(h == expect_member),
            };
            if let Some(cert) = &d.certificate {
                notes.insert(0, format!("obstruction {}", cert_text(g, cert)));
            }
            out(status, format!("{}: {}", d.status, notes.join("; ")))
        }
        ClaimKind::Disputed { m, n, member } => {
            let (m, n) = (*m, *n);
            let gd = lookup(&claim.group);
            let g = gd.analysis.group();
            let (d, packing) = decide(&gd.analysis, m, n, budget)?;
            let (Some(holds), Some(_)) = (d.holds(), packing) else {
                return out(
                    CheckStatus::Unknown,
                    format!(
                        "{}: both the class search and packing must finish",
                        d.status
                    ),
                );
            };
            let status = if holds == *member {
                CheckStatus::DisputedAgree
            } else {
                CheckStatus::DisputedDisagree
            };
            let mut details = format!("{}: class search and packing agree", d.status);
            if let Some(nm) = n_of(gd.rows.as_ref(), m) {
                details.push_str(&format!("; N({m}) = {nm}"));
            }
            if let Some(cert) = &d.certificate {
                details.push_str(&format!("; obstruction {}", cert_text(g, cert)));
            }
            out(status, details)
        }
        ClaimKind::QuaternionCertificate => {
            let g = lookup(&claim.group).analysis.group();
            let cert = quaternion_s3_certificate(g)?;
            match verify_certificate(g, &cert, 12, 2) {
                Ok(()) => out(
                    CheckStatus::Pass,
                    format!("valid (12,2)-obstruction {}", cert_text(g, &cert)),
                ),
                Err(v) => out(CheckStatus::Fail, format!("{}: {v}", cert_text(g, &cert))),
            }
        }
        ClaimKind::CliqueOfProduct { base } => {
            let (wp, wb) = (lookup(&claim.group).analysis.w(), lookup(base).analysis.w());
            out(
                CheckStatus::from_bool(wp == wb),
                format!("w = {wp}, w({base}) = {wb}"),
            )
        }
        ClaimKind::Inherited { parent, how } => {
            let pd = lookup(parent);
            let g = pd.analysis.group();
            let rows = pd.rows.as_ref().expect("parent spectrum is computed");
            let small = derive(g, *how, &claim.group)?;
            let sa = Analysis::new(small)?;
            let m_max = rows.last().map_or(2, |r| r.m);
            let srows = spectrum(&sa, Some(m_max), budget)?;
            if rows.iter().chain(&srows).any(|r| !r.exact) {
                return out(
                    CheckStatus::Unknown,
                    "spectrum undecided within budget".into(),
                );
            }
            let pairs: Vec<String> = rows
                .iter()
                .zip(&srows)
                .map(|(r, s)| format!("{}:{}<={}", r.m, s.n_max, r.n_max))
                .collect();
            let bad = rows.iter().zip(&srows).find(|(r, s)| s.n_max > r.n_max);
            match bad {
                None => out(
                    CheckStatus::Pass,
                    format!("m:N_sub<=N_parent {}", pairs.join(" ")),
                ),
                Some((r, s)) => out(
                    CheckStatus::Fail,
                    format!(
                        "N({}) = {} in {} exceeds {} in {parent}; obstruction {}",
                        r.m,
                        s.n_max,
                        claim.group,
                        r.n_max,
                        s.witness
                            .as_ref()
                            .map(|c| cert_text(sa.group(), c))
                            .unwrap_or_default()
                    ),
                ),
            }
        }
    }
}

fn derive(g: &FiniteGroup, how: Relation, name: &str) -> Result<FiniteGroup> {
    let term =
        |i: usize| {
            g.derived_series().terms.get(i).cloned().ok_or_else(|| {
                GroupError::Parameter(format!("no derived term {i} in {}", g.origin()))
            })
        };
    match how {
        Relation::DerivedTerm(i) => g.restrict(&term(i)?, name),
        Relation::LeftFactor(k) => {
            let members = ElementSet::new(g.order(), g.elements().filter(|x| x % k == 0))?;
            g.restrict(&members, name)
        }
        Relation::QuotientByDerivedTerm(i) => Ok(g.quotient(&term(i)?)?.group),
        Relation::QuotientByCenter => Ok(g.quotient(&g.center())?.group),
    }
}
