//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and exits
//! non-zero on any failure that is not a recorded conflict.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use tmn::analysis::Analysis;
use tmn::group::ingest_cayley;
use tmn::obstruction::{
    brute_force_is_tmn, is_tmn, packing_oracle, verify_certificate, ObstructionCert, SearchBudget,
    Status,
};
use tmn::theorems::{
    corpus, frobenius_21, quaternion_s3_certificate, verify_paper_corpus, CheckStatus,
};

/// Memberships asserted in the claims table that the search refutes with a
/// verified certificate. Reported as FAIL, never silently dropped.
const KNOWN_CONFLICTS: [(&str, usize, usize); 1] = [("S:3*S:3", 7, 3)];

struct Verdict {
    failures: Vec<String>,
    conflicts: Vec<String>,
    note: String,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            conflicts: Vec::new(),
            note: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let mut pairs = 0;
    for entry in corpus(false) {
        let g = entry.build().unwrap();
        if g.order() > 24 {
            continue;
        }
        let a = Analysis::new(g).unwrap();
        for m in 2..=12 {
            for n in 1..=12 / m {
                let fast = is_tmn(&a, m, n, &budget()).unwrap().status;
                let slow = brute_force_is_tmn(a.group(), m, n).unwrap().status;
                pairs += 1;
                v.expect(
                    fast != Status::Unknown && fast == slow,
                    format!("{} ({m},{n}): {fast} vs {slow}", entry.name),
                );
            }
        }
    }
    v.note = format!("{pairs} instances");
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let groups = [
        ("S:3", Analysis::from_spec("S:3").unwrap()),
        ("A:5", Analysis::from_spec("A:5").unwrap()),
        ("F21", Analysis::new(frobenius_21().unwrap()).unwrap()),
    ];
    let mut pairs = 0;
    for (name, a) in &groups {
        v.expect(
            a.twins().complete_multipartite(),
            format!("{name} not complete multipartite"),
        );
        let caps = a.twins().capacities();
        for m in 2..=25 {
            for n in 1..=10 {
                let d = is_tmn(a, m, n, &budget()).unwrap();
                let p = packing_oracle(&caps, m, n);
                pairs += 1;
                v.expect(d.holds() == Some(!p.feasible), format!("{name} ({m},{n})"));
            }
        }
    }
    v.note = format!("{pairs} instances");
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let mut members: Vec<(&str, usize, usize, bool)> = vec![
        ("S:3", 2, 3, true),
        ("S:3", 3, 2, true),
        ("D:8", 4, 1, true),
        ("Q:8", 4, 1, true),
        ("S:3*S:3", 3, 2, false),
        ("S:3*S:3", 7, 3, true),
        ("Q:8*S:3", 12, 2, false),
        ("Q:8*S:3", 13, 2, true),
        ("S:4", 14, 1, true),
        ("S:4", 11, 2, true),
        ("S:4", 6, 3, true),
        ("S:4", 4, 5, true),
        ("S:4", 3, 7, true),
        ("A:5", 22, 1, true),
        ("A:5", 22, 2, true),
        ("A:5", 17, 3, true),
        ("A:5", 14, 4, true),
        ("A:5", 21, 2, false),
        ("A:5", 16, 3, false),
        ("A:5", 13, 4, false),
        ("A:5", 8, 6, false),
        ("A:5", 7, 8, false),
    ];
    // Dihedral groups of order 2k: T(2,k) and T(k+2,1); for even k also not T(2,k-2).
    let dihedral: Vec<String> = (6..=24).step_by(2).map(|o| format!("D:{o}")).collect();
    for (i, spec) in dihedral.iter().enumerate() {
        let k = 6 / 2 + i;
        members.push((spec, 2, k, true));
        members.push((spec, k + 2, 1, true));
        if k % 2 == 0 {
            members.push((spec, 2, k - 2, false));
        }
    }
    let mut cache: Vec<(String, Analysis)> = Vec::new();
    for (spec, m, n, expected) in members {
        if !cache.iter().any(|(s, _)| s == spec) {
            cache.push((spec.to_string(), Analysis::from_spec(spec).unwrap()));
        }
        let a = &cache.iter().find(|(s, _)| s == spec).unwrap().1;
        let d = is_tmn(a, m, n, &budget()).unwrap();
        if d.status == Status::Unknown {
            v.failures.push(format!("{spec} T({m},{n}) UNKNOWN"));
            continue;
        }
        if d.holds() == Some(expected) {
            continue;
        }
        let refuted = expected
            && d.certificate
                .as_ref()
                .is_some_and(|c| verify_certificate(a.group(), c, m, n).is_ok());
        if refuted && KNOWN_CONFLICTS.contains(&(spec, m, n)) {
            v.conflicts.push(format!(
                "{spec} is not T({m},{n}): verified {m}x{n} obstruction"
            ));
        } else {
            v.failures.push(format!("{spec} T({m},{n}) = {}", d.status));
        }
    }
    let report = verify_paper_corpus(&budget(), Some("D"), false).unwrap();
    v.expect(
        report.claims.len() >= 30,
        format!("{} dihedral claims", report.claims.len()),
    );
    for c in &report.claims {
        v.expect(
            c.status == CheckStatus::Pass,
            format!("{} {}", c.check_id, c.status),
        );
    }
    let q = Analysis::from_spec("Q:8*S:3").unwrap();
    let cert = quaternion_s3_certificate(q.group()).unwrap();
    v.expect(
        verify_certificate(q.group(), &cert, 12, 2).is_ok(),
        "twelve-pair certificate",
    );
    v
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    for (spec, w) in [("S:3", 4), ("D:8", 3), ("Q:8", 3), ("A:5", 21)] {
        let a = Analysis::from_spec(spec).unwrap();
        let c = a.clique();
        v.expect(c.exhausted && c.w == w, format!("w({spec}) = {}", c.w));
    }
    let a5 = Analysis::from_spec("A:5").unwrap();
    for (p, count) in [(2, 5), (3, 10), (5, 6)] {
        let s = a5.group().sylow_count(p).unwrap();
        v.expect(
            s.count == count && s.trivial_intersection,
            format!("A5 Sylow {p}: {}", s.count),
        );
    }
    v.expect(!a5.group().derived_series().solvable, "A5 solvable");
    let s4 = Analysis::from_spec("S:4").unwrap();
    v.expect(
        s4.group().derived_series().derived_length == Some(3),
        "S4 derived length",
    );
    v
}

fn criterion_5() -> Verdict {
    let mut v = Verdict::new();
    let a5 = Analysis::from_spec("A:5").unwrap();
    let caps = a5.twins().capacities();
    for (m, n) in [(9, 5), (9, 6), (8, 7), (8, 8)] {
        let d = is_tmn(&a5, m, n, &budget()).unwrap();
        let p = packing_oracle(&caps, m, n);
        v.expect(
            d.status != Status::Unknown && d.holds() == Some(!p.feasible),
            format!("A5 ({m},{n}) oracles disagree"),
        );
    }
    let report = verify_paper_corpus(&budget(), Some("A:5"), false).unwrap();
    let disputed: Vec<_> = report
        .claims
        .iter()
        .filter(|c| c.check_id.ends_with('?'))
        .collect();
    v.expect(
        disputed.len() == 4,
        format!("{} disputed claims", disputed.len()),
    );
    for c in &disputed {
        v.expect(
            matches!(
                c.status,
                CheckStatus::DisputedAgree | CheckStatus::DisputedDisagree
            ),
            format!("{} {}", c.check_id, c.status),
        );
    }
    v.note = disputed
        .iter()
        .map(|c| format!("{} {}", c.check_id, c.status))
        .collect::<Vec<_>>()
        .join(", ");
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let report = verify_paper_corpus(&budget(), None, false).unwrap();
    for c in &report.checks {
        // The strict form is a disputed reading, reported but not asserted.
        let allowed = c.status == CheckStatus::Pass
            || c.status == CheckStatus::Skip
            || (c.check_id == "C5.strict" && c.status == CheckStatus::DisputedDisagree);
        v.expect(allowed, format!("{} {} {}", c.group, c.check_id, c.status));
    }
    for c in &report.claims {
        if c.check_id.contains(":inherits:") || c.check_id.ends_with(":w") {
            v.expect(
                c.status == CheckStatus::Pass,
                format!("{} {}", c.check_id, c.status),
            );
        }
    }
    let passes = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Pass)
        .count();
    v.note = format!(
        "{passes} check instances PASS over {} groups",
        report.spectra.len()
    );
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let run = || {
        let o = Command::new(env!("CARGO_BIN_EXE_tmn"))
            .args(["spectrum", "S:4", "--json"])
            .output()
            .unwrap();
        let mut json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        json.as_object_mut().unwrap().remove("wall_time_ms");
        (o.status.code(), serde_json::to_string(&json).unwrap(), json)
    };
    let (c1, a, json) = run();
    let (c2, b, _) = run();
    v.expect(c1 == Some(0) && c2 == Some(0), "exit codes");
    v.expect(a == b, "outputs differ");
    let s4 = Analysis::from_spec("S:4").unwrap();
    for row in json["result"]["spectrum"].as_array().unwrap() {
        if row["witness"].is_null() {
            continue;
        }
        let parts: Vec<Vec<usize>> = row["witness"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| {
                p.as_array()
                    .unwrap()
                    .iter()
                    .map(|e| e["index"].as_u64().unwrap() as usize)
                    .collect()
            })
            .collect();
        let canon = ObstructionCert::canonical(parts.clone());
        v.expect(
            canon.parts == parts,
            format!("m = {} witness not canonical", row["m"]),
        );
        let (m, n) = (
            row["m"].as_u64().unwrap() as usize,
            row["N"].as_u64().unwrap() as usize,
        );
        v.expect(
            verify_certificate(s4.group(), &canon, m, n).is_ok(),
            format!("m = {m} witness invalid"),
        );
    }
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    for entry in corpus(false) {
        let g = entry.build().unwrap();
        let back = ingest_cayley(&g.to_cayley()).unwrap();
        let same = back.order() == g.order()
            && g.elements()
                .all(|x| g.elements().all(|y| g.mul(x, y) == back.mul(x, y)));
        v.expect(same, format!("{} round trip", entry.name));
    }
    let cases = [
        ("error:parse:", "order 2\n0 x\n1 0\n"),
        ("error:latin-square:", "order 2\n0 1\n1 1\n"),
        (
            "error:associativity:",
            "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n",
        ),
    ];
    for (prefix, text) in cases {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        let o = Command::new(env!("CARGO_BIN_EXE_tmn"))
            .args(["ingest", "--check", f.path().to_str().unwrap()])
            .output()
            .unwrap();
        let err = String::from_utf8_lossy(&o.stderr);
        v.expect(
            o.status.code() == Some(2) && err.starts_with(prefix),
            format!("{prefix} got `{}`", err.trim()),
        );
    }
    v
}

fn main() {
    type Criterion = (usize, &'static str, fn() -> Verdict, u64);
    let criteria: [Criterion; 8] = [
        (1, "oracle equivalence", criterion_1, 120),
        (2, "packing equivalence", criterion_2, 120),
        (3, "claimed memberships", criterion_3, 300),
        (4, "computed invariants", criterion_4, 60),
        (5, "disputed-claim adjudication", criterion_5, 180),
        (6, "property suites", criterion_6, 300),
        (7, "determinism", criterion_7, 60),
        (8, "ingestion", criterion_8, 60),
    ];
    let mut unexpected = 0;
    for (id, title, f, limit) in criteria {
        let start = Instant::now();
        let mut verdict = f();
        let took = start.elapsed();
        if took > Duration::from_secs(limit) {
            verdict
                .failures
                .push(format!("took {took:.1?}, limit {limit}s"));
        }
        let pass = verdict.failures.is_empty() && verdict.conflicts.is_empty();
        println!(
            "criterion {id} {:<28} {} ({took:.2?}){}",
            title,
            if pass { "PASS" } else { "FAIL" },
            if verdict.note.is_empty() {
                String::new()
            } else {
                format!(" {}", verdict.note)
            }
        );
        for c in &verdict.conflicts {
            println!("    known conflict: {c}");
        }
        for f in &verdict.failures {
            println!("    failure: {f}");
        }
        unexpected += verdict.failures.len();
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failures");
        std::process::exit(1);
    }
}
