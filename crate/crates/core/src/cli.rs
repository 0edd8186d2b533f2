//! The `tmn` command line. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::Analysis;
use crate::error::{GroupError, Result};
use crate::group::{ingest_cayley, ingest_permutations, FiniteGroup};
use crate::obstruction::{
    brute_force_is_tmn, is_tmn, spectrum, verify_certificate, Decision, LabelledElement,
    ObstructionCert, SearchBudget, Status,
};
use crate::theorems::{verify_paper_corpus, CheckOutcome, CheckStatus, SpectrumEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tmn",
    version,
    about = "Commuting-subsets (T(m,n)) toolkit for finite groups"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct BudgetArgs {
    /// Node limit per search.
    #[arg(long)]
    budget: Option<u64>,
    /// Wall-clock limit per search, in seconds.
    #[arg(long)]
    time: Option<f64>,
}

impl BudgetArgs {
    fn resolve(&self) -> std::result::Result<SearchBudget, GroupError> {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget {
            if n == 0 {
                return Err(GroupError::Parameter("--budget must be positive".into()));
            }
            b.node_limit = n;
        }
        if let Some(t) = self.time {
            if !(t > 0.0 && t.is_finite()) {
                return Err(GroupError::Parameter(
                    "--time must be a positive number".into(),
                ));
            }
            b.time_limit = Duration::from_secs_f64(t);
        }
        Ok(b)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, center, primes, series, twin classes and clique number.
    Info { spec: String },
    /// Clique number of the non-commuting graph with a witness.
    Clique { spec: String },
    /// Decide T(m,n) by obstruction search.
    Decide {
        spec: String,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// N(m) for m = 2 up to w+1 (or --max-m).
    Spectrum {
        spec: String,
        #[arg(long)]
        max_m: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Element-level brute force (small instances only).
    Oracle {
        spec: String,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Evaluate the claims table and the general checks over the corpus.
    VerifyPaper {
        /// A claim id, group prefix (`A:5`) or check id (`C17`).
        #[arg(long)]
        only: Option<String>,
        /// Also run the slow extended corpus (S:5).
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Validate a Cayley or permutation file.
    Ingest {
        #[arg(long)]
        check: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Clique { .. } => "clique",
            Command::Decide { .. } => "decide",
            Command::Spectrum { .. } => "spectrum",
            Command::Oracle { .. } => "oracle",
            Command::VerifyPaper { .. } => "verify-paper",
            Command::Ingest { .. } => "ingest",
        }
    }
}

#[derive(Serialize)]
struct BudgetEcho {
    nodes: u64,
    seconds: f64,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    args: Vec<String>,
    group: Option<String>,
    version: &'static str,
    budget: Option<BudgetEcho>,
    result: Value,
    wall_time_ms: u128,
}

/// What a command produced: a JSON payload, its text rendering and the exit code.
struct Output {
    group: Option<String>,
    budget: Option<SearchBudget>,
    result: Value,
    text: String,
    code: i32,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error:usage: {first}");
            return EXIT_INPUT;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(o) => {
            if cli.json {
                let report = Report {
                    command: cli.command.name(),
                    args: echo,
                    group: o.group,
                    version: env!("CARGO_PKG_VERSION"),
                    budget: o.budget.map(|b| BudgetEcho {
                        nodes: b.node_limit,
                        seconds: b.time_limit.as_secs_f64(),
                    }),
                    result: o.result,
                    wall_time_ms: start.elapsed().as_millis(),
                };
                let text = serde_json::to_string_pretty(&report).expect("reports serialize");
                let _ = writeln!(out, "{text}");
            } else {
                let _ = write!(out, "{}", o.text);
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error:{}: {e}", e.category());
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Info { spec } => info(spec),
        Command::Clique { spec } => clique(spec),
        Command::Decide { spec, m, n, budget } => {
            let budget = budget.resolve()?;
            let a = Analysis::from_spec(spec)?;
            let d = is_tmn(&a, *m, *n, &budget)?;
            decision_output(&a, spec, *m, *n, d, Some(budget))
        }
        Command::Spectrum {
            spec,
            max_m,
            budget,
        } => spectrum_cmd(spec, *max_m, budget.resolve()?),
        Command::Oracle { spec, m, n } => {
            let a = Analysis::from_spec(spec)?;
            let d = brute_force_is_tmn(a.group(), *m, *n)?;
            decision_output(&a, spec, *m, *n, d, None)
        }
        Command::VerifyPaper {
            only,
            extended,
            budget,
        } => verify_paper(only.as_deref(), *extended, budget.resolve()?),
        Command::Ingest { check } => ingest_check(check),
    }
}

fn labelled(g: &FiniteGroup, xs: &[usize]) -> Vec<LabelledElement> {
    xs.iter()
        .map(|&x| LabelledElement {
            index: x,
            label: g.label(x).to_string(),
        })
        .collect()
}

fn label_list(g: &FiniteGroup, xs: &[usize]) -> String {
    xs.iter()
        .map(|&x| g.label(x))
        .collect::<Vec<_>>()
        .join(", ")
}

fn info(spec: &str) -> Result<Output> {
    let a = Analysis::from_spec(spec)?;
    let g = a.group();
    let series = g.derived_series();
    let primes = g.prime_divisors();
    let tp = a.twins();
    let caps = tp.capacities();
    let result = json!({
        "order": g.order(),
        "center_order": a.center_order(),
        "primes": primes,
        "abelian": g.is_abelian(),
        "nilpotent": g.is_nilpotent(),
        "solvable": series.solvable,
        "derived_length": series.derived_length,
        "derived_series_orders": series.orders(),
        "twin_classes": tp.len(),
        "capacities": caps,
        "complete_multipartite": tp.complete_multipartite(),
        "w": a.w(),
    });
    let mut text = String::new();
    let d = series
        .derived_length
        .map_or("none (not solvable)".to_string(), |d| d.to_string());
    text.push_str(&format!("group              {}\n", g.origin()));
    text.push_str(&format!("order              {}\n", g.order()));
    text.push_str(&format!("|Z(G)|             {}\n", a.center_order()));
    text.push_str(&format!("prime divisors     {primes:?}\n"));
    text.push_str(&format!("nilpotent          {}\n", g.is_nilpotent()));
    text.push_str(&format!("solvable           {}\n", series.solvable));
    text.push_str(&format!("derived length     {d}\n"));
    text.push_str(&format!("twin classes       {}\n", tp.len()));
    text.push_str(&format!("capacities         {caps:?}\n"));
    text.push_str(&format!(
        "complete multipartite {}\n",
        tp.complete_multipartite()
    ));
    text.push_str(&format!("w(G)               {}\n", a.w()));
    Ok(Output {
        group: Some(spec.to_string()),
        budget: None,
        result,
        text,
        code: EXIT_OK,
    })
}

fn clique(spec: &str) -> Result<Output> {
    let a = Analysis::from_spec(spec)?;
    let c = a.clique();
    let g = a.group();
    let result = json!({
        "w": c.w,
        "witness": labelled(g, &c.witness),
        "exhausted": c.exhausted,
    });
    let text = format!(
        "w = {}{}\nwitness: {{{}}}\n",
        c.w,
        if c.exhausted {
            " (exact)"
        } else {
            " (lower bound)"
        },
        label_list(g, &c.witness)
    );
    Ok(Output {
        group: Some(spec.to_string()),
        budget: None,
        result,
        text,
        code: EXIT_OK,
    })
}

fn checked_certificate(
    g: &FiniteGroup,
    cert: &ObstructionCert,
    m: usize,
    n: usize,
) -> Result<Vec<Vec<LabelledElement>>> {
    verify_certificate(g, cert, m, n)
        .map_err(|v| GroupError::Invariant(format!("certificate failed re-verification: {v}")))?;
    Ok(cert.labelled(g))
}

fn cert_lines(g: &FiniteGroup, cert: &ObstructionCert) -> String {
    cert.parts
        .iter()
        .enumerate()
        .map(|(i, p)| format!("  A{} = {{{}}}\n", i + 1, label_list(g, p)))
        .collect()
}

fn decision_output(
    a: &Analysis,
    spec: &str,
    m: usize,
    n: usize,
    d: Decision,
    budget: Option<SearchBudget>,
) -> Result<Output> {
    let g = a.group();
    let certificate = match &d.certificate {
        Some(c) => Some(checked_certificate(g, c, m, n)?),
        None => None,
    };
    let result = json!({
        "status": d.status,
        "m": m,
        "n": n,
        "certificate": certificate,
        "nodes": d.nodes,
    });
    let mut text = format!("{}\n", d.status);
    match d.status {
        Status::IsTmn => text.push_str(&format!("{spec} is T({m},{n}) ({} nodes)\n", d.nodes)),
        Status::NotTmn => {
            text.push_str(&format!("({m},{n})-obstruction in {spec}:\n"));
            if let Some(c) = &d.certificate {
                text.push_str(&cert_lines(g, c));
            }
        }
        Status::Unknown => text.push_str(&format!("budget exhausted after {} nodes\n", d.nodes)),
    }
    Ok(Output {
        group: Some(spec.to_string()),
        budget,
        result,
        text,
        code: if d.status == Status::Unknown {
            EXIT_UNKNOWN
        } else {
            EXIT_OK
        },
    })
}

fn spectrum_cmd(spec: &str, max_m: Option<usize>, budget: SearchBudget) -> Result<Output> {
    let a = Analysis::from_spec(spec)?;
    if let Some(m) = max_m {
        if m < 2 {
            return Err(GroupError::Parameter(format!(
                "--max-m must be at least 2, got {m}"
            )));
        }
    }
    let rows = spectrum(&a, max_m, &budget)?;
    let g = a.group();
    for r in &rows {
        if let Some(c) = &r.witness {
            checked_certificate(g, c, r.m, r.n_max)?;
        }
    }
    let entries: Vec<SpectrumEntry> = rows.iter().map(|r| SpectrumEntry::from_row(g, r)).collect();
    let exact = rows.iter().all(|r| r.exact);
    let result = json!({ "w": a.w(), "exact": exact, "spectrum": entries });
    let mut text = format!("{spec}: w = {}\n   m   N(m)\n", a.w());
    for r in &rows {
        let mark = if r.exact {
            ""
        } else {
            "  (lower bound, budget exhausted)"
        };
        text.push_str(&format!("{:>4}   {:>4}{mark}\n", r.m, r.n_max));
    }
    Ok(Output {
        group: Some(spec.to_string()),
        budget: Some(budget),
        result,
        text,
        code: if exact { EXIT_OK } else { EXIT_UNKNOWN },
    })
}

fn outcome_table(title: &str, rows: &[CheckOutcome]) -> String {
    let mut text = format!("{title}\n");
    for o in rows {
        text.push_str(&format!(
            "  {:<18} {:<28} {:<17} {}\n",
            o.group, o.check_id, o.status, o.details
        ));
    }
    text
}

fn verify_paper(only: Option<&str>, extended: bool, budget: SearchBudget) -> Result<Output> {
    let report = verify_paper_corpus(&budget, only, extended)?;
    if report.claims.is_empty() && report.checks.is_empty() {
        return Err(GroupError::Parameter(format!(
            "no claim or check matches `{}`",
            only.unwrap_or("")
        )));
    }
    let statuses = [
        CheckStatus::Pass,
        CheckStatus::Fail,
        CheckStatus::Skip,
        CheckStatus::DisputedAgree,
        CheckStatus::DisputedDisagree,
        CheckStatus::Unknown,
    ];
    let summary: serde_json::Map<String, Value> = statuses
        .iter()
        .map(|s| (s.as_str().to_string(), json!(report.count(*s))))
        .collect();
    let unknown = report.count(CheckStatus::Unknown) > 0;
    let mut text = String::new();
    if !report.claims.is_empty() {
        text.push_str(&outcome_table("claims", &report.claims));
    }
    if !report.checks.is_empty() {
        text.push_str(&outcome_table("checks", &report.checks));
    }
    let counts: Vec<String> = statuses
        .iter()
        .map(|s| format!("{} {}", report.count(*s), s))
        .collect();
    text.push_str(&format!("summary: {}\n", counts.join(", ")));
    let mut result = serde_json::to_value(&report).expect("reports serialize");
    result["summary"] = Value::Object(summary);
    Ok(Output {
        group: None,
        budget: Some(budget),
        result,
        text,
        code: if unknown { EXIT_UNKNOWN } else { EXIT_OK },
    })
}

fn ingest_check(path: &PathBuf) -> Result<Output> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: shown.clone(),
        reason: e.to_string(),
    })?;
    let first = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .find(|(_, l)| !l.is_empty());
    let (kind, group) = match first {
        Some((_, l)) if l.starts_with("order") => ("cayley", ingest_cayley(&text)?),
        Some((_, l)) if l.starts_with("degree") => ("permutation", ingest_permutations(&text)?),
        Some((line, _)) => {
            return Err(GroupError::Parse {
                line,
                reason: "expected `order <k>` or `degree <d>`".into(),
            })
        }
        None => {
            return Err(GroupError::Parse {
                line: 1,
                reason: "empty file".into(),
            })
        }
    };
    let result = json!({ "valid": true, "format": kind, "order": group.order() });
    Ok(Output {
        group: Some(shown.clone()),
        budget: None,
        result,
        text: format!(
            "{shown}: valid {kind} file, group of order {}\n",
            group.order()
        ),
        code: EXIT_OK,
    })
}
