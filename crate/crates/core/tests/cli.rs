use std::io::Write;
use std::process::{Command, Output};

fn tmn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tmn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn ingest(text: &str) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    tmn(&["ingest", "--check", f.path().to_str().unwrap()])
}

#[test]
fn ingest_error_classes() {
    let cases = [
        ("error:parse:", "order 2\n0 x\n1 0\n"),
        ("error:latin-square:", "order 2\n0 1\n1 1\n"),
        (
            "error:associativity:",
            "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n",
        ),
    ];
    for (prefix, text) in cases {
        let o = ingest(text);
        assert_eq!(o.status.code(), Some(2), "{prefix}");
        assert!(stderr(&o).starts_with(prefix), "{}", stderr(&o));
    }
}

#[test]
fn ingest_accepts_permutations() {
    let o = ingest("degree 7\n2 3 4 5 6 7 1\n2 4 6 1 3 5 7\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("order 21"));
}

#[test]
fn usage_and_spec_errors_exit_2() {
    let o = tmn(&["decide", "S:3", "-m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:usage:"));
    let o = tmn(&["info", "Z:9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:spec:"));
    let o = tmn(&["decide", "S:3", "-m", "1", "-n", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = tmn(&["decide", "A:5", "-m", "16", "-n", "3", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("UNKNOWN"));
}

#[test]
fn decide_json_carries_certificate() {
    let o = tmn(&["--json", "decide", "S:3", "-m", "2", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["status"], "NOT_TMN");
    let cert = v["result"]["certificate"].as_array().unwrap();
    assert_eq!(cert.len(), 2);
    assert!(cert.iter().all(|p| p.as_array().unwrap().len() == 2));
}

#[test]
fn oracle_refuses_large_instances() {
    let o = tmn(&["oracle", "A:5", "-m", "2", "-n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:instance-too-large:"));
}
