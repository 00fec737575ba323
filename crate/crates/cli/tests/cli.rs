use std::process::{Command, Output};

use serde_json::Value;

fn ncinvert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncinvert"))
        .args(args)
        .env_remove("NCINVERT_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn char_text() {
    let o = ncinvert(&["char", "--family", "classic", "--n", "2", "--q"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "S[2] + q·S[1,1]\n");
    let o = ncinvert(&["char", "--family", "classic", "--n", "0"]);
    assert_eq!(stdout(&o), "1\n");
    let o = ncinvert(&["char", "--n", "3"]);
    assert_eq!(stdout(&o), "S[3] + 2·S[2,1] + S[1,2] + S[1,1,1]\n");
}

#[test]
fn char_arithmetic_family() {
    let o = ncinvert(&["char", "--family", "k,l=3,2", "--n", "2", "--q", "--basis", "S"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1 + q^2)·S[2] + (q + q^2 + 2q^3 + 2q^4 + q^5)·S[1,1]\n");
    let o = ncinvert(&["char", "--family", "r=2", "--n", "1"]);
    assert_eq!(stdout(&o), "2·S[1]\n");
}

#[test]
fn char_json_round_trips() {
    let o = ncinvert(&["char", "--n", "3", "--q", "--basis", "R", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], "R");
    let e: ncinvert_core::NcsfElement = serde_json::from_value(v).unwrap();
    assert_eq!(
        e.to_string(),
        "(1 + q + 2q^2 + q^3)·R[3] + (q + q^2 + q^3)·R[2,1] + (q^2 + q^3)·R[1,2] + q^3·R[1,1,1]"
    );
}

#[test]
fn solve_report() {
    let o = ncinvert(&["solve", "--eq", "g", "--degree", "3"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equation"], "g");
    assert_eq!(v["N"], 3);
    assert_eq!(v["basis"], "S");
    assert_eq!(v["components"].as_array().unwrap().len(), 4);
    let sums = v["checksums"].as_array().unwrap();
    assert_eq!(sums.len(), 4);
    assert!(sums.iter().all(|s| s.as_str().unwrap().len() == 64));
    let again = ncinvert(&["solve", "--eq", "g", "--degree", "3"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn solve_text() {
    let o = ncinvert(&["solve", "--eq", "K", "--degree", "4", "--format", "text"]);
    let out = stdout(&o);
    assert!(out.contains("K[3] = q^4·S[2] + q^3·S[1,1]\n"), "{out}");
    assert!(out.contains("K[4] = q^7·S[3] + (q^5 + q^6)·S[2,1] + q^5·S[1,2] + q^4·S[1,1,1]\n"));
    let o = ncinvert(&["solve", "--eq", "b=2", "--degree", "3", "--format", "text"]);
    assert!(stdout(&o).contains("S[3] + 4·S[2,1] + 3·S[1,2] + 12·S[1,1,1]"));
    let o = ncinvert(&[
        "solve", "--eq", "g", "--degree", "3", "--basis", "L", "--format", "text",
    ]);
    assert!(stdout(&o).contains("g[3] = L[3] - 3·L[2,1] - 2·L[1,2] + 5·L[1,1,1]"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["solve", "--eq", "zz", "--degree", "2"][..],
        &["char", "--n", "2", "--basis", "X"],
        &["char", "--family", "k,l=0,1", "--n", "2"],
        &["gamma", "--composition", "2,0,1"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
    ] {
        let o = ncinvert(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_and_overrides() {
    let o = ncinvert(&["solve", "--eq", "g", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
    let o = ncinvert(&["--cap", "9", "solve", "--eq", "g", "--degree", "9", "--format", "text"]);
    assert!(o.status.success());
    assert!(stderr(&o).starts_with("warning:"));
    let o = Command::new(env!("CARGO_BIN_EXE_ncinvert"))
        .args(["char", "--n", "4"])
        .env("NCINVERT_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning:"));
}

#[test]
fn triangles_csv() {
    let o = ncinvert(&["triangle", "--b", "0", "--rows", "4"]);
    assert_eq!(stdout(&o), "1,1\n2,1,1\n3,2,2,1\n4,5,5,3,1\n");
    let o = ncinvert(&["triangle", "--kind", "motzkin", "--rows", "3"]);
    assert_eq!(stdout(&o), "0,1\n1,1\n2,1,1\n3,1,2,1\n");
    let o = ncinvert(&["triangle", "--b", "-1", "--rows", "4"]);
    assert_eq!(stdout(&o), "1,1\n2,1\n3,1,1\n4,1,2,1\n");
}

#[test]
fn gamma_outputs() {
    let o = ncinvert(&["gamma", "--composition", "2,1"]);
    assert_eq!(
        stdout(&o),
        "digraph \"Gamma_21\" {\n  v0 [label=\"(2,.,1,.)\"];\n  v1 [label=\"(2,1,.,.)\"];\n  v1 -> v0 [label=\"2\"];\n}\n"
    );
    let o = ncinvert(&["gamma", "--composition", "3,3,1", "--format", "certificate"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["conjugate"], serde_json::json!([2, 1, 2, 1, 1]));
}

#[test]
fn abel_and_specialize() {
    let o = ncinvert(&["abel", "--n", "2"]);
    assert_eq!(stdout(&o), "x·S[2] + ((1/2)x + (1/2)x^2)·S[1,1]\n");
    let o = ncinvert(&["abel", "--n", "2", "--at-one"]);
    assert_eq!(stdout(&o), "(3/2)x + (1/2)x^2\n");
    let o = ncinvert(&["specialize", "--eq", "g", "--degree", "4", "--to", "commutative"]);
    assert!(stdout(&o).ends_with("g[4] -> h[4] + 4·h[3,1] + 2·h[2,2] + 6·h[2,1,1] + h[1,1,1,1]\n"));
    let o = ncinvert(&["specialize", "--eq", "g", "--degree", "3", "--to", "binomial=1"]);
    assert!(stdout(&o).ends_with("g[3] -> 5x^3\n"));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let a = ncinvert(&["verify", "--suite", "oracles", "--max-degree", "5", "--jobs", "1"]);
    let b = ncinvert(&["verify", "--suite", "oracles", "--max-degree", "5", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["suite"] == "oracles"));
}

#[test]
fn verify_suites() {
    let o = ncinvert(&["verify", "--suite", "paper-tables"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = ncinvert(&["verify", "--suite", "all", "--max-degree", "0"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["bound"] == 0 && c.get("millis").is_none()));
    let o = ncinvert(&["verify", "--suite", "involutions", "--timings"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["millis"].is_u64()));
}
