use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn octaverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octaverify"))
        .args(args)
        .env("OCTAVERIFY_THREADS", "0")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

/// (id, status) pairs from the text table.
fn text_statuses(out: &str) -> Vec<(String, String)> {
    out.lines()
        .filter(|l| l.starts_with("  "))
        .map(|l| {
            let mut w = l.split_whitespace();
            let st = w.next().unwrap().to_string();
            (w.next().unwrap().to_string(), st)
        })
        .collect()
}

#[test]
fn list_names_every_script() {
    let o = octaverify(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["case1", "case2", "case3", "case4-stub", "thm52-n3", "thm52-n4", "thm53-n3", "thm53-n4"] {
        assert!(out.contains(name), "{name}");
    }
    assert!(out.contains("3.5"));
}

#[test]
fn verify_case2_text() {
    let o = octaverify(&["verify", "--bundled", "case2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = text_statuses(&stdout(&o));
    assert_eq!(rows.len(), 76);
    for id in ["V-relation", "w-relation", "masuda-X", "yamasaki-v"] {
        assert!(rows.contains(&(id.to_string(), "verified".to_string())), "{id}");
    }
    assert!(stdout(&o).contains("0 failed; denominator primes {2}"));
}

#[test]
fn text_and_json_agree() {
    let path = scratch("case2-report.json");
    let p = path.to_str().unwrap();
    let j = octaverify(&["verify", "--bundled", "case2", "--format", "json", "--json-report", p]);
    assert_eq!(j.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&j)).unwrap();
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report, file);

    let t = octaverify(&["verify", "--bundled", "case2"]);
    let rows = text_statuses(&stdout(&t));
    let steps = report["steps"].as_array().unwrap();
    assert_eq!(rows.len(), steps.len());
    for ((id, st), s) in rows.iter().zip(steps) {
        assert_eq!(id, s["id"].as_str().unwrap());
        assert_eq!(st, s["status"].as_str().unwrap());
    }
    assert_eq!(report["denominator_primes"], serde_json::json!([2]));
}

#[test]
fn strict_cited_exits_one() {
    let o = octaverify(&["verify", "--bundled", "case1", "--strict-cited"]);
    assert_eq!(o.status.code(), Some(1));
    let o = octaverify(&["verify", "--bundled", "case1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn skipped_steps_are_reported_as_cited() {
    let o = octaverify(&["verify", "--bundled", "case1", "--skip", "ahk-x,cite-luroth", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ahk = r["steps"].as_array().unwrap().iter().find(|s| s["id"] == "ahk-x").unwrap();
    assert_eq!(ahk["status"], "cited");
    assert_eq!(r["summary"]["cited"], 3);
    assert_eq!(r["summary"]["failed"], 0);
}

#[test]
fn failing_script_exits_one_with_residue() {
    let path = scratch("false-relation.json");
    std::fs::write(
        &path,
        r#"{"name": "t", "vars": ["x", "y"], "steps": [
            {"id": "ok", "kind": "verify_relation", "expr": "(x+y)^2 - x^2 - 2*x*y - y^2"},
            {"id": "bad", "kind": "verify_relation", "expr": "(x+y)^2 - x^2 - y^2"}
        ]}"#,
    )
    .unwrap();
    let o = octaverify(&["verify", "--script", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let rows = text_statuses(&stdout(&o));
    assert_eq!(rows, [("ok".into(), "verified".into()), ("bad".into(), "failed".into())]);
    assert!(stdout(&o).contains("residue leading term"));
}

#[test]
fn script_errors_exit_two() {
    let path = scratch("malformed.json");
    std::fs::write(&path, r#"{"name": "t"}"#).unwrap();
    let o = octaverify(&["verify", "--script", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("docs/script.schema.json"));

    let o = octaverify(&["verify", "--bundled", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("case2"));

    let o = octaverify(&["verify", "--script", scratch("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(octaverify(&["verify"]).status.code(), Some(2));
    assert_eq!(octaverify(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(octaverify(&["group", "h7"]).status.code(), Some(2));
    assert_eq!(octaverify(&["rep", "9.9"]).status.code(), Some(2));
}

#[test]
fn group_s4hat() {
    let o = octaverify(&["group", "s4hat"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("order: 48"));
    assert!(out.contains("center size: 2"));
    assert!(!out.contains("FAILS"));
    assert!(out.contains("kernel size: 2"));
    // transpositions lift to elements of order 4 only
    assert!(out.contains("[2] -> {4}"), "{out}");
    assert!(out.contains("[4] -> {8}"), "{out}");
}

#[test]
fn group_g4() {
    let o = octaverify(&["group", "g4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("order: 48"));
    assert!(out.contains("faithful 2n-dimensional representation: true"));
}

#[test]
fn rep_check() {
    for id in ["3.5", "two_dim", "3.2"] {
        let o = octaverify(&["rep", id, "--check"]);
        assert_eq!(o.status.code(), Some(0), "{id}");
        let out = stdout(&o);
        assert!(out.contains("presentation verified"), "{id}");
        assert!(out.contains("restriction of scalars matches"), "{id}");
    }
}
