//! The files under docs/ stay in sync with the code: schemas, golden
//! reports and the coverage manifest.

mod common;

use std::collections::BTreeSet;

use common::{docs_dir, load_json, schema};
use octaverify_core::prover::{self, Report, RunOptions, Status, BUNDLED};
use serde_json::{json, Value};

fn replay_all() -> Vec<(String, Report)> {
    BUNDLED
        .iter()
        .map(|(name, _)| {
            let script = prover::bundled(name).unwrap();
            let report = prover::run(&script, &RunOptions::default()).unwrap();
            (name.to_string(), report.without_timings())
        })
        .collect()
}

#[test]
fn bundled_scripts_match_schema() {
    let s = load_json(&docs_dir().join("script.schema.json"));
    for (name, src) in BUNDLED {
        let v: Value = serde_json::from_str(src).unwrap();
        schema::validate(&s, &v).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn schema_rejects_what_the_loader_rejects() {
    let s = load_json(&docs_dir().join("script.schema.json"));
    let base = json!({"name": "t", "vars": ["x"], "steps": []});
    assert!(schema::validate(&s, &base).is_ok());
    let bad = [
        json!({"name": "t", "vars": ["x"]}),
        json!({"name": "t", "vars": ["x"], "steps": [], "extra": 1}),
        json!({"name": "t", "vars": ["x"], "steps": [{"id": "a", "kind": "nope"}]}),
        json!({"name": "t", "vars": ["x"], "steps": [{"id": "a", "kind": "define", "name": "f"}]}),
        json!({"name": "t", "vars": ["x"], "steps": [{"id": "a", "kind": "cited", "text": "t", "x": 1}]}),
    ];
    for b in bad {
        assert!(schema::validate(&s, &b).is_err(), "{b}");
        assert!(prover::run_json(&b.to_string(), &RunOptions::default()).is_err(), "{b}");
    }
}

#[test]
fn golden_reports() {
    let schema = load_json(&docs_dir().join("report.schema.json"));
    let bless = std::env::var_os("OCTAVERIFY_BLESS").is_some();
    let dir = docs_dir().join("golden");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, report) in replay_all() {
        let text = report.to_json() + "\n";
        let v: Value = serde_json::from_str(&text).unwrap();
        schema::validate(&schema, &v).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.summary.failed, 0, "{name}");
        let path = dir.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("{} missing; rerun with OCTAVERIFY_BLESS=1", path.display()));
        let want: Report = serde_json::from_str(&want).unwrap();
        for (a, b) in want.steps.iter().zip(&report.steps) {
            assert_eq!(a, b, "{name}: step {}", a.id);
        }
        assert_eq!(want, report, "{name}");
    }
}

#[test]
fn coverage_anchors_resolve() {
    let manifest = load_json(&docs_dir().join("coverage.json"));
    let anchors = manifest["anchors"].as_array().unwrap();
    assert!(!anchors.is_empty());
    let mut seen_anchor = BTreeSet::new();
    let mut seen_step = BTreeSet::new();
    for a in anchors {
        let anchor = a["anchor"].as_str().unwrap();
        let script = a["script"].as_str().unwrap();
        let step = a["step"].as_str().unwrap();
        assert!(seen_anchor.insert(anchor), "duplicate anchor {anchor}");
        assert!(seen_step.insert((script, step)), "{script}/{step} claimed twice");
        let s = prover::bundled(script).unwrap_or_else(|_| panic!("{anchor}: no script {script}"));
        let hits = s.steps.iter().filter(|x| x.id == step).count();
        assert_eq!(hits, 1, "{anchor}: {script}/{step}");
        let cited = s.steps.iter().any(|x| x.id == step && x.kind.name() == "cited");
        assert_eq!(cited, anchor.ends_with("(cited)"), "{anchor}");
    }
}

#[test]
fn golden_statuses_match_anchors() {
    let manifest = load_json(&docs_dir().join("coverage.json"));
    for a in manifest["anchors"].as_array().unwrap() {
        let path = docs_dir().join("golden").join(format!("{}.json", a["script"].as_str().unwrap()));
        let Ok(src) = std::fs::read_to_string(&path) else { continue };
        let r: Report = serde_json::from_str(&src).unwrap();
        let st = r.step(a["step"].as_str().unwrap()).unwrap().status;
        assert_ne!(st, Status::Failed, "{}", a["anchor"]);
    }
}
