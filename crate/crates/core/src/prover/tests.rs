use proptest::prelude::*;

use super::*;
use crate::action::SemilinearMap;
use crate::exactfield::{CycloElement, GaloisAut, Rational};
use crate::multipoly::VarSet;
use crate::ratfunc::RatFunc;

fn run_bundled(name: &str) -> Report {
    run(&bundled(name).unwrap(), &RunOptions::default()).unwrap()
}

fn run_src(src: &str) -> Report {
    run_json(src, &RunOptions::default()).unwrap()
}

fn status(r: &Report, id: &str) -> Status {
    r.step(id).unwrap_or_else(|| panic!("no step {id}")).status
}

/// Bundled script with one payload string replaced.
fn patched(name: &str, from: &str, to: &str) -> String {
    let src = BUNDLED.iter().find(|(n, _)| *n == name).unwrap().1;
    assert!(src.contains(from), "{from} not in {name}");
    src.replacen(from, to, 1)
}

const XY: &str = r#""name": "t", "vars": ["x", "y"]"#;

#[test]
fn empty_script() {
    let r = run_src(r#"{"name": "empty", "vars": ["x"], "maps": {}, "steps": []}"#);
    assert!(r.steps.is_empty());
    assert_eq!(r.summary, Summary::default());
    assert!(r.denominator_primes.is_empty());
}

#[test]
fn malformed_scripts_are_script_errors() {
    let opts = RunOptions::default();
    assert!(matches!(run_json("{", &opts), Err(ScriptError::Json(_))));
    let dup = format!(
        r#"{{{XY}, "maps": {{}}, "steps": [{{"id": "a", "kind": "cited", "text": ""}}, {{"id": "a", "kind": "cited", "text": ""}}]}}"#
    );
    assert!(matches!(run_json(&dup, &opts), Err(ScriptError::DuplicateId(_))));
    let bad = format!(r#"{{{XY}, "maps": {{}}, "steps": [{{"id": "a", "kind": "define", "name": "f", "expr": "x +"}}]}}"#);
    assert!(matches!(run_json(&bad, &opts), Err(ScriptError::Expr { .. })));
    let twist = format!(r#"{{{XY}, "maps": {{"m": {{"twist": "j2", "images": ["x", "y"]}}}}, "steps": []}}"#);
    assert!(matches!(run_json(&twist, &opts), Err(ScriptError::Header(_))));
    assert!(matches!(bundled("nope"), Err(ScriptError::UnknownBundled(_))));
}

#[test]
fn unknown_names_fail_the_step_only() {
    let src = format!(
        r#"{{{XY}, "maps": {{}}, "steps": [
            {{"id": "a", "kind": "define", "name": "f", "expr": "g + 1"}},
            {{"id": "b", "kind": "verify_relation", "expr": "x - x"}}]}}"#
    );
    let r = run_src(&src);
    assert_eq!(status(&r, "a"), Status::Failed);
    assert_eq!(status(&r, "b"), Status::Verified);
}

#[test]
fn case2_replays() {
    let r = run_bundled("case2");
    assert_eq!(r.summary.failed, 0, "{r}");
    for id in ["X-images-aprime", "X-images-rho", "g1-image-rho", "Z-images-rho", "V-relation", "w-relation"] {
        assert_eq!(status(&r, id), Status::Verified);
    }
    assert!(r.step("w-rank").unwrap().detail.contains("rank 3"));
    assert!(r.step("U-rank").unwrap().detail.contains("rank 3"));
}

#[test]
fn case3_replays() {
    let r = run_bundled("case3");
    assert_eq!(r.summary.failed, 0, "{r}");
    for id in ["U-relation", "V-relation", "w-relation", "X-images-aprime", "Z-images-rho"] {
        assert_eq!(status(&r, id), Status::Verified);
    }
}

#[test]
fn remaining_scripts_replay() {
    for name in ["case1", "case4-stub", "thm52-n3", "thm52-n4", "thm53-n3", "thm53-n4"] {
        let r = run_bundled(name);
        assert_eq!(r.summary.failed, 0, "{r}");
        assert!(r.summary.cited > 0);
    }
}

#[test]
fn perturbed_relation_leaves_b() {
    let src = patched("case2", "V3^2+V4^2+2*B", "V3^2+V4^2+3*B");
    let r = run_src(&src);
    let step = r.step("V-relation").unwrap();
    assert_eq!(step.status, Status::Failed);
    assert!(step.detail.contains("residue leading term"), "{}", step.detail);
    assert_eq!(r.summary.failed, 1);
    // what is left over is exactly B
    let check = patched("case2", "V3^2+V4^2+2*B", "V3^2+V4^2+3*B - B");
    assert_eq!(status(&run_src(&check), "V-relation"), Status::Verified);
}

#[test]
fn rho_image_mutation_is_isolated() {
    let src = BUNDLED.iter().find(|(n, _)| *n == "case2").unwrap().1;
    let mut doc: serde_json::Value = serde_json::from_str(src).unwrap();
    let step = doc["steps"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|s| s["id"] == "y-images-rho")
        .unwrap();
    assert_eq!(step["checks"][1]["claim"], "i*y3");
    step["checks"][1]["claim"] = "-i*y3".into();
    let r = run_src(&doc.to_string());
    assert_eq!(status(&r, "y-images-rho"), Status::Failed);
    assert_eq!(r.summary.failed, 1, "{r}");
}

#[test]
fn failed_rebase_blocks_dependent_steps() {
    let src = format!(
        r#"{{{XY}, "maps": {{}}, "steps": [
            {{"id": "d", "kind": "define", "name": "s", "expr": "x + y"}},
            {{"id": "d2", "kind": "define", "name": "s2", "expr": "2*x + 2*y"}},
            {{"id": "r", "kind": "rebase", "vars": ["s", "s2"]}},
            {{"id": "v", "kind": "verify_relation", "expr": "s - s2/2"}},
            {{"id": "c", "kind": "cited", "text": "still recorded"}}]}}"#
    );
    let r = run_src(&src);
    assert_eq!(status(&r, "r"), Status::Failed);
    assert_eq!(status(&r, "v"), Status::Failed);
    assert_eq!(status(&r, "c"), Status::Cited);
}

#[test]
fn skipped_steps_are_cited() {
    let mut opts = RunOptions::default();
    opts.skip.insert("ahk-x".into());
    let r = run(&bundled("case1").unwrap(), &opts).unwrap();
    let s = r.step("ahk-x").unwrap();
    assert_eq!((s.status, s.detail.as_str()), (Status::Cited, "skipped"));
}

#[test]
fn strict_cited_downgrades() {
    let r = run_bundled("case1");
    assert!(r.success(false));
    assert!(!r.success(true));
}

#[test]
fn reports_are_deterministic() {
    let a = run_bundled("thm53-n3").without_timings();
    let b = run(&bundled("thm53-n3").unwrap(), &RunOptions { threads: Some(0), ..Default::default() })
        .unwrap()
        .without_timings();
    assert_eq!(a, b);
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn integer_scripts_have_no_denominator_primes() {
    let src = format!(
        r#"{{{XY}, "maps": {{"s": {{"twist": "id", "images": ["y", "x"]}}}}, "steps": [
            {{"id": "d", "kind": "define", "name": "f", "expr": "x^2 + 3*x*y + y^2"}},
            {{"id": "i", "kind": "verify_invariant", "maps": ["s"], "elements": ["f"]}},
            {{"id": "a", "kind": "denominator_audit"}}]}}"#
    );
    let r = run_src(&src);
    assert_eq!(r.summary.verified, 3);
    assert!(r.denominator_primes.is_empty());
}

#[test]
fn independence_of_a_square() {
    let src = r#"{"name": "t", "vars": ["x1"], "maps": {}, "steps": [
        {"id": "r", "kind": "verify_independence", "elements": ["x1", "x1^2"], "rank": 1}]}"#;
    assert_eq!(status(&run_src(src), "r"), Status::Verified);
}

fn xy() -> VarSet {
    VarSet::new(&["x", "y"]).unwrap()
}

fn xyz() -> VarSet {
    VarSet::new(&["x", "y", "z"]).unwrap()
}

fn parsed(vars: &VarSet, src: &str) -> RatFunc {
    crate::exprparse::eval(&crate::exprparse::parse(src).unwrap(), &crate::exprparse::SimpleScope::new(vars)).unwrap()
}

fn yamasaki_at(a: Rational) -> Result<String, String> {
    let v = xy();
    let ac = RatFunc::constant(&v, CycloElement::from_rational(a));
    let (x, y) = (RatFunc::var(&v, 0), RatFunc::var(&v, 1));
    let m = SemilinearMap::new(&v, GaloisAut::ID, vec![ac.try_div(&x).unwrap(), ac.try_div(&y).unwrap()]).unwrap();
    let num_u = x.try_sub(&y).unwrap();
    let u = num_u.try_div(&ac.try_sub(&x.try_mul(&y).unwrap()).unwrap()).unwrap();
    let v2 = x.try_add(&y).unwrap().try_div(&ac.try_add(&x.try_mul(&y).unwrap()).unwrap()).unwrap();
    check_yamasaki(&m, &x, &y, &ac, &u, &v2)
}

#[test]
fn yamasaki_at_two() {
    assert!(yamasaki_at(Rational::from_integer(2.into())).is_ok());
}

#[test]
fn yamasaki_rejects_identity() {
    let v = xy();
    let one = RatFunc::one(&v);
    let (x, y) = (RatFunc::var(&v, 0), RatFunc::var(&v, 1));
    let err = check_yamasaki(&SemilinearMap::identity(&v), &x, &y, &one, &x, &y).unwrap_err();
    assert!(err.contains("pattern mismatch"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn yamasaki_outputs_fixed(n in -40i64..40, d in 1i64..12) {
        prop_assume!(n != 0);
        prop_assert!(yamasaki_at(Rational::new(n.into(), d.into())).is_ok());
    }
}

fn three_cycle() -> SemilinearMap {
    let v = xyz();
    SemilinearMap::new(&v, GaloisAut::ID, vec![RatFunc::var(&v, 1), RatFunc::var(&v, 2), RatFunc::var(&v, 0)]).unwrap()
}

#[test]
fn masuda_generic_cycle() {
    let v = xyz();
    let (x, y, z) = (RatFunc::var(&v, 0), RatFunc::var(&v, 1), RatFunc::var(&v, 2));
    let (eu, ev, _) = masuda_exprs(
        &crate::exprparse::Expr::name("x"),
        &crate::exprparse::Expr::name("y"),
        &crate::exprparse::Expr::name("z"),
    );
    let scope = crate::exprparse::SimpleScope::new(&v);
    let u = crate::exprparse::eval(&eu, &scope).unwrap();
    let w = crate::exprparse::eval(&ev, &scope).unwrap();
    let detail = check_masuda(&three_cycle(), [&x, &y, &z], &u, &w).unwrap();
    assert!(!detail.contains("extended"));
    let at = u.substitute(&[RatFunc::one(&v), RatFunc::zero(&v), RatFunc::zero(&v)]).unwrap();
    assert!(at.is_zero());
}

#[test]
fn masuda_rejects_a_transposition() {
    let v = xyz();
    let (x, y, z) = (RatFunc::var(&v, 0), RatFunc::var(&v, 1), RatFunc::var(&v, 2));
    let swap = SemilinearMap::new(&v, GaloisAut::ID, vec![y.clone(), x.clone(), z.clone()]).unwrap();
    let err = check_masuda(&swap, [&x, &y, &z], &x, &y).unwrap_err();
    assert!(err.contains("cycle"));
}

#[test]
fn ahk_rejects_non_affine_action() {
    let v = xy();
    let m = SemilinearMap::new(&v, GaloisAut::ID, vec![parsed(&v, "x/(x+y)"), parsed(&v, "y")]).unwrap();
    let err = check_ahk(&[m], &["sigma".to_string()], 0, &[1], None).unwrap_err();
    assert!(err.contains("sigma") && err.contains("not affine"), "{err}");
}

#[test]
fn ahk_rejects_unfixed_candidate() {
    let v = xy();
    let m = SemilinearMap::new(&v, GaloisAut::ID, vec![parsed(&v, "-x"), parsed(&v, "y")]).unwrap();
    let names = ["s".to_string()];
    assert!(check_ahk(&[m.clone()], &names, 0, &[1], Some(&parsed(&v, "x*y"))).is_err());
    assert!(check_ahk(&[m], &names, 0, &[1], Some(&parsed(&v, "x^2"))).is_err());
}

#[test]
fn monomial_index_cases() {
    let v = xyz();
    let b = SemilinearMap::new(&v, GaloisAut::ID, vec![parsed(&v, "-x"), parsed(&v, "-y"), parsed(&v, "z")]).unwrap();
    let names = ["b".to_string()];
    let c = |s: &[&str]| s.iter().map(|e| parsed(&v, e)).collect::<Vec<_>>();
    assert!(check_monomial(&[b.clone()], &names, &[0, 1, 2], &c(&["x/y", "x*y", "z"])).is_ok());
    let err = check_monomial(&[b], &names, &[0, 1, 2], &c(&["x^2", "y^2", "z"])).unwrap_err();
    assert!(err.contains("index 2"), "{err}");
    let id = SemilinearMap::identity(&v);
    assert!(check_monomial(&[id], &names, &[0, 1, 2], &c(&["x", "y", "z"])).is_ok());
}

#[test]
fn monomial_rejects_non_sign_action() {
    let v = xy();
    let s = SemilinearMap::new(&v, GaloisAut::ID, vec![parsed(&v, "y"), parsed(&v, "x")]).unwrap();
    assert!(check_monomial(&[s], &["s".to_string()], &[0, 1], &[parsed(&v, "x*y")]).is_err());
}
