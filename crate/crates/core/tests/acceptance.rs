//! Acceptance suite: one PASS/FAIL line per criterion, with a wall-clock
//! limit where one applies. Exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use octaverify_core::exactfield::CycloElement;
use octaverify_core::grouprep::formulas::{self, REPRESENTATIONS};
use octaverify_core::grouprep::gn::gn_group;
use octaverify_core::grouprep::Matrix;
use octaverify_core::prover::{self, Report, RunOptions, Status};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use serde_json::{json, Value};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn replay(name: &str) -> Report {
    let script = prover::bundled(name).expect("bundled script");
    prover::run(&script, &RunOptions::default()).expect("script runs")
}

fn cached(name: &str) -> &'static Report {
    static CACHE: OnceLock<std::sync::Mutex<BTreeMap<String, &'static Report>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(name) {
        return r;
    }
    let r: &'static Report = Box::leak(Box::new(replay(name)));
    cache.lock().unwrap().insert(name.to_string(), r);
    r
}

fn all_green(r: &Report, required: &[&str]) -> Result<(), String> {
    ensure(r.summary.failed == 0, || {
        let bad: Vec<&str> = r.steps.iter().filter(|s| s.status == Status::Failed).map(|s| s.id.as_str()).collect();
        format!("{}: failed steps {}", r.script, bad.join(", "))
    })?;
    for id in required {
        let st = r.step(id).map(|s| s.status);
        ensure(st == Some(Status::Verified), || format!("{}: {id} is {st:?}", r.script))?;
    }
    Ok(())
}

fn detail<'a>(r: &'a Report, id: &str) -> &'a str {
    r.step(id).map_or("", |s| s.detail.as_str())
}

fn c1_presentation() -> Outcome {
    let gens = formulas::two_dim();
    for (rel, ok) in formulas::verify_presentation(&gens) {
        ensure(ok, || format!("{rel} fails"))?;
    }
    let g = formulas::closure_of(&gens).map_err(|e| e.to_string())?;
    ensure(g.order() == 48, || format!("closure has {} elements", g.order()))?;
    let center: Vec<&Matrix> = g.center().iter().map(|&i| g.element(i)).collect();
    let id = Matrix::identity(2);
    ensure(center.len() == 2 && center.contains(&&id) && center.contains(&&id.neg()), || {
        format!("center has {} elements", center.len())
    })?;
    Ok("9 relations, order 48, center {I, -I}".into())
}

fn c2_quotient() -> Outcome {
    let g = formulas::closure_of(&formulas::two_dim()).map_err(|e| e.to_string())?;
    let proj = formulas::s4_projection();
    let names: Vec<String> = proj.iter().map(|p| p.to_string()).collect();
    ensure(names == ["(1,2,3,4)", "(1,4)(2,3)", "(1,2,3)"], || format!("generator images {names:?}"))?;
    let q = formulas::quotient_check(&g, &proj);
    ensure(q.is_homomorphism, || "generator images do not extend".into())?;
    let kernel: Vec<&Matrix> = q.kernel.iter().map(|&i| g.element(i)).collect();
    let id = Matrix::identity(2);
    ensure(kernel.len() == 2 && kernel.contains(&&id) && kernel.contains(&&id.neg()), || "kernel is not {I, -I}".into())?;
    let imgs: BTreeSet<_> = q.images.iter().collect();
    ensure(imgs.len() == 24, || format!("image has {} elements", imgs.len()))?;

    let table = formulas::lift_orders(&g, &q.images);
    let (mut transp, mut double) = (0, 0);
    for (p, orders) in &table {
        match p.cycle_type().as_slice() {
            [2] => {
                transp += 1;
                ensure(orders == &[4, 4], || format!("{p} lifts to {orders:?}"))?;
            }
            [2, 2] => {
                double += 1;
                ensure(orders == &[4, 4], || format!("{p} lifts to {orders:?}"))?;
            }
            _ => {}
        }
    }
    ensure(transp == 6 && double == 3, || format!("{transp} transpositions, {double} double transpositions"))?;

    let g4 = gn_group(4).map_err(|e| e.to_string())?;
    let by_type = formulas::lift_orders_by_type(&formulas::lift_orders(&g4.group, &g4.projections()));
    let want = |t: &[usize], o: &[usize]| by_type.get(t).map(|s| s.iter().copied().collect::<Vec<_>>()) == Some(o.to_vec());
    ensure(want(&[2], &[4]), || format!("G4 transpositions lift to {:?}", by_type.get(&vec![2])))?;
    ensure(want(&[2, 2], &[2]), || format!("G4 double transpositions lift to {:?}", by_type.get(&vec![2, 2])))?;
    Ok("kernel {I, -I}; 6 transpositions and 3 double transpositions lift to order 4; G4: 4 and 2".into())
}

fn c3_restriction() -> Outcome {
    for (name, alias, _) in &REPRESENTATIONS[1..] {
        let lit = formulas::literal(name).ok_or_else(|| format!("no literal for {name}"))?;
        let got = formulas::computed(name).map_err(|e| e.to_string())?;
        for (g, a, b) in [("aprime", &lit.aprime, &got.aprime), ("b", &lit.b, &got.b), ("c", &lit.c, &got.c)] {
            ensure(a == b, || format!("{alias} {g}: computed matrix differs"))?;
        }
    }
    Ok("3.2, 3.3, 3.4 and 3.5 equal entrywise".into())
}

const CASE2_STEPS: &[&str] = &[
    "y-images-aprime", "y-images-b", "y-images-c", "y-images-rho", "y-images-aprime2", "z-images-b", "monomial-u",
    "yamasaki-v", "X3-fixed-c", "masuda-X", "X-images-aprime", "X-images-rho", "g1-image-rho", "define-Aprime",
    "Z-images-rho", "U-fixed-rho", "U-relation", "V-relation", "w-relation", "w-rank",
];

fn c4_case2() -> Outcome {
    let r = cached("case2");
    all_green(r, CASE2_STEPS)?;
    ensure(detail(r, "monomial-u").contains("index 1"), || detail(r, "monomial-u").into())?;
    ensure(detail(r, "yamasaki-v").contains("u and v are fixed"), || detail(r, "yamasaki-v").into())?;
    ensure(detail(r, "masuda-X").contains("outputs match the claimed forms"), || detail(r, "masuda-X").into())?;
    ensure(detail(r, "w-rank") == "jacobian rank 3", || detail(r, "w-rank").into())?;
    Ok(format!("{} verified, {} cited, 0 failed", r.summary.verified, r.summary.cited))
}

fn c5_case3() -> Outcome {
    let r = cached("case3");
    all_green(
        r,
        &[
            "y-images-aprime", "y-images-b", "y-images-c", "y-images-rho", "X-images-aprime", "X-images-rho",
            "define-C", "Z-images-rho", "U-relation", "V-relation", "w-relation", "U-rank", "V-rank", "w-rank",
        ],
    )?;
    let script = prover::bundled("case3").unwrap();
    let x3 = serde_json::to_value(&script).unwrap()["steps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["id"] == "X-images-aprime")
        .map(|s| s["checks"][2]["claim"].clone());
    ensure(x3 == Some(json!("-X3")), || format!("X3 claim {x3:?}"))?;
    Ok(format!("{} verified, {} cited, 0 failed", r.summary.verified, r.summary.cited))
}

fn c6_gn(n: usize) -> Outcome {
    let g = gn_group(n).map_err(|e| e.to_string())?;
    ensure(g.group.words_consistent(), || "labeled closure is inconsistent".into())?;
    ensure(g.is_faithful(), || format!("kernel has {} elements", g.kernel().len()))?;
    let uv = g.uv_character().map_err(|e| e.to_string())?;
    let ww: Vec<CycloElement> = g.w_plus_wprime_character();
    ensure(uv == ww, || "characters differ".into())?;
    let r52 = replay(&format!("thm52-n{n}"));
    all_green(&r52, &["gn-representation", "gn-character", "w-fixed-tau", "w-image-sigma", "ahk-w"])?;
    let r53 = replay(&format!("thm53-n{n}"));
    all_green(&r53, &["masuda-X", "X-images-sigma", "hk-X"])?;
    Ok(format!(
        "order {}, faithful, characters agree; thm52 {} verified, thm53 {} verified",
        g.group.order(),
        r52.summary.verified,
        r53.summary.verified
    ))
}

fn run_value(v: &Value) -> Report {
    prover::run_json(&v.to_string(), &RunOptions::default()).expect("script runs")
}

fn c7_passes() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let strat = (-1000i64..1000, 1i64..1000).prop_filter("nonzero", |(p, _)| *p != 0);
    for _ in 0..50 {
        let (p, q) = strat.new_tree(&mut runner).unwrap().current();
        let a = format!("({p})/{q}");
        let script = json!({
            "name": "yamasaki", "vars": ["x", "y"],
            "maps": {"s": {"twist": "id", "images": [format!("{a}/x"), format!("{a}/y")]}},
            "steps": [{"id": "y", "kind": "apply_yamasaki", "map": "s", "x": "x", "y": "y", "a": a, "emit": ["u", "v"]},
                      {"id": "fixed", "kind": "verify_invariant", "maps": ["s"], "elements": ["u", "v"]}]
        });
        let r = run_value(&script);
        ensure(r.summary.failed == 0, || format!("a = {p}/{q}: {}", detail(&r, "y")))?;
    }
    let masuda = json!({
        "name": "masuda", "vars": ["x", "y", "z"],
        "maps": {"c": {"twist": "id", "images": ["y", "z", "x"]}},
        "steps": [{"id": "m", "kind": "apply_masuda", "map": "c", "x": "x", "y": "y", "z": "z", "emit": ["u", "v"]},
                  {"id": "fixed", "kind": "verify_invariant", "maps": ["c"], "elements": ["u", "v"]}]
    });
    let r = run_value(&masuda);
    ensure(r.summary.failed == 0 && !detail(&r, "m").contains("extended"), || detail(&r, "m").into())?;
    let ahk = json!({
        "name": "ahk", "vars": ["x", "y"],
        "maps": {"s": {"twist": "id", "images": ["x/(x+y)", "y"]}},
        "steps": [{"id": "a", "kind": "apply_ahk", "maps": ["s"], "var": "x", "base": ["y"]}]
    });
    let r = run_value(&ahk);
    ensure(r.summary.failed == 1 && detail(&r, "a").contains("not affine"), || detail(&r, "a").into())?;
    Ok("Yamasaki fixed for 50 random a; Masuda fixed on the generic cycle; AHK rejects x -> x/(x+y)".into())
}

fn c8_primes() -> Outcome {
    let mut out = Vec::new();
    for name in ["case2", "case3"] {
        let primes = &cached(name).denominator_primes;
        ensure(primes.iter().all(|p| *p == 2 || *p == 3), || format!("{name}: primes {primes:?}"))?;
        out.push(format!("{name} {primes:?}"));
    }
    Ok(out.join(", "))
}

/// Every way to flip one sign of a formula: each binary `+`/`-` swapped, each
/// unary minus dropped, and a leading minus added when there is none.
/// Exponent signs are left alone.
fn sign_flips(src: &str) -> Vec<String> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    if b.first() != Some(&b'-') {
        out.push(format!("-{src}"));
    }
    for (k, &ch) in b.iter().enumerate() {
        if ch != b'+' && ch != b'-' {
            continue;
        }
        let prev = src[..k].trim_end().bytes().last();
        if matches!(prev, Some(b'^')) || (prev == Some(b'(') && k >= 2 && src[..k - 1].trim_end().ends_with('^')) {
            continue;
        }
        let unary = matches!(prev, None | Some(b'(') | Some(b'*') | Some(b'/') | Some(b','));
        let mut s = src.to_string();
        if unary {
            s.remove(k);
        } else {
            s.replace_range(k..=k, if ch == b'+' { "-" } else { "+" });
        }
        out.push(s);
    }
    out
}

fn mutate(script: &Value, step: &str, path: &[&str], new: &str) -> Value {
    let mut v = script.clone();
    let s = v["steps"].as_array_mut().unwrap().iter_mut().find(|s| s["id"] == step).unwrap();
    let mut slot = s;
    for p in path {
        slot = match p.parse::<usize>() {
            Ok(i) => &mut slot[i],
            Err(_) => &mut slot[*p],
        };
    }
    *slot = Value::String(new.into());
    v
}

fn c9_mutations() -> Outcome {
    let mut count = 0;
    for case in ["case2", "case3"] {
        let script = serde_json::to_value(prover::bundled(case).unwrap()).unwrap();
        let base = cached(case);
        let step_of = |id: &str| script["steps"].as_array().unwrap().iter().find(|s| s["id"] == id).unwrap().clone();
        let mut targets: Vec<(String, Vec<String>, String)> = Vec::new();
        let vrel = step_of("V-relation")["expr"].as_str().unwrap().to_string();
        targets.push(("V-relation".into(), vec!["expr".into()], vrel));
        for (k, c) in step_of("y-images-rho")["checks"].as_array().unwrap().iter().enumerate() {
            let claim = c["claim"].as_str().unwrap().to_string();
            targets.push(("y-images-rho".into(), vec!["checks".into(), k.to_string(), "claim".into()], claim));
        }
        for (step, path, src) in &targets {
            let path: Vec<&str> = path.iter().map(String::as_str).collect();
            for flipped in sign_flips(src) {
                let r = run_value(&mutate(&script, step, &path, &flipped));
                count += 1;
                let changed: Vec<&str> = r
                    .steps
                    .iter()
                    .zip(&base.steps)
                    .filter(|(a, b)| a.status != b.status)
                    .map(|(a, _)| a.id.as_str())
                    .collect();
                ensure(changed == [step.as_str()], || format!("{case} {step} '{flipped}': changed {changed:?}"))?;
                let d = detail(&r, step);
                ensure(d.contains("residue leading term") && !d.contains("leading term 0"), || {
                    format!("{case} {step} '{flipped}': {d}")
                })?;
            }
        }
    }
    Ok(format!("{count} single-sign mutants, each fails exactly its own step with a residue"))
}

fn main() {
    type Check = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(u8, &str, Option<u64>, Check)> = vec![
        (1, "presentation, closure and center", Some(5), Box::new(c1_presentation)),
        (2, "quotient onto S4 and lift orders", Some(5), Box::new(c2_quotient)),
        (3, "restriction of scalars", Some(1), Box::new(c3_restriction)),
        (4, "case2 replay", Some(300), Box::new(c4_case2)),
        (5, "case3 replay", Some(300), Box::new(c5_case3)),
        (6, "G3 representation and scripts", Some(60), Box::new(|| c6_gn(3))),
        (6, "G4 representation and scripts", Some(60), Box::new(|| c6_gn(4))),
        (7, "Yamasaki, Masuda and AHK checks", None, Box::new(c7_passes)),
        (8, "denominator primes within {2, 3}", None, Box::new(c8_primes)),
        (9, "single-sign mutations are isolated", None, Box::new(c9_mutations)),
    ];
    let mut failed = 0;
    for (n, name, limit, check) in criteria {
        let t = Instant::now();
        let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let out = match (out, limit) {
            (Ok(_), Some(l)) if took > Duration::from_secs(l) => Err(format!("over the {l} s limit")),
            (o, _) => o,
        };
        let lim = limit.map_or(String::new(), |l| format!(" (limit {l} s)"));
        let (tag, msg) = match out {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("{tag} {n} {name}: {:.2} s{lim}; {msg}", took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criterion check(s) failed");
        std::process::exit(1);
    }
}
