use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use super::frame::{Element, Frame};
use super::passes;
use super::report::{Report, Status, StepReport, Summary};
use super::script::{ImageCheck, ProofScript, StepKind, WordRelation};
use super::{RunOptions, ScriptError};
use crate::action::{definition_matrix, linear_coefficients, linear_inverse, SemilinearMap};
use crate::exactfield::GaloisAut;
use crate::exprparse::{eval, parse, parse_word, render_word, Expr, Scope, SimpleScope};
use crate::grouprep::formulas;
use crate::grouprep::gn::gn_group;
use crate::multipoly::{Poly, VarSet};
use crate::ratfunc::{jacobian_rank, RatFunc, RatFuncError};

type Outcome = Result<String, String>;

pub(crate) struct Engine<'o> {
    opts: &'o RunOptions,
    frame: Frame,
    primes: BTreeSet<u64>,
    pool: Option<rayon::ThreadPool>,
}

fn expr(src: &str) -> Result<Expr, String> {
    parse(src).map_err(|e| format!("{src}: {e}"))
}

/// Leading term of the cross-multiplication residue, for failure details.
fn residue_note(lhs: &RatFunc, rhs: &RatFunc) -> String {
    match lhs.residue(rhs) {
        Ok(r) => match r.leading_term() {
            Some((m, c)) => {
                let t = Poly::monomial(r.vars(), m.clone(), c.clone());
                format!("residue leading term {t} ({} terms)", r.num_terms())
            }
            None => "residue zero".into(),
        },
        Err(e) => e.to_string(),
    }
}

impl<'o> Engine<'o> {
    pub fn new(script: &ProofScript, opts: &'o RunOptions) -> Result<Self, ScriptError> {
        let vars = VarSet::new(&script.vars).map_err(|e| ScriptError::Header(e.to_string()))?;
        let mut frame = Frame::new(vars.clone(), opts.gcd_threshold);
        let mut primes = BTreeSet::new();
        for (name, def) in &script.maps {
            let twist: GaloisAut = def.twist.parse().map_err(ScriptError::Header)?;
            let base = SimpleScope::new(&vars);
            let mut images = Vec::new();
            for src in &def.images {
                let e = expr(src).map_err(ScriptError::Header)?;
                let v = eval(&e, &base).map_err(|e| ScriptError::Header(format!("map {name}: {e}")))?;
                primes.extend(v.audit_primes());
                images.push(v);
            }
            let m = SemilinearMap::new(&vars, twist, images).map_err(|e| ScriptError::Header(e.to_string()))?;
            frame.maps.insert(name.clone(), m);
        }
        let pool = match opts.threads {
            Some(n) if n > 0 => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| ScriptError::Header(e.to_string()))?,
            ),
            _ => None,
        };
        Ok(Engine {
            opts,
            frame,
            primes,
            pool,
        })
    }

    fn par<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        match (self.opts.threads, &self.pool) {
            (Some(0), _) => items.iter().map(f).collect(),
            (_, Some(p)) => p.install(|| items.par_iter().map(&f).collect()),
            _ => items.par_iter().map(&f).collect(),
        }
    }

    pub fn run(mut self, script: &ProofScript) -> Report {
        let mut steps = Vec::new();
        let mut summary = Summary::default();
        for step in &script.steps {
            let start = Instant::now();
            let (status, detail) = if self.opts.skip.contains(&step.id) {
                (Status::Cited, "skipped".to_string())
            } else {
                self.exec(&step.kind)
            };
            match status {
                Status::Verified => summary.verified += 1,
                Status::Cited => summary.cited += 1,
                Status::Failed => summary.failed += 1,
            }
            if status == Status::Failed && matches!(step.kind, StepKind::Rebase { .. }) {
                self.frame.broken = Some(step.id.clone());
            }
            steps.push(StepReport {
                id: step.id.clone(),
                kind: step.kind.name().to_string(),
                status,
                detail,
                ms: start.elapsed().as_millis() as u64,
            });
        }
        Report {
            script: script.name.clone(),
            steps,
            summary,
            denominator_primes: self.primes.into_iter().collect(),
        }
    }

    fn exec(&mut self, kind: &StepKind) -> (Status, String) {
        let frame_free = matches!(
            kind,
            StepKind::Cited { .. } | StepKind::GroupCheck { .. } | StepKind::DenominatorAudit {}
        );
        if let (Some(id), false) = (&self.frame.broken, frame_free) {
            return (Status::Failed, format!("coordinates not established: step {id} failed"));
        }
        let out = match kind {
            StepKind::Cited { text } => return (Status::Cited, text.clone()),
            StepKind::Define { name, expr } => self.define(name, expr),
            StepKind::VerifyImage { map, checks } => self.verify_image(map, checks),
            StepKind::VerifyInvariant { maps, elements } => self.verify_invariant(maps, elements),
            StepKind::VerifyRelation { expr } => self.verify_relation(expr),
            StepKind::VerifyActionRelations { relations } => self.verify_action_relations(relations),
            StepKind::ApplyAhk {
                maps,
                var,
                base,
                candidate,
                name,
            } => self.apply_ahk(maps, var, base, candidate.as_deref(), name.as_deref()),
            StepKind::ApplyHk { maps, base, vars } => self.apply_hk(maps, base, vars),
            StepKind::ApplyYamasaki { map, x, y, a, emit } => self.apply_yamasaki(map, x, y, a, emit),
            StepKind::ApplyMasuda {
                map,
                x,
                y,
                z,
                emit,
                s1,
                claims,
            } => self.apply_masuda(map, [x, y, z], emit, s1.as_deref(), claims.as_ref()),
            StepKind::MonomialInvariantCheck { maps, vars, candidates } => self.monomial(maps, vars, candidates),
            StepKind::VerifyIndependence { elements, rank } => self.independence(elements, *rank),
            StepKind::DenominatorAudit {} => Ok(self.audit_detail()),
            StepKind::Rebase { vars, maps, inverse } => self.rebase(vars, maps.as_deref(), inverse),
            StepKind::GroupCheck { check, rep, n } => group_check(check, rep.as_deref(), *n),
        };
        match out {
            Ok(d) => (Status::Verified, d),
            Err(d) => (Status::Failed, d),
        }
    }

    fn value(&self, src: &str) -> Result<RatFunc, String> {
        eval(&expr(src)?, &self.frame).map_err(|e| format!("{src}: {e}"))
    }

    fn word_map(&self, src: &str) -> Result<SemilinearMap, String> {
        let w = parse_word(src).map_err(|e| format!("{src}: {e}"))?;
        self.frame.word(&w).map_err(|e| format!("{src}: {e}"))
    }

    fn word_maps(&self, srcs: &[String]) -> Result<Vec<SemilinearMap>, String> {
        srcs.iter().map(|s| self.word_map(s)).collect()
    }

    fn var_index(&self, name: &str) -> Result<usize, String> {
        self.frame
            .vars
            .index_of(name)
            .ok_or_else(|| format!("'{name}' is not a variable of the current coordinates ({})", self.frame.vars))
    }

    fn audit(&mut self, f: &RatFunc) {
        self.primes.extend(f.audit_primes());
    }

    fn audit_detail(&self) -> String {
        let p: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        format!("denominator primes {{{}}}", p.join(", "))
    }

    fn bind(&mut self, name: &str, source: Expr, value: RatFunc) -> Result<(), String> {
        if self.frame.vars.index_of(name).is_some() {
            return Err(format!("'{name}' clashes with a variable"));
        }
        self.audit(&value);
        self.frame.insert(name, Element { source, value });
        Ok(())
    }

    fn define(&mut self, name: &str, src: &str) -> Outcome {
        let e = expr(src)?;
        let v = eval(&e, &self.frame).map_err(|err| format!("{src}: {err}"))?;
        let terms = v.num_terms();
        self.bind(name, e, v)?;
        Ok(format!("{name} defined ({terms} terms)"))
    }

    fn verify_image(&mut self, map: &str, checks: &[ImageCheck]) -> Outcome {
        let m = self.word_map(map)?;
        let key = render_word(&parse_word(map).map_err(|e| e.to_string())?);
        let frame = &self.frame;
        let results = self.par(checks, |c| -> Result<RatFunc, String> {
            let el = eval(&expr(&c.element)?, frame).map_err(|e| e.to_string())?;
            let lhs = m.apply(&el).map_err(|e| e.to_string())?;
            let rhs = eval(&expr(&c.claim)?, frame).map_err(|e| e.to_string())?;
            if lhs.equals(&rhs) {
                Ok(rhs)
            } else {
                Err(format!("{map}({}): {}", c.element, residue_note(&lhs, &rhs)))
            }
        });
        let mut failures = Vec::new();
        for (c, r) in checks.iter().zip(results) {
            match r {
                Ok(rhs) => {
                    self.audit(&rhs);
                    self.frame
                        .records
                        .insert((key.clone(), c.element.trim().to_string()), expr(&c.claim)?);
                }
                Err(e) => failures.push(e),
            }
        }
        if failures.is_empty() {
            Ok(format!("{} image(s) under {map} verified", checks.len()))
        } else {
            Err(failures.join("; "))
        }
    }

    fn verify_invariant(&mut self, maps: &[String], elements: &[String]) -> Outcome {
        let ms = self.word_maps(maps)?;
        let frame = &self.frame;
        let pairs: Vec<(usize, usize)> = (0..ms.len())
            .flat_map(|i| (0..elements.len()).map(move |j| (i, j)))
            .collect();
        let results = self.par(&pairs, |&(i, j)| -> Result<(), String> {
            let f = eval(&expr(&elements[j])?, frame).map_err(|e| e.to_string())?;
            let g = ms[i].apply(&f).map_err(|e| e.to_string())?;
            if g.equals(&f) {
                Ok(())
            } else {
                Err(format!("{} not fixed by {}: {}", elements[j], maps[i], residue_note(&g, &f)))
            }
        });
        let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
        if failures.is_empty() {
            Ok(format!("{} element(s) fixed by {}", elements.len(), maps.join(", ")))
        } else {
            Err(failures.join("; "))
        }
    }

    fn verify_relation(&mut self, src: &str) -> Outcome {
        let v = self.value(src)?;
        if v.is_zero() {
            Ok("vanishes identically".into())
        } else {
            Err(format!("nonzero: {}", residue_note(&v, &RatFunc::zero(v.vars()))))
        }
    }

    fn verify_action_relations(&mut self, relations: &[WordRelation]) -> Outcome {
        let frame = &self.frame;
        let results = self.par(relations, |r| -> Result<(), String> {
            let l = parse_word(&r.lhs).map_err(|e| e.to_string())?;
            let rr = parse_word(&r.rhs).map_err(|e| e.to_string())?;
            let (a, b) = (frame.word(&l).map_err(|e| e.to_string())?, frame.word(&rr).map_err(|e| e.to_string())?);
            if a.equals(&b) {
                Ok(())
            } else {
                Err(format!("{} != {}", r.lhs, r.rhs))
            }
        });
        let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
        if failures.is_empty() {
            Ok(format!("{} relation(s) hold as field automorphisms", relations.len()))
        } else {
            Err(failures.join("; "))
        }
    }

    fn check_partition(&self, parts: &[usize]) -> Result<(), String> {
        let set: BTreeSet<usize> = parts.iter().copied().collect();
        if set.len() != parts.len() || set.len() != self.frame.vars.len() {
            return Err(format!(
                "base and distinguished variables must list each variable of ({}) once",
                self.frame.vars
            ));
        }
        Ok(())
    }

    fn apply_ahk(&mut self, maps: &[String], var: &str, base: &[String], candidate: Option<&str>, name: Option<&str>) -> Outcome {
        let ms = self.word_maps(maps)?;
        let x = self.var_index(var)?;
        let b: Vec<usize> = base.iter().map(|s| self.var_index(s)).collect::<Result<_, _>>()?;
        let mut all = b.clone();
        all.push(x);
        self.check_partition(&all)?;
        let cand = match candidate {
            Some(src) => Some((expr(src)?, self.value(src)?)),
            None => None,
        };
        let detail = passes::check_ahk(&ms, maps, x, &b, cand.as_ref().map(|(_, v)| v))?;
        if let (Some(n), Some((e, v))) = (name, cand) {
            self.bind(n, e, v)?;
            return Ok(format!("{detail}; {n} defined"));
        }
        Ok(detail)
    }

    fn apply_hk(&mut self, maps: &[String], base: &[String], vars: &[String]) -> Outcome {
        let ms = self.word_maps(maps)?;
        let b: Vec<usize> = base.iter().map(|s| self.var_index(s)).collect::<Result<_, _>>()?;
        let xs: Vec<usize> = vars.iter().map(|s| self.var_index(s)).collect::<Result<_, _>>()?;
        self.check_partition(&[b.clone(), xs.clone()].concat())?;
        passes::check_hk(&ms, maps, &b, &xs)
    }

    fn apply_yamasaki(&mut self, map: &str, x: &str, y: &str, a: &str, emit: &[String; 2]) -> Outcome {
        let m = self.word_map(map)?;
        let (ex, ey, ea) = (expr(x)?, expr(y)?, expr(a)?);
        let (xv, yv, av) = (self.value(x)?, self.value(y)?, self.value(a)?);
        let (eu, ev) = passes::yamasaki_exprs(&ex, &ey, &ea);
        let u = eval(&eu, &self.frame).map_err(|e| e.to_string())?;
        let v = eval(&ev, &self.frame).map_err(|e| e.to_string())?;
        let detail = passes::check_yamasaki(&m, &xv, &yv, &av, &u, &v)?;
        self.bind(&emit[0], eu, u)?;
        self.bind(&emit[1], ev, v)?;
        Ok(format!("{detail}; emitted {}, {}", emit[0], emit[1]))
    }

    fn apply_masuda(
        &mut self,
        map: &str,
        triple: [&String; 3],
        emit: &[String; 2],
        s1: Option<&str>,
        claims: Option<&[String; 2]>,
    ) -> Outcome {
        let m = self.word_map(map)?;
        let es: Vec<Expr> = triple.iter().map(|s| expr(s)).collect::<Result<_, _>>()?;
        let vs: Vec<RatFunc> = triple.iter().map(|s| self.value(s)).collect::<Result<_, _>>()?;
        let (eu, ev, es1) = passes::masuda_exprs(&es[0], &es[1], &es[2]);
        let u = eval(&eu, &self.frame).map_err(|e| format!("degenerate input: {e}"))?;
        let v = eval(&ev, &self.frame).map_err(|e| format!("degenerate input: {e}"))?;
        let mut detail = passes::check_masuda(&m, [&vs[0], &vs[1], &vs[2]], &u, &v)?;
        if let Some([cu, cv]) = claims {
            for (label, got, src) in [(&emit[0], &u, cu), (&emit[1], &v, cv)] {
                let want = self.value(src)?;
                if !got.equals(&want) {
                    return Err(format!("{label} differs from the claimed form: {}", residue_note(got, &want)));
                }
                self.audit(&want);
            }
            detail.push_str("; outputs match the claimed forms");
        }
        self.bind(&emit[0], eu, u)?;
        self.bind(&emit[1], ev, v)?;
        if let Some(n) = s1 {
            let s = eval(&es1, &self.frame).map_err(|e| e.to_string())?;
            self.bind(n, es1, s)?;
        }
        Ok(format!("{detail}; emitted {}, {}", emit[0], emit[1]))
    }

    fn monomial(&mut self, maps: &[String], vars: &[String], candidates: &[String]) -> Outcome {
        let ms = self.word_maps(maps)?;
        let idx: Vec<usize> = vars.iter().map(|s| self.var_index(s)).collect::<Result<_, _>>()?;
        let cs: Vec<RatFunc> = candidates.iter().map(|s| self.value(s)).collect::<Result<_, _>>()?;
        passes::check_monomial(&ms, maps, &idx, &cs)
    }

    fn independence(&mut self, elements: &[String], rank: usize) -> Outcome {
        let fs: Vec<RatFunc> = elements.iter().map(|s| self.value(s)).collect::<Result<_, _>>()?;
        let r = jacobian_rank(&fs, &self.frame.vars);
        if r == rank {
            Ok(format!("jacobian rank {r}"))
        } else {
            Err(format!("jacobian rank {r}, expected {rank}"))
        }
    }

    fn rebase(&mut self, names: &[String], carry: Option<&[String]>, inverse: &std::collections::BTreeMap<String, String>) -> Outcome {
        let old = &self.frame;
        let new_vars = VarSet::new(names).map_err(|e| e.to_string())?;
        let defs: Vec<RatFunc> = names
            .iter()
            .map(|n| old.lookup(n).ok_or_else(|| format!("unknown name '{n}'")))
            .collect::<Result<_, _>>()?;
        let rank = jacobian_rank(&defs, &old.vars);
        if rank != names.len() {
            return Err(format!("new coordinates are dependent (jacobian rank {rank})"));
        }

        // old variable -> expression in the new variables, where known
        let mut inv: Vec<Option<RatFunc>> = vec![None; old.vars.len()];
        let bare = SimpleScope::new(&new_vars);
        for (oname, src) in inverse {
            let j = old
                .vars
                .index_of(oname)
                .ok_or_else(|| format!("inverse given for '{oname}', which is not a variable"))?;
            let f = eval(&expr(src)?, &bare).map_err(|e| format!("{src}: {e}"))?;
            let back = f.substitute(&defs).map_err(|e| e.to_string())?;
            if !back.equals(&RatFunc::var(&old.vars, j)) {
                return Err(format!("inverse for {oname} does not invert the definitions"));
            }
            inv[j] = Some(f);
        }
        for (i, d) in defs.iter().enumerate() {
            if let Some(j) = (0..old.vars.len()).find(|&j| *d == RatFunc::var(&old.vars, j)) {
                if inv[j].is_none() {
                    inv[j] = Some(RatFunc::var(&new_vars, i));
                }
            }
        }
        let linear = if inverse.is_empty()
            && defs.len() == old.vars.len()
            && defs.iter().all(|d| linear_coefficients(d).is_some())
        {
            let m = definition_matrix(&defs).map_err(|e| e.to_string())?;
            let li = linear_inverse(&new_vars, &defs).map_err(|e| e.to_string())?;
            for (j, f) in li.into_iter().enumerate() {
                inv[j] = Some(f);
            }
            Some(m)
        } else {
            None
        };

        // elements that do not need maps can already be carried
        let mut next = Frame::new(new_vars.clone(), old.gcd_threshold);
        carry_elements(old, &mut next);

        let entries: Vec<(String, String)> = match carry {
            Some(list) => list
                .iter()
                .map(|e| match e.split_once('=') {
                    Some((n, w)) => (n.trim().to_string(), w.trim().to_string()),
                    None => (e.trim().to_string(), e.trim().to_string()),
                })
                .collect(),
            None => old.maps.keys().map(|k| (k.clone(), k.clone())).collect(),
        };
        let (mut claimed, mut derived) = (0, 0);
        let mut new_maps = Vec::new();
        for (new_name, word) in &entries {
            let w = parse_word(word).map_err(|e| e.to_string())?;
            let key = render_word(&w);
            let m = old.word(&w).map_err(|e| format!("{word}: {e}"))?;
            let by_matrix = match (&linear, m.linear_matrix()) {
                (Some(mat), Some(_)) => Some(m.change_coordinates_matrix(&new_vars, mat).map_err(|e| e.to_string())?),
                _ => None,
            };
            let mut images = Vec::new();
            for (i, n) in names.iter().enumerate() {
                // a claim mentioning names that do not survive is derived instead
                if let Some(Ok(v)) = old.records.get(&(key.clone(), n.clone())).map(|c| eval(c, &next)) {
                    images.push(v);
                    claimed += 1;
                    continue;
                }
                if let Some(bm) = &by_matrix {
                    images.push(bm.images()[i].clone());
                    derived += 1;
                    continue;
                }
                let img = m.apply(&defs[i]).map_err(|e| e.to_string())?;
                images.push(transport(&img, &inv, &new_vars).map_err(|e| format!("{word}({n}): {e}"))?);
                derived += 1;
            }
            let nm = SemilinearMap::new(&new_vars, m.twist(), images).map_err(|e| e.to_string())?;
            new_maps.push((new_name.clone(), nm));
        }
        for (n, m) in new_maps {
            for f in m.images() {
                self.primes.extend(f.audit_primes());
            }
            next.maps.insert(n, m);
        }
        next.clear_env();
        carry_elements(&self.frame, &mut next);
        let carried = next.env.len();
        self.frame = next;
        Ok(format!(
            "coordinates {}; {} map(s), {claimed} image(s) from verified claims, {derived} derived; {carried} element(s) carried",
            new_vars,
            entries.len()
        ))
    }
}

/// Re-evaluates the old frame's elements in the new one, keeping those that
/// still make sense there.
fn carry_elements(old: &Frame, next: &mut Frame) {
    for (name, el) in &old.env {
        if next.vars.index_of(name).is_some() {
            continue;
        }
        if let Ok(v) = eval(&el.source, &*next) {
            next.insert(
                name,
                Element {
                    source: el.source.clone(),
                    value: v,
                },
            );
        }
    }
}

/// Rewrites `f` in the new variables. Old variables without an inverse
/// must not occur; they are specialised to a constant once that is checked.
fn transport(f: &RatFunc, inv: &[Option<RatFunc>], new_vars: &VarSet) -> Result<RatFunc, String> {
    for (j, e) in inv.iter().enumerate() {
        if e.is_none() && !f.derivative_at(j).is_zero() {
            return Err(format!("image involves {}, which the new coordinates do not express", f.vars().name(j)));
        }
    }
    for c in 1..=16 {
        let images: Vec<RatFunc> = inv
            .iter()
            .map(|e| e.clone().unwrap_or_else(|| RatFunc::from_int(new_vars, c)))
            .collect();
        match f.substitute(&images) {
            Ok(g) => return Ok(g),
            Err(RatFuncError::DegenerateSubstitution) => continue,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err("no admissible specialisation of the dropped variables".into())
}

fn group_check(check: &str, rep: Option<&str>, n: Option<usize>) -> Outcome {
    let rep_name = || -> Result<&'static str, String> {
        let r = rep.ok_or("missing 'rep'")?;
        formulas::resolve_representation(r).ok_or(format!("unknown representation '{r}'"))
    };
    let gens = |name: &str| formulas::literal(name).ok_or(format!("no matrices for {name}"));
    match check {
        "presentation" => {
            let name = rep_name()?;
            let bad: Vec<&str> = formulas::verify_presentation(&gens(name)?)
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(r, _)| r)
                .collect();
            if bad.is_empty() {
                Ok(format!("{name}: all defining relations hold"))
            } else {
                Err(format!("{name}: failing relations {}", bad.join(", ")))
            }
        }
        "restriction" => {
            let name = rep_name()?;
            let computed = formulas::computed(name).map_err(|e| e.to_string())?;
            if computed == gens(name)? {
                Ok(format!("{name}: restriction of scalars reproduces the matrices entrywise"))
            } else {
                Err(format!("{name}: restriction of scalars differs from the listed matrices"))
            }
        }
        "closure" => {
            let name = rep_name()?;
            let g = formulas::closure_of(&gens(name)?).map_err(|e| e.to_string())?;
            let center = g.center().len();
            if g.order() == 48 && center == 2 {
                Ok(format!("{name}: order 48, center of order 2"))
            } else {
                Err(format!("{name}: order {}, center of order {center}", g.order()))
            }
        }
        "quotient" => {
            let name = rep_name()?;
            let g = formulas::closure_of(&gens(name)?).map_err(|e| e.to_string())?;
            let q = formulas::quotient_check(&g, &formulas::s4_projection());
            let minus = g.index_of(&g.identity().neg());
            let ok = q.is_homomorphism && q.kernel.len() == 2 && minus.is_some_and(|k| q.kernel.contains(&k));
            if ok {
                Ok(format!("{name}: onto S4 with kernel {{1, -1}}"))
            } else {
                Err(format!("{name}: projection to S4 fails (kernel size {})", q.kernel.len()))
            }
        }
        "gn_representation" => {
            let n = n.ok_or("missing 'n'")?;
            let g = gn_group(n).map_err(|e| e.to_string())?;
            let fact: usize = (1..=n).product();
            if g.group.order() == 2 * fact && g.is_faithful() && g.parity_invariant_holds() {
                Ok(format!("n = {n}: well defined on a group of order {}, kernel trivial", g.group.order()))
            } else {
                Err(format!("n = {n}: order {}, faithful {}", g.group.order(), g.is_faithful()))
            }
        }
        "gn_character" => {
            let n = n.ok_or("missing 'n'")?;
            let g = gn_group(n).map_err(|e| e.to_string())?;
            let lhs = g.uv_character().map_err(|e| e.to_string())?;
            let rhs = g.w_plus_wprime_character();
            match (0..lhs.len()).find(|&i| lhs[i] != rhs[i]) {
                None => Ok(format!("n = {n}: characters agree on all {} elements", lhs.len())),
                Some(i) => Err(format!(
                    "n = {n}: characters differ at {}: {} vs {}",
                    g.group.word_string(i),
                    lhs[i],
                    rhs[i]
                )),
            }
        }
        other => Err(format!("unknown group check '{other}'")),
    }
}
