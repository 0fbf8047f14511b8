//! Proof scripts: parsing, execution against the current coordinates, and
//! the structured report.

mod engine;
mod frame;
mod passes;
mod report;
mod script;

#[cfg(test)]
mod tests;

use std::collections::BTreeSet;

use thiserror::Error;

pub use passes::{
    affine_coefficient, check_ahk, check_hk, check_masuda, check_monomial, check_yamasaki, laurent_exponents,
    map_closure, masuda_exprs, yamasaki_exprs,
};
pub use report::{Report, Status, StepReport, Summary};
pub use script::{ImageCheck, MapDef, ProofScript, Step, StepKind, WordRelation};

use crate::exprparse::ParseError;
use crate::ratfunc::DEFAULT_GCD_THRESHOLD;

#[derive(Debug, Error)]
pub enum ScriptError {
    #[error("malformed script: {0}")]
    Json(String),
    #[error("bad header: {0}")]
    Header(String),
    #[error("duplicate step id '{0}'")]
    DuplicateId(String),
    #[error("step {step}: cannot parse '{src}': {err}")]
    Expr { step: String, src: String, err: ParseError },
    #[error("no bundled script named '{0}'")]
    UnknownBundled(String),
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Cited steps count as failures for the overall result.
    pub strict_cited: bool,
    /// Step ids reported as cited without running.
    pub skip: BTreeSet<String>,
    pub gcd_threshold: usize,
    /// `None` uses the global pool, `Some(0)` runs sequentially.
    pub threads: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            strict_cited: false,
            skip: BTreeSet::new(),
            gcd_threshold: DEFAULT_GCD_THRESHOLD,
            threads: None,
        }
    }
}

impl RunOptions {
    /// Defaults, with the thread count taken from `OCTAVERIFY_THREADS`.
    pub fn from_env() -> Self {
        RunOptions {
            threads: std::env::var("OCTAVERIFY_THREADS").ok().and_then(|s| s.trim().parse().ok()),
            ..Default::default()
        }
    }
}

pub fn run(script: &ProofScript, opts: &RunOptions) -> Result<Report, ScriptError> {
    script.validate()?;
    Ok(engine::Engine::new(script, opts)?.run(script))
}

pub fn run_json(src: &str, opts: &RunOptions) -> Result<Report, ScriptError> {
    run(&ProofScript::from_json(src)?, opts)
}

pub const BUNDLED: [(&str, &str); 8] = [
    ("case1", include_str!("../../scripts/case1.json")),
    ("case2", include_str!("../../scripts/case2.json")),
    ("case3", include_str!("../../scripts/case3.json")),
    ("case4-stub", include_str!("../../scripts/case4-stub.json")),
    ("thm52-n3", include_str!("../../scripts/thm52-n3.json")),
    ("thm52-n4", include_str!("../../scripts/thm52-n4.json")),
    ("thm53-n3", include_str!("../../scripts/thm53-n3.json")),
    ("thm53-n4", include_str!("../../scripts/thm53-n4.json")),
];

pub fn bundled(name: &str) -> Result<ProofScript, ScriptError> {
    let (_, src) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| ScriptError::UnknownBundled(name.to_string()))?;
    ProofScript::from_json(src)
}
