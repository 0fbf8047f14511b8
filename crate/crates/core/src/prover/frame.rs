use std::collections::{BTreeMap, HashMap};

use crate::action::SemilinearMap;
use crate::exprparse::{Expr, Scope};
use crate::multipoly::VarSet;
use crate::ratfunc::RatFunc;

/// A named element: its defining expression and its value in the frame.
#[derive(Clone)]
pub(crate) struct Element {
    pub source: Expr,
    pub value: RatFunc,
}

/// Current coordinates: the ambient variables, the maps acting on them, the
/// named elements and the images verified so far.
#[derive(Clone)]
pub(crate) struct Frame {
    pub vars: VarSet,
    pub maps: BTreeMap<String, SemilinearMap>,
    pub env: Vec<(String, Element)>,
    index: HashMap<String, usize>,
    /// (map word, element) → verified claim.
    pub records: HashMap<(String, String), Expr>,
    /// Set when the step that should have produced this frame failed.
    pub broken: Option<String>,
    pub gcd_threshold: usize,
}

impl Frame {
    pub fn new(vars: VarSet, gcd_threshold: usize) -> Self {
        Frame {
            vars,
            maps: BTreeMap::new(),
            env: Vec::new(),
            index: HashMap::new(),
            records: HashMap::new(),
            broken: None,
            gcd_threshold,
        }
    }

    pub fn insert(&mut self, name: &str, el: Element) {
        match self.index.get(name) {
            Some(&k) => self.env[k].1 = el,
            None => {
                self.index.insert(name.to_string(), self.env.len());
                self.env.push((name.to_string(), el));
            }
        }
    }

    pub fn clear_env(&mut self) {
        self.env.clear();
        self.index.clear();
    }

    /// Element or variable by name.
    pub fn lookup(&self, name: &str) -> Option<RatFunc> {
        self.element(name)
            .or_else(|| self.vars.index_of(name).map(|i| RatFunc::var(&self.vars, i)))
    }
}

impl Scope for Frame {
    fn vars(&self) -> &VarSet {
        &self.vars
    }

    fn element(&self, name: &str) -> Option<RatFunc> {
        self.index.get(name).map(|&k| self.env[k].1.value.clone())
    }

    fn map(&self, name: &str) -> Option<SemilinearMap> {
        self.maps.get(name).cloned()
    }

    fn gcd_threshold(&self) -> usize {
        self.gcd_threshold
    }
}
