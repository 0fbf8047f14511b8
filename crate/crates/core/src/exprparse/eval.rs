use thiserror::Error;

use super::{BinOp, Expr, MapWord, NamedConst};
use crate::action::{ActionError, SemilinearMap};
use crate::exactfield::CycloElement;
use crate::multipoly::VarSet;
use crate::ratfunc::{RatFunc, RatFuncError, DEFAULT_GCD_THRESHOLD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown name '{0}'")]
    UnknownName(String),
    #[error("unknown map '{0}'")]
    UnknownMap(String),
    #[error("division by the zero function")]
    DivisionByZero,
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Where names, maps and the ambient variables come from.
pub trait Scope {
    fn vars(&self) -> &VarSet;

    /// A named element's ambient value; variables are resolved afterwards.
    fn element(&self, name: &str) -> Option<RatFunc>;

    fn map(&self, name: &str) -> Option<SemilinearMap>;

    fn gcd_threshold(&self) -> usize {
        DEFAULT_GCD_THRESHOLD
    }

    /// Largest order tried when inverting a non-linear map.
    fn max_order(&self) -> usize {
        64
    }

    fn word(&self, w: &MapWord) -> Result<SemilinearMap, EvalError> {
        let mut acc = SemilinearMap::identity(self.vars());
        for (name, e) in w {
            let m = self.map(name).ok_or_else(|| EvalError::UnknownMap(name.clone()))?;
            acc = acc.compose(&m.pow(*e, self.max_order())?)?;
        }
        Ok(acc)
    }
}

fn constant(c: NamedConst) -> CycloElement {
    match c {
        NamedConst::Zeta => CycloElement::zeta(),
        NamedConst::I => CycloElement::sqrtm1(),
        NamedConst::Sqrt2 => CycloElement::sqrt2(),
        NamedConst::Sqrtm2 => CycloElement::sqrtm2(),
    }
}

pub fn eval<S: Scope + ?Sized>(e: &Expr, scope: &S) -> Result<RatFunc, EvalError> {
    let vars = scope.vars();
    let t = scope.gcd_threshold();
    Ok(match e {
        Expr::Int(n) => RatFunc::constant(vars, CycloElement::from_rational(n.clone().into())),
        Expr::Const(c) => RatFunc::constant(vars, constant(*c)),
        Expr::Name(n) => match scope.element(n) {
            Some(f) => f,
            None => match vars.index_of(n) {
                Some(i) => RatFunc::var(vars, i),
                None => return Err(EvalError::UnknownName(n.clone())),
            },
        },
        Expr::Neg(a) => -&eval(a, scope)?,
        Expr::Bin(op, a, b) => {
            let (x, y) = (eval(a, scope)?, eval(b, scope)?);
            let r = match op {
                BinOp::Add => x.try_add(&y)?,
                BinOp::Sub => x.try_sub(&y)?,
                BinOp::Mul => x.try_mul(&y)?,
                BinOp::Div => {
                    if y.is_zero() {
                        return Err(EvalError::DivisionByZero);
                    }
                    x.try_div(&y)?
                }
            };
            r.reduce_with(t)
        }
        Expr::Pow(a, k) => {
            let x = eval(a, scope)?;
            if *k < 0 && x.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            x.pow(*k)?.reduce_with(t)
        }
        Expr::Apply(w, a) => {
            let m = scope.word(w)?;
            m.apply(&eval(a, scope)?)?.reduce_with(t)
        }
    })
}

/// A scope backed by plain maps.
#[derive(Clone)]
pub struct SimpleScope {
    pub vars: VarSet,
    pub elements: std::collections::HashMap<String, RatFunc>,
    pub maps: std::collections::HashMap<String, SemilinearMap>,
}

impl SimpleScope {
    pub fn new(vars: &VarSet) -> Self {
        SimpleScope {
            vars: vars.clone(),
            elements: Default::default(),
            maps: Default::default(),
        }
    }

    /// Evaluates `src` and binds the result to `name`.
    pub fn define(&mut self, name: &str, src: &str) -> Result<RatFunc, String> {
        let e = super::parse(src).map_err(|e| e.to_string())?;
        let v = eval(&e, self).map_err(|e| e.to_string())?;
        self.elements.insert(name.to_string(), v.clone());
        Ok(v)
    }
}

impl Scope for SimpleScope {
    fn vars(&self) -> &VarSet {
        &self.vars
    }

    fn element(&self, name: &str) -> Option<RatFunc> {
        self.elements.get(name).cloned()
    }

    fn map(&self, name: &str) -> Option<SemilinearMap> {
        self.maps.get(name).cloned()
    }
}
