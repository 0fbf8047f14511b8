//! Formula DSL: parser, renderer and evaluator.
//!
//! ```text
//! expr  = term { ("+" | "-") term } ;
//! term  = unary { ("*" | "/") unary } ;
//! unary = "-" unary | power ;
//! power = atom [ "^" exponent ] ;
//! atom  = integer | name | "apply" "(" word "," expr ")" | "(" expr ")" ;
//! ```

mod eval;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use eval::{eval, EvalError, Scope, SimpleScope};
pub use parse::{parse, parse_word};

/// Surd constants with reserved names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConst {
    Zeta,
    I,
    Sqrt2,
    Sqrtm2,
}

impl NamedConst {
    pub fn name(self) -> &'static str {
        match self {
            NamedConst::Zeta => "zeta",
            NamedConst::I => "i",
            NamedConst::Sqrt2 => "sqrt2",
            NamedConst::Sqrtm2 => "sqrtm2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "zeta" => NamedConst::Zeta,
            "i" => NamedConst::I,
            "sqrt2" => NamedConst::Sqrt2,
            "sqrtm2" => NamedConst::Sqrtm2,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

/// A product of named maps with integer exponents, applied right to left
/// like function composition: `a*b` means apply `b` first.
pub type MapWord = Vec<(String, i64)>;

pub fn render_word(w: &MapWord) -> String {
    if w.is_empty() {
        return "id".to_string();
    }
    w.iter()
        .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Const(NamedConst),
    /// A variable or named element; resolved at evaluation time.
    Name(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Apply(MapWord, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl Expr {
    pub fn name(s: &str) -> Expr {
        Expr::Name(s.to_string())
    }

    pub fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    /// Names referenced anywhere in the tree, in first-seen order.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Name(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Apply(_, e) => e.collect_names(out),
            Expr::Bin(_, a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            Expr::Int(_) | Expr::Const(_) => {}
        }
    }

    // 1: sum, 2: product, 3: unary minus, 4: power, 5: atom
    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(op, _, _) => op.prec(),
            Expr::Neg(_) => 3,
            Expr::Pow(_, _) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Const(c) => write!(f, "{}", c.name()),
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)
            }
            Expr::Bin(op, a, b) => {
                a.fmt_prec(f, op.prec())?;
                write!(f, "{}", op.symbol())?;
                // left associative: a right operand of equal precedence needs parentheses
                b.fmt_prec(f, op.prec() + 1)
            }
            Expr::Pow(e, k) => {
                e.fmt_prec(f, 5)?;
                write!(f, "^{k}")
            }
            Expr::Apply(w, e) => {
                write!(f, "apply({}, ", render_word(w))?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
