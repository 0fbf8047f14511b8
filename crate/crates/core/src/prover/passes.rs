//! Hypothesis checks for the cited theorems, on plain maps and functions.

use num_bigint::BigInt;

use crate::action::SemilinearMap;
use crate::exprparse::{BinOp, Expr};
use crate::grouprep::lattice::{lattice_index, rank_mod2};
use crate::multipoly::Poly;
use crate::ratfunc::{jacobian_rank, polynomial_matrix_rank, RatFunc};

fn free_of(f: &RatFunc, i: usize) -> bool {
    f.derivative_at(i).is_zero()
}

/// Coefficient `a` of `f = a·x + b` when `f` is affine in variable `x`
/// over the other variables.
pub fn affine_coefficient(f: &RatFunc, x: usize) -> Option<RatFunc> {
    let a = f.derivative_at(x);
    free_of(&a, x).then_some(a)
}

fn map_label(k: usize, names: &[String]) -> String {
    names.get(k).cloned().unwrap_or_else(|| format!("#{k}"))
}

/// Hypotheses of the affine-action theorem for `L(x)` with `L` generated by
/// the `base` variables: every map keeps `L` and sends `x` to `a·x + b` with
/// `a ≠ 0`; an optional candidate must be of degree one in `x` and fixed.
pub fn check_ahk(
    maps: &[SemilinearMap],
    names: &[String],
    x: usize,
    base: &[usize],
    candidate: Option<&RatFunc>,
) -> Result<String, String> {
    for (k, m) in maps.iter().enumerate() {
        let label = map_label(k, names);
        let vars = m.vars();
        for &b in base {
            if !free_of(&m.images()[b], x) {
                return Err(format!("{label} does not preserve the base: image of {} involves {}", vars.name(b), vars.name(x)));
            }
        }
        match affine_coefficient(&m.images()[x], x) {
            Some(a) if !a.is_zero() => {}
            Some(_) => return Err(format!("{label} sends {} to an element of the base", vars.name(x))),
            None => return Err(format!("{label} is not affine in {}: {}", vars.name(x), m.images()[x])),
        }
    }
    if let Some(c) = candidate {
        match affine_coefficient(c, x) {
            Some(a) if !a.is_zero() => {}
            _ => return Err("candidate is not of degree one in the distinguished variable".into()),
        }
        for (k, m) in maps.iter().enumerate() {
            let img = m.apply(c).map_err(|e| e.to_string())?;
            if !img.equals(c) {
                return Err(format!("candidate is not fixed by {}", map_label(k, names)));
            }
        }
        return Ok("hypotheses hold; candidate is fixed and of degree one".into());
    }
    Ok("hypotheses hold".into())
}

/// Finite group generated by `gens`, by composition up to `cap` elements.
pub fn map_closure(gens: &[SemilinearMap], cap: usize) -> Option<Vec<SemilinearMap>> {
    let vars = gens.first()?.vars().clone();
    let mut elems = vec![SemilinearMap::identity(&vars)];
    let mut frontier = 0;
    while frontier < elems.len() {
        let e = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let p = e.compose(g).ok()?;
            if !elems.iter().any(|q| q.equals(&p)) {
                if elems.len() >= cap {
                    return None;
                }
                elems.push(p);
            }
        }
    }
    Some(elems)
}

/// Hypotheses of the linear-action theorem for `L(x₁..xₙ)`: each map keeps
/// `L`, acts on the `xs` by an invertible affine substitution over `L`, and
/// the group acts faithfully on `L`.
pub fn check_hk(maps: &[SemilinearMap], names: &[String], base: &[usize], xs: &[usize]) -> Result<String, String> {
    let Some(first) = maps.first() else {
        return Err("no maps".into());
    };
    let vars = first.vars().clone();
    for (k, m) in maps.iter().enumerate() {
        let label = map_label(k, names);
        for &b in base {
            if xs.iter().any(|&x| !free_of(&m.images()[b], x)) {
                return Err(format!("{label} does not preserve the base at {}", vars.name(b)));
            }
        }
        for &xj in xs {
            for &xi in xs {
                if affine_coefficient(&m.images()[xj], xi).is_none() {
                    return Err(format!("{label}({}) is not affine in {}", vars.name(xj), vars.name(xi)));
                }
            }
        }
        let imgs: Vec<RatFunc> = xs.iter().map(|&x| m.images()[x].clone()).collect();
        if jacobian_rank_in(&imgs, xs) != xs.len() {
            return Err(format!("{label} acts on the linear variables by a singular matrix"));
        }
    }
    let full = map_closure(maps, 1000).ok_or("group generated by the maps exceeds 1000 elements")?;
    let restricted: Vec<SemilinearMap> = maps
        .iter()
        .map(|m| {
            let mut imgs = m.images().to_vec();
            for &x in xs {
                imgs[x] = RatFunc::var(&vars, x);
            }
            SemilinearMap::new(&vars, m.twist(), imgs).expect("same shape")
        })
        .collect();
    let on_base = map_closure(&restricted, 1000).ok_or("restricted group too large")?;
    if on_base.len() != full.len() {
        return Err(format!(
            "action on the base is not faithful: group of order {} acts through a quotient of order {}",
            full.len(),
            on_base.len()
        ));
    }
    Ok(format!("hypotheses hold; group of order {} acts faithfully on the base", full.len()))
}

/// Rank of the Jacobian of `fs` with respect to the variables `xs` only.
fn jacobian_rank_in(fs: &[RatFunc], xs: &[usize]) -> usize {
    let rows: Vec<Vec<Poly>> = fs
        .iter()
        .map(|f| {
            let ders: Vec<RatFunc> = xs.iter().map(|&x| f.derivative_at(x)).collect();
            // scaling a row by a nonzero function keeps the rank
            let common = ders.iter().fold(Poly::one(f.vars()), |acc, d| &acc * d.den());
            ders.iter()
                .map(|d| &common.div_exact(d.den()).expect("factor of the product") * d.num())
                .collect()
        })
        .collect();
    polynomial_matrix_rank(rows)
}

pub fn yamasaki_exprs(x: &Expr, y: &Expr, a: &Expr) -> (Expr, Expr) {
    let xy = Expr::bin(BinOp::Mul, x.clone(), y.clone());
    let u = Expr::bin(
        BinOp::Div,
        Expr::bin(BinOp::Sub, x.clone(), y.clone()),
        Expr::bin(BinOp::Sub, a.clone(), xy.clone()),
    );
    let v = Expr::bin(
        BinOp::Div,
        Expr::bin(BinOp::Add, x.clone(), y.clone()),
        Expr::bin(BinOp::Add, a.clone(), xy),
    );
    (u, v)
}

/// The pattern `x ↦ a/x`, `y ↦ a/y` and fixedness of the emitted pair.
pub fn check_yamasaki(
    m: &SemilinearMap,
    x: &RatFunc,
    y: &RatFunc,
    a: &RatFunc,
    u: &RatFunc,
    v: &RatFunc,
) -> Result<String, String> {
    if a.as_constant().is_none() || a.is_zero() {
        return Err("a must be a nonzero constant".into());
    }
    for (label, f) in [("x", x), ("y", y)] {
        let img = m.apply(f).map_err(|e| e.to_string())?;
        if !(&img * f).equals(a) {
            return Err(format!("pattern mismatch: map does not send {label} to a/{label}"));
        }
    }
    for (label, f) in [("u", u), ("v", v)] {
        if !m.apply(f).map_err(|e| e.to_string())?.equals(f) {
            return Err(format!("{label} is not fixed"));
        }
    }
    Ok("pattern holds; u and v are fixed".into())
}

fn mul3(a: &Expr, b: &Expr, c: &Expr) -> Expr {
    Expr::bin(BinOp::Mul, Expr::bin(BinOp::Mul, a.clone(), b.clone()), c.clone())
}

fn sq(a: &Expr) -> Expr {
    Expr::Pow(Box::new(a.clone()), 2)
}

fn sum(terms: Vec<Expr>) -> Expr {
    terms.into_iter().reduce(|a, b| Expr::bin(BinOp::Add, a, b)).expect("nonempty")
}

/// `(u, v, s₁)` of the cyclic-permutation theorem, with common denominator
/// x²+y²+z²−xy−yz−zx.
pub fn masuda_exprs(x: &Expr, y: &Expr, z: &Expr) -> (Expr, Expr, Expr) {
    let three_xyz = Expr::bin(BinOp::Mul, Expr::int(3), mul3(x, y, z));
    let den = Expr::bin(
        BinOp::Sub,
        sum(vec![sq(x), sq(y), sq(z)]),
        sum(vec![
            Expr::bin(BinOp::Mul, x.clone(), y.clone()),
            Expr::bin(BinOp::Mul, y.clone(), z.clone()),
            Expr::bin(BinOp::Mul, z.clone(), x.clone()),
        ]),
    );
    let u_num = Expr::bin(
        BinOp::Sub,
        sum(vec![
            Expr::bin(BinOp::Mul, sq(x), y.clone()),
            Expr::bin(BinOp::Mul, sq(y), z.clone()),
            Expr::bin(BinOp::Mul, sq(z), x.clone()),
        ]),
        three_xyz.clone(),
    );
    let v_num = Expr::bin(
        BinOp::Sub,
        sum(vec![
            Expr::bin(BinOp::Mul, x.clone(), sq(y)),
            Expr::bin(BinOp::Mul, y.clone(), sq(z)),
            Expr::bin(BinOp::Mul, z.clone(), sq(x)),
        ]),
        three_xyz,
    );
    (
        Expr::bin(BinOp::Div, u_num, den.clone()),
        Expr::bin(BinOp::Div, v_num, den),
        sum(vec![x.clone(), y.clone(), z.clone()]),
    )
}

/// The cycle `x ↦ y ↦ z ↦ x` and fixedness of the emitted pair. The triple
/// may be algebraically dependent, which is reported.
pub fn check_masuda(
    m: &SemilinearMap,
    triple: [&RatFunc; 3],
    u: &RatFunc,
    v: &RatFunc,
) -> Result<String, String> {
    let labels = ["x", "y", "z"];
    for k in 0..3 {
        let img = m.apply(triple[k]).map_err(|e| e.to_string())?;
        if !img.equals(triple[(k + 1) % 3]) {
            return Err(format!("cycle check failed: {} is not sent to {}", labels[k], labels[(k + 1) % 3]));
        }
    }
    for (label, f) in [("u", u), ("v", v)] {
        if !m.apply(f).map_err(|e| e.to_string())?.equals(f) {
            return Err(format!("{label} is not fixed"));
        }
    }
    let vars = triple[0].vars();
    let rank = jacobian_rank(&triple.map(|f| f.clone()), vars);
    if rank < 3 {
        Ok(format!(
            "cycle holds; u and v are fixed; extended application (triple has rank {rank}), generation cited"
        ))
    } else {
        Ok("cycle holds; u and v are fixed".into())
    }
}

/// Exponent vector of `c·m₁/m₂` over the listed variables.
pub fn laurent_exponents(f: &RatFunc, vars: &[usize]) -> Option<Vec<i64>> {
    if f.num().num_terms() != 1 || f.den().num_terms() != 1 {
        return None;
    }
    let (mn, _) = f.num().leading_term()?;
    let (md, _) = f.den().leading_term()?;
    let n = f.vars().len();
    let mut e = Vec::new();
    for i in 0..n {
        let k = mn.exp(i) as i64 - md.exp(i) as i64;
        if vars.contains(&i) {
            e.push(k);
        } else if k != 0 {
            return None;
        }
    }
    Some(vars.iter().map(|&v| e[vars.iter().position(|&w| w == v).expect("listed")]).collect())
}

/// Sign actions on the listed variables; candidates must be invariant
/// Laurent monomials generating the whole invariant lattice.
pub fn check_monomial(maps: &[SemilinearMap], names: &[String], vars: &[usize], candidates: &[RatFunc]) -> Result<String, String> {
    let mut signs: Vec<Vec<u8>> = Vec::new();
    for (k, m) in maps.iter().enumerate() {
        let vs = m.vars();
        let mut row = Vec::new();
        for &v in vars {
            let x = RatFunc::var(vs, v);
            let img = &m.images()[v];
            if img.equals(&x) {
                row.push(0);
            } else if img.equals(&-&x) {
                row.push(1);
            } else {
                return Err(format!("{} does not act on {} by a sign", map_label(k, names), vs.name(v)));
            }
        }
        signs.push(row);
    }
    let mut rows = Vec::new();
    for (k, c) in candidates.iter().enumerate() {
        let e = laurent_exponents(c, vars).ok_or(format!("candidate {} is not a Laurent monomial", k + 1))?;
        for m in maps {
            if !m.apply(c).map_err(|e| e.to_string())?.equals(c) {
                return Err(format!("candidate {} is not invariant", k + 1));
            }
        }
        rows.push(e);
    }
    let full_index = BigInt::from(1u64 << rank_mod2(&signs));
    let Some(cand_index) = lattice_index(&rows, vars.len()) else {
        return Err("candidates do not span a full-rank lattice".into());
    };
    if &cand_index % &full_index != BigInt::from(0) {
        return Err("candidate lattice is not inside the invariant lattice".into());
    }
    let idx = &cand_index / &full_index;
    if idx == BigInt::from(1) {
        Ok("invariant; index 1".into())
    } else {
        Err(format!("invariant but index {idx}"))
    }
}
