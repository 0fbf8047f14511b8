use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed};

use super::{Monomial, MultipolyError, VarSet};
use crate::exactfield::{CycloElement, GaloisAut, Rational};

/// Sparse multivariate polynomial with coefficients in Q(ζ).
///
/// Terms are kept sorted by descending graded-lex monomial order with no zero
/// coefficients stored, so two equal polynomials over the same [`VarSet`] are
/// structurally equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: VarSet,
    terms: Vec<(Monomial, CycloElement)>,
}

impl Poly {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, CycloElement::one())
    }

    pub fn constant(vars: &VarSet, c: CycloElement) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn from_int(vars: &VarSet, n: i64) -> Self {
        Self::constant(vars, CycloElement::from_int(n))
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Poly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), i), CycloElement::one())],
        }
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self, MultipolyError> {
        Ok(Self::var(vars, vars.require(name)?))
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: CycloElement) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial length does not match VarSet");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, CycloElement)>,
    {
        let mut acc: HashMap<Monomial, CycloElement> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length does not match VarSet");
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &VarSet, acc: HashMap<Monomial, CycloElement>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, CycloElement)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant term's coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<CycloElement> {
        if self.terms.is_empty() {
            Some(CycloElement::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &CycloElement)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Option<&CycloElement> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    fn check_vars(&self, other: &Poly) -> Result<(), MultipolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(MultipolyError::VarSetMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, MultipolyError> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, MultipolyError> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, MultipolyError> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate { -c } else { c.clone() }));
        }
        Poly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.vars);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (sm, sc) = &single.terms[0];
            // multiplying by a single term preserves the order
            let terms = many
                .terms
                .iter()
                .map(|(m, c)| (m.mul(sm), c * sc))
                .collect();
            return Poly {
                vars: self.vars.clone(),
                terms,
            };
        }
        let mut acc: HashMap<Monomial, CycloElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Poly::from_map(&self.vars, acc)
    }

    pub fn scale(&self, c: &CycloElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&CycloElement::from_rational(r.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Applies a Galois automorphism to every coefficient.
    pub fn coeff_galois(&self, g: GaloisAut) -> Poly {
        if g.is_identity() {
            return self.clone();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), g.apply(c))).collect(),
        }
    }

    pub fn derivative(&self, var: &str) -> Result<Poly, MultipolyError> {
        Ok(self.derivative_at(self.vars.require(var)?))
    }

    pub fn derivative_at(&self, i: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                let mut m2 = m.clone();
                m2.set_exp(i, e - 1);
                (m2, c.scale(&Rational::from_integer(e.into())))
            });
        // lowering one exponent can reorder terms
        Poly::from_terms(&self.vars, terms)
    }

    /// Evaluates at a point given one value per variable.
    pub fn eval(&self, point: &[CycloElement]) -> CycloElement {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = CycloElement::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as i64).expect("nonnegative power");
                }
            }
            acc += &t;
        }
        acc
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.vars.len()),
            Some((m, _)) => it.fold(m.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, c) in &self.terms {
            terms.push((a.div(m)?, c.clone()));
        }
        Some(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Scales so that the leading coefficient is 1. Zero stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(self.vars == d.vars, "VarSet mismatch in div_exact");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero(&self.vars));
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv().ok()?));
        }
        let (dm, dc) = d.leading_term().expect("nonzero");
        let dc_inv = dc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, CycloElement)> = Vec::new();
        let dt = &d.terms.last().expect("nonzero").0;
        let ddeg: Vec<u32> = (0..self.vars.len()).map(|i| d.degree_in(i)).collect();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(dm)?;
            // rem stays a multiple of d, so its trailing monomial and its
            // partial degrees must admit d's
            rem.terms.last().expect("nonzero").0.div(dt)?;
            if (0..ddeg.len()).any(|i| ddeg[i] > 0 && rem.degree_in(i) < ddeg[i]) {
                return None;
            }
            let qc = rc * &dc_inv;
            let t = Poly::monomial(&self.vars, qm.clone(), qc.clone());
            rem = rem.merge(&t.mul_unchecked(d), true);
            quot.push((qm, qc));
        }
        // quotient terms were produced in strictly decreasing order
        Some(Poly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    /// Reinterprets the polynomial over a different VarSet by variable name.
    /// Fails if a variable that occurs is missing from the target.
    pub fn reindex(&self, target: &VarSet) -> Result<Poly, MultipolyError> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let occurs = self.terms.iter().any(|(m, _)| m.exp(i) > 0);
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if !occurs => map.push(None),
                None => return Err(MultipolyError::UnknownVariable(name.clone())),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one(target.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if let Some(j) = map[i] {
                    out.set_exp(j, e);
                }
            }
            (out, c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }

    /// Coefficients of `self` viewed as a univariate polynomial in variable `i`:
    /// entry k is the coefficient of x_i^k, with x_i removed.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let d = self.degree_in(i) as usize;
        let mut buckets: Vec<Vec<(Monomial, CycloElement)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            let mut m2 = m.clone();
            m2.set_exp(i, 0);
            buckets[e].push((m2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut terms| {
                // removing one variable can reorder terms
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly {
                    vars: self.vars.clone(),
                    terms,
                }
            })
            .collect()
    }

    /// Inverse of [`Poly::coefficients_in`].
    pub fn from_coefficients_in(vars: &VarSet, i: usize, coeffs: &[Poly]) -> Poly {
        let terms = coeffs.iter().enumerate().flat_map(|(k, p)| {
            p.terms.iter().map(move |(m, c)| {
                let mut m2 = m.clone();
                m2.set_exp(i, m.exp(i) + k as u32);
                (m2, c.clone())
            })
        });
        Poly::from_terms(vars, terms)
    }

    /// All coefficients lie in Q.
    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_rational())
    }

    /// Composes with `x_i ↦ num_i/den_i`, clearing denominators by the
    /// per-variable degree bound: the result is `(N, D)` with
    /// `D = Π den_i^{deg_i(self)}`. All images must share one target VarSet.
    pub fn substitute_frac(&self, images: &[(Poly, Poly)]) -> Result<(Poly, Poly), MultipolyError> {
        let degs: Vec<u32> = (0..self.vars.len()).map(|i| self.degree_in(i)).collect();
        self.substitute_frac_bounded(images, &degs)
    }

    /// As [`Poly::substitute_frac`] but with caller-chosen degree bounds, which
    /// must be at least the actual degrees. Substituting numerator and
    /// denominator of a fraction with shared bounds gives equal cleared
    /// denominators.
    pub fn substitute_frac_bounded(
        &self,
        images: &[(Poly, Poly)],
        degs: &[u32],
    ) -> Result<(Poly, Poly), MultipolyError> {
        if images.len() != self.vars.len() {
            return Err(MultipolyError::ImageCount {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some((n, _)) => n.vars.clone(),
            None => return Err(MultipolyError::EmptyVarSet),
        };
        for (n, d) in images {
            if n.vars != target || d.vars != target {
                return Err(MultipolyError::VarSetMismatch {
                    left: target.to_string(),
                    right: n.vars.to_string(),
                });
            }
            if d.is_zero() {
                return Err(MultipolyError::ZeroDenominator);
            }
        }
        assert!(degs.len() == self.vars.len() && (0..degs.len()).all(|i| degs[i] >= self.degree_in(i)));
        // den_i^k for k ≤ deg_i, and the same for num_i
        let den_pows: Vec<Vec<Poly>> = images
            .iter()
            .zip(degs.iter())
            .map(|((_, d), &k)| power_table(d, k))
            .collect();
        let num_pows: Vec<Vec<Poly>> = images
            .iter()
            .zip(degs.iter())
            .map(|((n, _), &k)| power_table(n, k))
            .collect();
        let num = self.subst_rec(0, &target, &degs, &num_pows, &den_pows);
        let mut den = Poly::one(&target);
        for (i, &k) in degs.iter().enumerate() {
            den = den.mul_unchecked(&den_pows[i][k as usize]);
        }
        Ok((num, den))
    }

    fn subst_rec(
        &self,
        i: usize,
        target: &VarSet,
        degs: &[u32],
        num_pows: &[Vec<Poly>],
        den_pows: &[Vec<Poly>],
    ) -> Poly {
        if self.is_zero() {
            return Poly::zero(target);
        }
        if i == self.vars.len() {
            return Poly::constant(target, self.terms[0].1.clone());
        }
        let d = degs[i] as usize;
        let coeffs = self.coefficients_in(i);
        let mut acc = Poly::zero(target);
        for (k, ck) in coeffs.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let sub = ck.subst_rec(i + 1, target, degs, num_pows, den_pows);
            let t = sub
                .mul_unchecked(&num_pows[i][k])
                .mul_unchecked(&den_pows[i][d - k]);
            acc = acc.merge(&t, false);
        }
        acc
    }
}

fn power_table(p: &Poly, k: u32) -> Vec<Poly> {
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(Poly::one(&p.vars));
    for j in 1..=k as usize {
        let next = out[j - 1].mul_unchecked(p);
        out.push(next);
    }
    out
}

fn fmt_coeff_times(c: &CycloElement, mono: &str) -> (bool, String) {
    // returns (negative, body without sign)
    let rational = c.as_rational();
    if let Some(r) = rational {
        let neg = r.is_negative();
        let a = r.abs();
        let body = if mono.is_empty() {
            crate::exactfield::fmt_rational(&a)
        } else if a.is_one() {
            mono.to_string()
        } else {
            format!("{}*{}", crate::exactfield::fmt_rational(&a), mono)
        };
        return (neg, body);
    }
    if c.is_negative_monomial() {
        let body = (-c).to_string();
        return (true, if mono.is_empty() { body } else { format!("{body}*{mono}") });
    }
    if c.weight() == 1 {
        let body = c.to_string();
        return (false, if mono.is_empty() { body } else { format!("{body}*{mono}") });
    }
    let body = format!("({c})");
    (false, if mono.is_empty() { body } else { format!("{body}*{mono}") })
}

/// Renders in the formula syntax, terms in descending graded-lex order,
/// e.g. `x1^2 + 2*x1*x2 - (1 + zeta)*x2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars.name(i).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(i), e)
                    }
                })
                .collect();
            let (neg, body) = fmt_coeff_times(c, &mono.join("*"));
            if k == 0 {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.vars.names().join(","), self)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        /// Panics on VarSet mismatch; the `try_` methods return an error instead.
        impl<'a> std::ops::$tr<&'a Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$inner(rhs).expect("VarSet mismatch")
            }
        }
        impl std::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$inner(&rhs).expect("VarSet mismatch")
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::ratio;
    use proptest::prelude::*;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names).unwrap()
    }

    fn b_poly(v: &VarSet) -> Poly {
        let u1 = Poly::var(v, 0);
        let u2 = Poly::var(v, 1);
        let q = &u1.pow(2) - &Poly::from_int(v, 3).mul_unchecked(&u2.pow(2));
        &(&q.pow(2) + &Poly::from_int(v, 4).mul_unchecked(&u1).mul_unchecked(&q))
            + &Poly::from_int(v, 32).mul_unchecked(&u2.pow(2))
    }

    #[test]
    fn square_of_sum() {
        let v = vs(&["x", "y"]);
        let (x, y) = (Poly::var(&v, 0), Poly::var(&v, 1));
        let lhs = (&x + &y).pow(2);
        let rhs = &(&x.pow(2) + &Poly::from_int(&v, 2).mul_unchecked(&(&x * &y))) + &y.pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn b_at_one_zero() {
        let v = vs(&["U1", "U2"]);
        let b = b_poly(&v);
        let pt = [CycloElement::one(), CycloElement::zero()];
        assert_eq!(b.eval(&pt), CycloElement::from_int(5));
        // 4q·U1 + 4q + 8U1² at (1, 0)
        assert_eq!(b.derivative("U1").unwrap().eval(&pt), CycloElement::from_int(16));
        assert!(b.scale(&CycloElement::zero()).is_zero());
    }

    #[test]
    fn mismatched_varsets() {
        let a = Poly::var(&vs(&["x"]), 0);
        let b = Poly::var(&vs(&["y"]), 0);
        assert!(matches!(a.try_add(&b), Err(MultipolyError::VarSetMismatch { .. })));
    }

    #[test]
    fn derivative_basics() {
        let v = vs(&["x", "y"]);
        let (x, y) = (Poly::var(&v, 0), Poly::var(&v, 1));
        let p = &x.pow(2) * &y;
        assert_eq!(p.derivative("x").unwrap(), Poly::from_int(&v, 2).mul_unchecked(&(&x * &y)));
        assert!(Poly::from_int(&v, 7).derivative("x").unwrap().is_zero());
        assert!(p.derivative("w").is_err());
    }

    #[test]
    fn substitute_clears_one_denominator() {
        let src = vs(&["x", "y"]);
        let dst = vs(&["a", "b", "y"]);
        let p = &Poly::var(&src, 0).pow(2) + &Poly::var(&src, 1);
        let (a, b, y) = (Poly::var(&dst, 0), Poly::var(&dst, 1), Poly::var(&dst, 2));
        let one = Poly::one(&dst);
        let (n, d) = p.substitute_frac(&[(a.clone(), b.clone()), (y.clone(), one.clone())]).unwrap();
        assert_eq!(n, &a.pow(2) + &(&y * &b.pow(2)));
        assert_eq!(d, b.pow(2));
        let (n, d) = Poly::var(&src, 0)
            .substitute_frac(&[(Poly::var(&src, 0), Poly::one(&src)), (Poly::var(&src, 1), Poly::one(&src))])
            .unwrap();
        assert_eq!(n, Poly::var(&src, 0));
        assert!(d.is_one());
        assert_eq!(
            p.substitute_frac(&[(a, Poly::zero(&dst)), (y, one)]),
            Err(MultipolyError::ZeroDenominator)
        );
    }

    #[test]
    fn coeff_galois_examples() {
        let v = vs(&["x1"]);
        let x = Poly::var(&v, 0);
        let ix = x.scale(&CycloElement::sqrtm1());
        assert_eq!(ix.coeff_galois(GaloisAut::J7), -&ix);
        let rx = x.scale(&CycloElement::sqrt2());
        assert_eq!(rx.coeff_galois(GaloisAut::J7), rx);
        assert_eq!(ix.coeff_galois(GaloisAut::ID), ix);
    }

    #[test]
    fn exact_division() {
        let v = vs(&["x", "y"]);
        let (x, y) = (Poly::var(&v, 0), Poly::var(&v, 1));
        let num = &x.pow(2) - &y.pow(2);
        assert_eq!(num.div_exact(&(&x - &y)), Some(&x + &y));
        assert_eq!((&x + &Poly::one(&v)).div_exact(&y), None);
    }

    #[test]
    fn rendering_with_surd_coefficients() {
        let v = vs(&["x", "y"]);
        let (x, y) = (Poly::var(&v, 0), Poly::var(&v, 1));
        let p = &x.scale(&(&CycloElement::one() + &CycloElement::zeta())) - &y.scale(&CycloElement::from_rational(ratio(3, 2)));
        assert_eq!(p.to_string(), "(1 + zeta)*x - 3/2*y");
        assert_eq!((-&x.scale(&CycloElement::sqrtm1())).to_string(), "-zeta^2*x");
    }

    fn arb_poly(v: VarSet) -> impl Strategy<Value = Poly> {
        let n = v.len();
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..=2, n),
                proptest::array::uniform4(-3i64..=3),
            ),
            0..5,
        )
        .prop_map(move |ts| {
            Poly::from_terms(
                &v,
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exps(&e), CycloElement::from_i64s(c))),
            )
        })
    }

    fn four() -> VarSet {
        vs(&["a", "b", "c", "d"])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ring_axioms(p in arb_poly(four()), q in arb_poly(four()), r in arb_poly(four())) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn product_rule(p in arb_poly(four()), q in arb_poly(four())) {
            let lhs = (&p * &q).derivative_at(1);
            let rhs = &(&p.derivative_at(1) * &q) + &(&p * &q.derivative_at(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn polynomial_substitution_matches_expansion(p in arb_poly(four()), imgs in proptest::collection::vec(arb_poly(vs(&["s", "t"])), 4)) {
            let t = vs(&["s", "t"]);
            let images: Vec<_> = imgs.iter().map(|i| (i.clone(), Poly::one(&t))).collect();
            let (n, d) = p.substitute_frac(&images).unwrap();
            prop_assert!(d.is_one());
            let mut direct = Poly::zero(&t);
            for (m, c) in p.terms() {
                let mut term = Poly::constant(&t, c.clone());
                for (i, &e) in m.exps().iter().enumerate() {
                    term = &term * &imgs[i].pow(e);
                }
                direct = &direct + &term;
            }
            prop_assert_eq!(n, direct);
        }

        #[test]
        fn galois_commutes_with_stable_substitution(p in arb_poly(four()), q in arb_poly(four()), j in 0usize..4) {
            let g = GaloisAut::ALL[j];
            prop_assert_eq!((&p * &q).coeff_galois(g), &p.coeff_galois(g) * &q.coeff_galois(g));
            let v = four();
            // rational images are fixed by every twist
            let images: Vec<_> = (0..4)
                .map(|i| (&Poly::var(&v, i) + &Poly::var(&v, (i + 1) % 4), Poly::one(&v)))
                .collect();
            let (n1, _) = p.coeff_galois(g).substitute_frac(&images).unwrap();
            let (n2, _) = p.substitute_frac(&images).unwrap();
            prop_assert_eq!(n1, n2.coeff_galois(g));
        }

        #[test]
        fn div_exact_inverts_mul(p in arb_poly(four()), q in arb_poly(four())) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
        }
    }
}
