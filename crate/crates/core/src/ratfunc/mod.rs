//! Rational functions over Q(ζ): arithmetic, composition, equality by
//! cross-multiplication, optional reduction and Jacobian rank.

mod gcd;
mod jacobian;

pub use gcd::poly_gcd;
pub use jacobian::{jacobian_rank, polynomial_matrix_rank};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactfield::{CycloElement, GaloisAut, Rational};
use crate::multipoly::{MultipolyError, Poly, VarSet};

/// Term count above which [`RatFunc::reduce_with`] runs the GCD pass.
pub const DEFAULT_GCD_THRESHOLD: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("degenerate substitution: composed denominator vanishes")]
    DegenerateSubstitution,
    #[error(transparent)]
    Poly(#[from] MultipolyError),
}

/// A quotient `num / den` of polynomials over one [`VarSet`].
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        if num.vars() != den.vars() {
            return Err(MultipolyError::VarSetMismatch {
                left: num.vars().to_string(),
                right: den.vars().to_string(),
            }
            .into());
        }
        Ok(RatFunc { num, den }.light())
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.vars());
        RatFunc { num: p, den }
    }

    pub fn constant(vars: &VarSet, c: CycloElement) -> Self {
        Self::from_poly(Poly::constant(vars, c))
    }

    pub fn from_int(vars: &VarSet, n: i64) -> Self {
        Self::from_poly(Poly::from_int(vars, n))
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_poly(Poly::one(vars))
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::from_poly(Poly::var(vars, i))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    /// The value as a polynomial if the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        let c = self.den.as_constant()?;
        Some(self.num.scale(&c.inv().expect("nonzero denominator")))
    }

    pub fn as_constant(&self) -> Option<CycloElement> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n * &d.inv().expect("nonzero denominator"))
    }

    /// Cheap normalization: cancel common monomial factors, fold a constant
    /// denominator into the numerator and make the denominator's leading
    /// coefficient 1.
    fn light(self) -> Self {
        let RatFunc { mut num, mut den } = self;
        if num.is_zero() {
            return RatFunc::zero(den.vars());
        }
        let m = num.monomial_content().gcd(&den.monomial_content());
        if !m.is_one() {
            num = num.div_monomial(&m).expect("content divides");
            den = den.div_monomial(&m).expect("content divides");
        }
        if num == den {
            return RatFunc::one(num.vars());
        }
        let lc = den.leading_coeff().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    /// Removes monomial and scalar content; with the GCD pass num and den are
    /// coprime afterwards.
    pub fn reduce(&self, gcd_pass: bool) -> RatFunc {
        let f = self.clone().light();
        if !gcd_pass || f.den.is_constant() || f.num.is_constant() {
            return f;
        }
        let g = poly_gcd(&f.num, &f.den);
        if g.is_constant() {
            return f;
        }
        RatFunc {
            num: f.num.div_exact(&g).expect("gcd divides numerator"),
            den: f.den.div_exact(&g).expect("gcd divides denominator"),
        }
        .light()
    }

    /// Runs the GCD pass only when the term count exceeds `threshold`.
    pub fn reduce_with(&self, threshold: usize) -> RatFunc {
        self.reduce(self.num_terms() > threshold)
    }

    fn check(&self, other: &RatFunc) -> Result<(), RatFuncError> {
        if self.vars() == other.vars() {
            Ok(())
        } else {
            Err(MultipolyError::VarSetMismatch {
                left: self.vars().to_string(),
                right: other.vars().to_string(),
            }
            .into())
        }
    }

    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc, RatFuncError> {
        self.check(other)?;
        Ok(self.add_sub(other, false))
    }

    pub fn try_sub(&self, other: &RatFunc) -> Result<RatFunc, RatFuncError> {
        self.check(other)?;
        Ok(self.add_sub(other, true))
    }

    fn add_sub(&self, other: &RatFunc, sub: bool) -> RatFunc {
        let combine = |a: &Poly, b: &Poly| if sub { a - b } else { a + b };
        if self.den == other.den {
            return RatFunc {
                num: combine(&self.num, &other.num),
                den: self.den.clone(),
            }
            .light();
        }
        if other.den.is_constant() || self.den.is_constant() {
            let num = combine(&(&self.num * &other.den), &(&other.num * &self.den));
            return RatFunc {
                num,
                den: &self.den * &other.den,
            }
            .light();
        }
        // one denominator dividing the other is common along the proof chains
        if let Some(q) = divides_small(&other.den, &self.den) {
            return RatFunc {
                num: combine(&self.num, &(&other.num * &q)),
                den: self.den.clone(),
            }
            .light();
        }
        if let Some(q) = divides_small(&self.den, &other.den) {
            return RatFunc {
                num: combine(&(&self.num * &q), &other.num),
                den: other.den.clone(),
            }
            .light();
        }
        RatFunc {
            num: combine(&(&self.num * &other.den), &(&other.num * &self.den)),
            den: &self.den * &other.den,
        }
        .light()
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc, RatFuncError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(self.vars()));
        }
        // cross-cancel equal factors before multiplying
        if self.num == other.den {
            return Ok(RatFunc { num: other.num.clone(), den: self.den.clone() }.light());
        }
        if self.den == other.num {
            return Ok(RatFunc { num: self.num.clone(), den: other.den.clone() }.light());
        }
        Ok(RatFunc {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
        .light())
    }

    pub fn inv(&self) -> Result<RatFunc, RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .light())
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc, RatFuncError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc, RatFuncError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
        .light())
    }

    pub fn scale(&self, c: &CycloElement) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .light()
    }

    /// The cross-multiplication residue `f.num·g.den − g.num·f.den`.
    pub fn residue(&self, other: &RatFunc) -> Result<Poly, RatFuncError> {
        self.check(other)?;
        if self.den == other.den {
            return Ok(&self.num - &other.num);
        }
        Ok(&(&self.num * &other.den) - &(&other.num * &self.den))
    }

    /// Equality by cross-multiplication. Different VarSets compare unequal.
    pub fn equals(&self, other: &RatFunc) -> bool {
        if self.vars() != other.vars() {
            return false;
        }
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.residue(other).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn coeff_galois(&self, g: GaloisAut) -> RatFunc {
        RatFunc {
            num: self.num.coeff_galois(g),
            den: self.den.coeff_galois(g),
        }
    }

    /// Composition with `x_i ↦ images[i]`. The images share a target VarSet.
    pub fn substitute(&self, images: &[RatFunc]) -> Result<RatFunc, RatFuncError> {
        let pairs: Vec<(Poly, Poly)> = images.iter().map(|f| (f.num.clone(), f.den.clone())).collect();
        let n = self.vars().len();
        if pairs.len() != n {
            return Err(MultipolyError::ImageCount { expected: n, got: pairs.len() }.into());
        }
        let degs: Vec<u32> = (0..n)
            .map(|i| self.num.degree_in(i).max(self.den.degree_in(i)))
            .collect();
        let (num, _) = self.num.substitute_frac_bounded(&pairs, &degs)?;
        let (den, _) = self.den.substitute_frac_bounded(&pairs, &degs)?;
        if den.is_zero() {
            return Err(RatFuncError::DegenerateSubstitution);
        }
        Ok(RatFunc { num, den }.light())
    }

    pub fn derivative_at(&self, i: usize) -> RatFunc {
        let n = &(&self.num.derivative_at(i) * &self.den) - &(&self.num * &self.den.derivative_at(i));
        RatFunc {
            num: n,
            den: self.den.pow(2),
        }
        .light()
    }

    /// Reinterprets over another VarSet by variable name.
    pub fn reindex(&self, target: &VarSet) -> Result<RatFunc, RatFuncError> {
        Ok(RatFunc {
            num: self.num.reindex(target)?,
            den: self.den.reindex(target)?,
        })
    }

    /// Representative used by the denominator audit: the denominator is
    /// scaled to have integral ζ-coordinates with content 1 and the
    /// numerator is scaled alongside.
    pub fn audit_form(&self) -> (Poly, Poly) {
        let f = self.clone().light();
        let mut l = BigInt::one();
        for (_, c) in f.den.terms() {
            l = l.lcm(&c.denominator_lcm());
        }
        let den = f.den.scale_rational(&Rational::from_integer(l.clone()));
        let mut g = BigInt::zero();
        for (_, c) in den.terms() {
            for q in c.coeffs() {
                g = g.gcd(q.numer());
            }
        }
        let s = Rational::new(l, g);
        (f.num.scale_rational(&s), f.den.scale_rational(&s))
    }

    /// Primes dividing some rational denominator of the audit-form numerator.
    pub fn audit_primes(&self) -> Vec<u64> {
        let (num, _) = self.audit_form();
        let mut l = BigInt::one();
        for (_, c) in num.terms() {
            l = l.lcm(&c.denominator_lcm());
        }
        prime_factors(&l)
    }
}

/// Small prime factors by trial division; any cofactor left above 10⁶ is
/// reported as `u64::MAX` so that it cannot be mistaken for a small prime.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while n > BigInt::one() && p <= 1_000_000 {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(u64::MAX);
    }
    out
}

fn divides_small(d: &Poly, by: &Poly) -> Option<Poly> {
    // only worth trying when `by` is visibly larger
    if by.num_terms() <= d.num_terms() || by.total_degree() <= d.total_degree() || by.num_terms() > 4000 {
        return None;
    }
    by.div_exact(d)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.num_terms() > 1 || p.leading_coeff().is_some_and(|c| !c.is_rational()) {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

macro_rules! rf_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        /// Panics on VarSet mismatch or division by zero; use the `try_`
        /// methods to get an error instead.
        impl<'a> std::ops::$tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$inner(rhs).expect("rational function arithmetic")
            }
        }
        impl std::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$inner(&rhs).expect("rational function arithmetic")
            }
        }
    };
}

rf_binop!(Add, add, try_add);
rf_binop!(Sub, sub, try_sub);
rf_binop!(Mul, mul, try_mul);
rf_binop!(Div, div, try_div);

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
