use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, FieldError, GaloisAut, Rational};

/// An element c0 + c1·ζ + c2·ζ² + c3·ζ³ of Q(ζ) with ζ⁴ = −1.
///
/// The representation is unique, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    c: [Rational; 4],
}

impl CycloElement {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        CycloElement { c: [c0, c1, c2, c3] }
    }

    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        CycloElement { c }
    }

    pub fn from_i64s(c: [i64; 4]) -> Self {
        CycloElement { c: c.map(rat) }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloElement {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ, a primitive eighth root of unity.
    pub fn zeta() -> Self {
        Self::from_i64s([0, 1, 0, 0])
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        Self::from_i64s(c)
    }

    /// √−1 = ζ².
    pub fn sqrtm1() -> Self {
        Self::from_i64s([0, 0, 1, 0])
    }

    /// √2 = ζ − ζ³.
    pub fn sqrt2() -> Self {
        Self::from_i64s([0, 1, 0, -1])
    }

    /// √−2 = ζ + ζ³.
    pub fn sqrtm2() -> Self {
        Self::from_i64s([0, 1, 0, 1])
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.c[k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.c[0])
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        CycloElement {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // a⁻¹ = σ₃(a)σ₅(a)σ₇(a) / N(a), where N(a) is the product over the whole
        // Galois orbit and therefore rational.
        let conj = &(&GaloisAut::J3.apply(self) * &GaloisAut::J5.apply(self)) * &GaloisAut::J7.apply(self);
        let norm = self * &conj;
        debug_assert!(norm.is_rational());
        Ok(conj.scale(&norm.c[0].recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::one(), |acc, r| num_integer::Integer::lcm(&acc, r.denom()))
    }

    /// Canonical text form `c0 + c1*z + c2*z^2 + c3*z^3`, all four terms present.
    pub fn to_canonical_string(&self) -> String {
        format!(
            "{} + {}*z + {}*z^2 + {}*z^3",
            fmt_rational(&self.c[0]),
            fmt_rational(&self.c[1]),
            fmt_rational(&self.c[2]),
            fmt_rational(&self.c[3])
        )
    }

    /// Number of nonzero basis coefficients.
    pub(crate) fn weight(&self) -> usize {
        self.c.iter().filter(|r| !r.is_zero()).count()
    }

    /// True when exactly one basis coefficient is nonzero and it is negative,
    /// i.e. the element prints naturally with a leading minus sign.
    pub(crate) fn is_negative_monomial(&self) -> bool {
        self.weight() == 1 && self.c.iter().any(|r| r.is_negative())
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Compact rendering in the formula syntax, e.g. `1/2 - 3*zeta^2`.
impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let neg = r.is_negative();
            let a = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let basis = match k {
                0 => "",
                1 => "zeta",
                2 => "zeta^2",
                _ => "zeta^3",
            };
            if k == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{}*{basis}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

impl Default for CycloElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycloElement {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &CycloElement) -> CycloElement {
        CycloElement {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &CycloElement) -> CycloElement {
        CycloElement {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &CycloElement) -> CycloElement {
        if self.is_rational() {
            return rhs.scale(&self.c[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.c[0]);
        }
        let mut out: [Rational; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        CycloElement { c: out }
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloElement> for CycloElement {
            type Output = CycloElement;
            fn $m(self, rhs: CycloElement) -> CycloElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloElement> for CycloElement {
            type Output = CycloElement;
            fn $m(self, rhs: &CycloElement) -> CycloElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycloElement> for CycloElement {
    fn add_assign(&mut self, rhs: &CycloElement) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
    }
}

impl SubAssign<&CycloElement> for CycloElement {
    fn sub_assign(&mut self, rhs: &CycloElement) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
    }
}

impl MulAssign<&CycloElement> for CycloElement {
    fn mul_assign(&mut self, rhs: &CycloElement) {
        *self = &*self * rhs;
    }
}

/// Panics on division by zero; use [`CycloElement::checked_div`] for a fallible form.
impl<'a> Div<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn div(self, rhs: &CycloElement) -> CycloElement {
        self.checked_div(rhs).expect("division by zero in Q(zeta_8)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::ratio;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloElement> {
        proptest::array::uniform4(arb_rational()).prop_map(CycloElement::from_coeffs)
    }

    #[test]
    fn named_constants() {
        let z = CycloElement::zeta();
        assert_eq!(&z * &CycloElement::zeta_pow(3), CycloElement::from_int(-1));
        let s2 = CycloElement::sqrt2();
        assert_eq!(&s2 * &s2, CycloElement::from_int(2));
        let sm2 = CycloElement::sqrtm2();
        assert_eq!(&sm2 * &sm2, CycloElement::from_int(-2));
        let i = CycloElement::sqrtm1();
        assert_eq!(&i * &i, CycloElement::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let a = CycloElement::from_i64s([1, 0, 1, 0]);
        let expected = CycloElement::new(ratio(1, 2), ratio(0, 1), ratio(-1, 2), ratio(0, 1));
        assert_eq!(a.inv().unwrap(), expected);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycloElement::zero().inv(), Err(FieldError::DivisionByZero));
        assert!(CycloElement::one().checked_div(&CycloElement::zero()).is_err());
    }

    #[test]
    fn powers() {
        let z = CycloElement::zeta();
        assert_eq!(z.pow(8).unwrap(), CycloElement::one());
        assert_eq!(z.pow(-1).unwrap(), CycloElement::zeta_pow(7));
        assert_eq!(z.pow(4).unwrap(), CycloElement::from_int(-1));
    }

    #[test]
    fn rendering() {
        let a = CycloElement::new(ratio(1, 2), ratio(0, 1), ratio(-3, 1), ratio(1, 1));
        assert_eq!(a.to_string(), "1/2 - 3*zeta^2 + zeta^3");
        assert_eq!(a.to_canonical_string(), "1/2 + 0*z + -3*z^2 + 1*z^3");
        assert_eq!((-CycloElement::zeta()).to_string(), "-zeta");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
