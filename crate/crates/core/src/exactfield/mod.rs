//! Exact arithmetic in Q and in the eighth cyclotomic field Q(ζ) = Q[ζ]/(ζ⁴ + 1).
//!
//! Every coefficient used by the engine lives in [`CycloElement`]. The three
//! quadratic subfields Q(√2), Q(√−1) and Q(√−2) are reached through the named
//! constants [`CycloElement::sqrt2`], [`CycloElement::sqrtm1`] and
//! [`CycloElement::sqrtm2`] rather than through separate field types.

mod cyclo;
mod galois;

pub use cyclo::CycloElement;
pub(crate) use cyclo::fmt_rational;
pub use galois::GaloisAut;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Checks the two identities tying ζ to the embedded square roots:
/// ζ = (1 + √−1)/√2 and √−2 = √−1·√2.
pub fn zeta_identity_check() -> bool {
    zeta_identity_with(&CycloElement::sqrt2())
}

/// Same check as [`zeta_identity_check`] with a caller-supplied value standing
/// in for √2. Used to confirm the check is sensitive to a sign flip.
pub fn zeta_identity_with(sqrt2: &CycloElement) -> bool {
    let one = CycloElement::one();
    let i = CycloElement::sqrtm1();
    let zeta = CycloElement::zeta();
    let Ok(inv) = sqrt2.inv() else {
        return false;
    };
    let lhs = &(&one + &i) * &inv;
    lhs == zeta && CycloElement::sqrtm2() == &i * sqrt2
}

/// ζ written over Q(√−2): ζ = √−2·(1 − √−1)/2.
pub fn zeta_over_sqrtm2_check() -> bool {
    let one = CycloElement::one();
    let i = CycloElement::sqrtm1();
    let rhs = &(&CycloElement::sqrtm2() * &(&one - &i)) * &CycloElement::from_rational(ratio(1, 2));
    rhs == CycloElement::zeta()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_identities() {
        assert!(zeta_identity_check());
        assert!(!zeta_identity_with(&-CycloElement::sqrt2()));
        assert!(zeta_over_sqrtm2_check());
    }
}
