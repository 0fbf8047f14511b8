use std::fmt;
use std::str::FromStr;

use super::{CycloElement, Rational};

/// The automorphism ζ ↦ ζʲ of Q(ζ), for j ∈ {1, 3, 5, 7}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAut(u8);

impl GaloisAut {
    pub const ID: GaloisAut = GaloisAut(1);
    pub const J3: GaloisAut = GaloisAut(3);
    pub const J5: GaloisAut = GaloisAut(5);
    /// Complex conjugation: fixes √2, negates √−1.
    pub const J7: GaloisAut = GaloisAut(7);

    pub const ALL: [GaloisAut; 4] = [Self::ID, Self::J3, Self::J5, Self::J7];

    pub fn new(j: i64) -> Option<Self> {
        let j = j.rem_euclid(8);
        (j % 2 == 1).then_some(GaloisAut(j as u8))
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 1
    }

    /// The automorphism `self ∘ other`, which is ζ ↦ ζ^(j₁·j₂ mod 8).
    pub fn compose(self, other: GaloisAut) -> GaloisAut {
        GaloisAut((self.0 * other.0) % 8)
    }

    pub fn inverse(self) -> GaloisAut {
        // every element of (Z/8)^× is its own inverse
        self
    }

    pub fn apply(self, a: &CycloElement) -> CycloElement {
        if self.0 == 1 || a.is_rational() {
            return a.clone();
        }
        let mut out: [Rational; 4] = Default::default();
        for (k, c) in a.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let e = (k * self.0 as usize) % 8;
            if e < 4 {
                out[e] += c;
            } else {
                out[e - 4] -= c;
            }
        }
        CycloElement::from_coeffs(out)
    }

    /// Name used in script headers: `id`, `j3`, `j5` or `j7`.
    pub fn name(self) -> &'static str {
        match self.0 {
            1 => "id",
            3 => "j3",
            5 => "j5",
            _ => "j7",
        }
    }
}

impl fmt::Display for GaloisAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GaloisAut {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "id" | "j1" => Ok(Self::ID),
            "j3" => Ok(Self::J3),
            "j5" => Ok(Self::J5),
            "j7" => Ok(Self::J7),
            other => Err(format!("unknown Galois twist '{other}' (expected id, j3, j5 or j7)")),
        }
    }
}
