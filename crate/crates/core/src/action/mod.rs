//! Semilinear automorphisms of K(x₁..xₙ): a Galois twist on coefficients
//! followed by substitution of rational images for the variables.

use std::fmt;

use thiserror::Error;

use crate::exactfield::{CycloElement, GaloisAut};
use crate::grouprep::Matrix;
use crate::multipoly::{Poly, VarSet};
use crate::ratfunc::{RatFunc, RatFuncError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("images must live in the map's own variables")]
    ForeignImage,
    #[error("singular change of coordinates")]
    Singular,
    #[error("definition {0} is not linear")]
    NotLinear(usize),
    #[error("map has no inverse of order at most {0}")]
    NoInverse(usize),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}

/// `f ↦ (twist f)(images)`.
#[derive(Clone)]
pub struct SemilinearMap {
    vars: VarSet,
    twist: GaloisAut,
    images: Vec<RatFunc>,
}

impl SemilinearMap {
    pub fn new(vars: &VarSet, twist: GaloisAut, images: Vec<RatFunc>) -> Result<Self, ActionError> {
        if images.len() != vars.len() {
            return Err(ActionError::ImageCount {
                expected: vars.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|f| f.vars() != vars) {
            return Err(ActionError::ForeignImage);
        }
        Ok(SemilinearMap {
            vars: vars.clone(),
            twist,
            images,
        })
    }

    pub fn identity(vars: &VarSet) -> Self {
        SemilinearMap {
            vars: vars.clone(),
            twist: GaloisAut::ID,
            images: (0..vars.len()).map(|i| RatFunc::var(vars, i)).collect(),
        }
    }

    /// x ↦ −x on every variable; stands for the central element −1 of a
    /// linear representation.
    pub fn negation(vars: &VarSet) -> Self {
        SemilinearMap {
            vars: vars.clone(),
            twist: GaloisAut::ID,
            images: (0..vars.len()).map(|i| -&RatFunc::var(vars, i)).collect(),
        }
    }

    /// Linear map with matrix `a` in the column convention xⱼ ↦ Σᵢ aᵢⱼ xᵢ.
    pub fn from_matrix(vars: &VarSet, twist: GaloisAut, a: &Matrix) -> Result<Self, ActionError> {
        if a.dim() != vars.len() {
            return Err(ActionError::ImageCount {
                expected: vars.len(),
                got: a.dim(),
            });
        }
        let images = (0..vars.len())
            .map(|j| {
                let terms = (0..vars.len()).map(|i| Poly::var(vars, i).scale(a.get(i, j)));
                RatFunc::from_poly(terms.fold(Poly::zero(vars), |acc, t| &acc + &t))
            })
            .collect();
        Self::new(vars, twist, images)
    }

    /// Matrix in the column convention when every image is linear.
    pub fn linear_matrix(&self) -> Option<Matrix> {
        let n = self.vars.len();
        let mut m = Matrix::zero(n);
        for (j, img) in self.images.iter().enumerate() {
            let coeffs = linear_coefficients(img)?;
            for (i, c) in coeffs.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Some(m)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn twist(&self) -> GaloisAut {
        self.twist
    }

    pub fn images(&self) -> &[RatFunc] {
        &self.images
    }

    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc, ActionError> {
        if f.vars() != &self.vars {
            return Err(ActionError::ForeignImage);
        }
        Ok(f.coeff_galois(self.twist).substitute(&self.images)?)
    }

    /// The map `f ↦ self(other(f))`.
    pub fn compose(&self, other: &SemilinearMap) -> Result<SemilinearMap, ActionError> {
        let images = other
            .images
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&self.vars, self.twist.compose(other.twist), images)
    }

    pub fn equals(&self, other: &SemilinearMap) -> bool {
        self.vars == other.vars
            && self.twist == other.twist
            && self.images.iter().zip(&other.images).all(|(a, b)| a.equals(b))
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&SemilinearMap::identity(&self.vars))
    }

    /// Inverse found among the powers, for maps of order at most `max_order`.
    pub fn inverse(&self, max_order: usize) -> Result<SemilinearMap, ActionError> {
        if let Some(m) = self.linear_matrix() {
            // a linear map's inverse has the twisted inverse matrix
            let inv = m.inverse().ok_or(ActionError::Singular)?.apply_galois(self.twist.inverse());
            return Self::from_matrix(&self.vars, self.twist.inverse(), &inv);
        }
        let mut prev = SemilinearMap::identity(&self.vars);
        let mut cur = self.clone();
        for _ in 0..max_order {
            if cur.is_identity() {
                return Ok(prev);
            }
            prev = cur.clone();
            cur = self.compose(&cur)?;
        }
        Err(ActionError::NoInverse(max_order))
    }

    pub fn pow(&self, e: i64, max_order: usize) -> Result<SemilinearMap, ActionError> {
        let base = if e < 0 { self.inverse(max_order)? } else { self.clone() };
        let mut acc = SemilinearMap::identity(&self.vars);
        for _ in 0..e.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Rewrites the map on new coordinates. `defs[i]` gives new variable i in
    /// the old variables and `inverse[j]` gives old variable j in the new ones.
    pub fn change_coordinates(
        &self,
        new_vars: &VarSet,
        defs: &[RatFunc],
        inverse: &[RatFunc],
    ) -> Result<SemilinearMap, ActionError> {
        if inverse.len() != self.vars.len() {
            return Err(ActionError::ImageCount {
                expected: self.vars.len(),
                got: inverse.len(),
            });
        }
        let images = defs
            .iter()
            .map(|d| Ok(self.apply(d)?.substitute(inverse)?))
            .collect::<Result<Vec<_>, ActionError>>()?;
        SemilinearMap::new(new_vars, self.twist, images)
    }

    /// Linear change y = M x, where `defs[i]` is yᵢ as a linear form in the
    /// old variables. The new matrix is M^γ A M⁻¹.
    pub fn change_coordinates_linear(&self, new_vars: &VarSet, defs: &[RatFunc]) -> Result<SemilinearMap, ActionError> {
        let inverse = linear_inverse(new_vars, defs)?;
        self.change_coordinates(new_vars, defs, &inverse)
    }
}

impl SemilinearMap {
    /// Linear change y = M x by the matrix formula: in row convention the new
    /// matrix is M^γ A M⁻¹, with γ the twist applied entrywise.
    pub fn change_coordinates_matrix(&self, new_vars: &VarSet, m: &Matrix) -> Result<SemilinearMap, ActionError> {
        let a = self.linear_matrix().ok_or(ActionError::NotLinear(0))?;
        let inv = m.inverse().ok_or(ActionError::Singular)?;
        let rows = m.apply_galois(self.twist).mul(&a.transpose()).mul(&inv);
        SemilinearMap::from_matrix(new_vars, self.twist, &rows.transpose())
    }
}

/// Row matrix of linear definitions: `defs[i] = Σⱼ Mᵢⱼ xⱼ`.
pub fn definition_matrix(defs: &[RatFunc]) -> Result<Matrix, ActionError> {
    let n = defs.len();
    let mut m = Matrix::zero(n);
    for (i, d) in defs.iter().enumerate() {
        let coeffs = linear_coefficients(d).ok_or(ActionError::NotLinear(i))?;
        if coeffs.len() != n {
            return Err(ActionError::NotLinear(i));
        }
        for (j, c) in coeffs.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Coefficients of a linear form with no constant term.
pub fn linear_coefficients(f: &RatFunc) -> Option<Vec<CycloElement>> {
    let p = f.as_poly()?;
    let n = p.vars().len();
    let mut out = vec![CycloElement::zero(); n];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return None;
        }
        let i = (0..n).find(|&i| m.exp(i) == 1)?;
        out[i] = c.clone();
    }
    Some(out)
}

/// Old variables as linear forms in the new ones, for linear `defs`.
pub fn linear_inverse(new_vars: &VarSet, defs: &[RatFunc]) -> Result<Vec<RatFunc>, ActionError> {
    let n = defs.len();
    if new_vars.len() != n {
        return Err(ActionError::ImageCount {
            expected: n,
            got: new_vars.len(),
        });
    }
    let m = definition_matrix(defs)?;
    let inv = m.inverse().ok_or(ActionError::Singular)?;
    Ok((0..n)
        .map(|j| {
            let p = (0..n).fold(Poly::zero(new_vars), |acc, i| &acc + &Poly::var(new_vars, i).scale(inv.get(j, i)));
            RatFunc::from_poly(p)
        })
        .collect())
}

/// Composes `word` (left to right, with exponents) and compares with `expected`.
pub fn verify_relation_word(
    word: &[(&SemilinearMap, i64)],
    expected: &SemilinearMap,
    max_order: usize,
) -> Result<bool, ActionError> {
    let mut acc = SemilinearMap::identity(expected.vars());
    for (m, e) in word {
        acc = acc.compose(&m.pow(*e, max_order)?)?;
    }
    Ok(acc.equals(expected))
}

impl fmt::Display for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| format!("{} -> {}", self.vars.name(i), img))
            .collect();
        write!(f, "[{}] {}", self.twist, parts.join(", "))
    }
}

impl fmt::Debug for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemilinearMap({self})")
    }
}
