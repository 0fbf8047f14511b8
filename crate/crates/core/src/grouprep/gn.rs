//! The double cover Gₙ ⊂ Sₙ × C₄ and its signed-permutation representation.

use std::fmt;

use super::{closure, GroupElement, GroupError, LabeledGroup, Matrix, Permutation};
use crate::exactfield::{ratio, CycloElement};

/// A pair (σ, √−1^exp) with sign(σ) = (−1)^exp.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GnElement {
    pub perm: Permutation,
    pub exp: u8,
}

impl GnElement {
    pub fn new(perm: Permutation, exp: u8) -> Option<Self> {
        let e = GnElement { perm, exp: exp % 4 };
        e.parity_ok().then_some(e)
    }

    pub fn parity_ok(&self) -> bool {
        self.perm.is_even() == (self.exp % 2 == 0)
    }
}

impl GroupElement for GnElement {
    fn op(&self, other: &Self) -> Self {
        GnElement {
            perm: self.perm.compose(&other.perm),
            exp: (self.exp + other.exp) % 4,
        }
    }
}

impl fmt::Display for GnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ["1", "i", "-1", "-i"][self.exp as usize];
        write!(f, "({}, {})", self.perm, c)
    }
}

impl fmt::Debug for GnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Gₙ with its 2n-dimensional representation on x₁..xₙ, y₁..yₙ.
#[derive(Clone, Debug)]
pub struct GnGroup {
    pub n: usize,
    pub group: LabeledGroup<GnElement>,
    /// Matrix of every element, in the group's element order.
    pub rep: Vec<Matrix>,
}

fn sigma(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[&[1, 2]]).expect("valid")
}

/// Matrix of τ ∈ Aₙ: xᵢ ↦ x_τ(i), yᵢ ↦ y_{σ⁻¹τσ(i)}, written by columns.
pub fn tau_matrix(tau: &Permutation) -> Matrix {
    let n = tau.degree();
    let s = sigma(n);
    let conj = s.inverse().compose(tau).compose(&s);
    let mut m = Matrix::zero(2 * n);
    for i in 0..n {
        m.set(tau.apply(i), i, CycloElement::one());
        m.set(n + conj.apply(i), n + i, CycloElement::one());
    }
    m
}

/// Matrix of σ̄: xᵢ ↦ yᵢ ↦ −xᵢ.
pub fn sigmabar_matrix(n: usize) -> Matrix {
    let mut m = Matrix::zero(2 * n);
    for i in 0..n {
        m.set(n + i, i, CycloElement::one());
        m.set(i, n + i, -CycloElement::one());
    }
    m
}

/// Generators t, σ̄ and the 3-cycles (1,2,k) spanning Aₙ, with names.
pub fn gn_generators(n: usize) -> Vec<(String, GnElement)> {
    let mut gens = vec![
        ("t".to_string(), GnElement::new(Permutation::identity(n), 2).expect("even")),
        ("sigmabar".to_string(), GnElement::new(sigma(n), 1).expect("odd")),
    ];
    for k in 3..=n {
        let p = Permutation::from_cycles(n, &[&[1, 2, k]]).expect("valid");
        gens.push((format!("tau{k}"), GnElement::new(p, 0).expect("even")));
    }
    gens
}

fn generator_matrix(n: usize, g: &GnElement) -> Matrix {
    if g.perm.is_identity() {
        // t
        return Matrix::identity(2 * n).neg();
    }
    if g.exp == 1 {
        return sigmabar_matrix(n);
    }
    tau_matrix(&g.perm)
}

pub fn gn_group(n: usize) -> Result<GnGroup, GroupError> {
    if !(3..=5).contains(&n) {
        return Err(GroupError::OutOfRange(n));
    }
    let gens = gn_generators(n);
    let elems: Vec<GnElement> = gens.iter().map(|(_, g)| g.clone()).collect();
    let names: Vec<&str> = gens.iter().map(|(s, _)| s.as_str()).collect();
    let id = GnElement::new(Permutation::identity(n), 0).expect("even");
    let group = closure(&elems, &names, id, 2 * 120 + 1)?;
    let mats: Vec<Matrix> = elems.iter().map(|g| generator_matrix(n, g)).collect();
    let rep = group
        .extend_map(&mats, Matrix::identity(2 * n))
        .map_err(|_| GroupError::NotHomomorphism)?;
    Ok(GnGroup { n, group, rep })
}

impl GnGroup {
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.rep.len()).filter(|&i| self.rep[i].is_identity()).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel() == vec![0]
    }

    pub fn parity_invariant_holds(&self) -> bool {
        self.group.elements().iter().all(|e| e.parity_ok())
    }

    pub fn projections(&self) -> Vec<Permutation> {
        self.group.elements().iter().map(|e| e.perm.clone()).collect()
    }

    /// Action on u₁..uₙ, v₁..vₙ for every element: t acts trivially, τ as on
    /// x and y, σ̄ swaps uᵢ and vᵢ.
    pub fn uv_action(&self) -> Result<Vec<Matrix>, GroupError> {
        let n = self.n;
        let mats: Vec<Matrix> = gn_generators(n)
            .iter()
            .map(|(name, g)| match name.as_str() {
                "t" => Matrix::identity(2 * n),
                "sigmabar" => {
                    let mut m = Matrix::zero(2 * n);
                    for i in 0..n {
                        m.set(n + i, i, CycloElement::one());
                        m.set(i, n + i, CycloElement::one());
                    }
                    m
                }
                _ => tau_matrix(&g.perm),
            })
            .collect();
        self.group
            .extend_map(&mats, Matrix::identity(2 * n))
            .map_err(|_| GroupError::NotHomomorphism)
    }

    /// Basis U₁..U_{n−1}, V₁..V_{n−1} of the sum-zero part of span{uᵢ, vᵢ},
    /// as coordinate columns.
    pub fn uv_basis(&self) -> Vec<Vec<CycloElement>> {
        let n = self.n;
        let inv_n = CycloElement::from_rational(ratio(1, n as i64));
        let mut out = Vec::new();
        for block in 0..2 {
            for i in 0..n - 1 {
                let mut v = vec![CycloElement::zero(); 2 * n];
                for j in 0..n {
                    v[block * n + j] = -&inv_n;
                }
                v[block * n + i] += &CycloElement::one();
                out.push(v);
            }
        }
        out
    }

    /// Character of span{Uᵢ, Vᵢ}, one value per group element.
    pub fn uv_character(&self) -> Result<Vec<CycloElement>, GroupError> {
        let basis = self.uv_basis();
        self.uv_action()?
            .iter()
            .map(|m| restricted_trace(m, &basis))
            .collect()
    }

    /// Character of W ⊕ W′ evaluated through the projection to Sₙ.
    pub fn w_plus_wprime_character(&self) -> Vec<CycloElement> {
        self.group
            .elements()
            .iter()
            .map(|e| {
                let fix = e.perm.fixed_points() as i64;
                CycloElement::from_int((fix - 1) * (1 + e.perm.sign()))
            })
            .collect()
    }
}

/// Trace of `m` restricted to the span of `basis` (coordinate columns).
/// Fails unless the span is invariant.
pub fn restricted_trace(m: &Matrix, basis: &[Vec<CycloElement>]) -> Result<CycloElement, GroupError> {
    let k = basis.len();
    let n = m.dim();
    // images M·b_j
    let images: Vec<Vec<CycloElement>> = basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|r| {
                    let mut s = CycloElement::zero();
                    for (c, bc) in b.iter().enumerate() {
                        if !bc.is_zero() {
                            s += &(m.get(r, c) * bc);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    // solve basis · R = images column by column via elimination on [B | images]
    let mut aug: Vec<Vec<CycloElement>> = (0..n)
        .map(|r| {
            let mut row: Vec<CycloElement> = basis.iter().map(|b| b[r].clone()).collect();
            row.extend(images.iter().map(|im| im[r].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
            return Err(GroupError::NotInvariant);
        };
        aug.swap(r, p);
        let inv = aug[r][c].inv().expect("nonzero");
        for j in 0..2 * k {
            aug[r][j] = &aug[r][j] * &inv;
        }
        for i in 0..n {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..2 * k {
                    let t = &f * &aug[r][j];
                    aug[i][j] -= &t;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    // rows below the pivots must vanish in the image part
    if aug[k..].iter().any(|row| row[k..].iter().any(|x| !x.is_zero())) {
        return Err(GroupError::NotInvariant);
    }
    let mut tr = CycloElement::zero();
    for j in 0..k {
        tr += &aug[j][k + j];
    }
    Ok(tr)
}
