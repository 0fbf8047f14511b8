//! The binary octahedral group: the two-dimensional representation over
//! Q(ζ), its restrictions of scalars, and the expected literal matrices.

use std::collections::{BTreeMap, BTreeSet};

use super::weil::{weil_restrict, BaseField, WeilSpec};
use super::{closure, GroupElement, GroupError, LabeledGroup, Matrix, Permutation};
use crate::exactfield::{ratio, CycloElement};

/// Generators (a′, b, c) of one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub aprime: Matrix,
    pub b: Matrix,
    pub c: Matrix,
}

impl Generators {
    pub fn as_vec(&self) -> Vec<Matrix> {
        vec![self.aprime.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn dim(&self) -> usize {
        self.aprime.dim()
    }

    pub fn map(&self, f: impl Fn(&Matrix) -> Result<Matrix, GroupError>) -> Result<Generators, GroupError> {
        Ok(Generators {
            aprime: f(&self.aprime)?,
            b: f(&self.b)?,
            c: f(&self.c)?,
        })
    }
}

/// Names of the representations, with the short aliases the CLI accepts.
pub const REPRESENTATIONS: [(&str, &str, &str); 5] = [
    ("two_dim", "3.1", "2-dimensional over Q(zeta)"),
    ("real4_sqrt2", "3.2", "4-dimensional over Q(sqrt2)"),
    ("real4_sqrtm2", "3.3", "4-dimensional over Q(sqrtm2)"),
    ("four_dim_over_qi", "3.4", "4-dimensional over Q(i)"),
    ("rational8", "3.5", "8-dimensional over Q"),
];

pub fn resolve_representation(name: &str) -> Option<&'static str> {
    REPRESENTATIONS
        .iter()
        .find(|(n, alias, _)| *n == name || *alias == name)
        .map(|(n, _, _)| *n)
}

fn z(k: i64) -> CycloElement {
    CycloElement::zeta_pow(k)
}

/// `(re + im·√−1) / den`.
fn gauss(re: i64, im: i64, den: i64) -> CycloElement {
    &CycloElement::from_rational(ratio(re, den)) + &CycloElement::sqrtm1().scale(&ratio(im, den))
}

fn int_rows(rows: &[&[i64]]) -> Matrix {
    Matrix::from_int_rows(rows)
}

/// The two-dimensional representation over Q(ζ).
pub fn two_dim() -> Generators {
    let i = CycloElement::sqrtm1();
    let o = CycloElement::zero();
    let inv_sqrt2 = CycloElement::sqrt2().inv().expect("nonzero");
    Generators {
        aprime: Matrix::diagonal(&[z(1), z(7)]),
        b: Matrix::from_rows(vec![vec![o.clone(), i.clone()], vec![i, o]]),
        c: Matrix::from_rows(vec![vec![z(7), z(7)], vec![z(5), z(1)]]).scale(&inv_sqrt2),
    }
}

fn c4_literal() -> Matrix {
    int_rows(&[&[1, 1, 1, 1], &[-1, 1, -1, 1], &[-1, 1, 1, -1], &[-1, -1, 1, 1]])
        .scale(&CycloElement::from_rational(ratio(1, 2)))
}

fn b4_literal() -> Matrix {
    int_rows(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]])
}

/// Expected matrices of each restriction, entered literally.
pub fn literal(name: &str) -> Option<Generators> {
    let half = CycloElement::from_rational(ratio(1, 2));
    Some(match name {
        "two_dim" => two_dim(),
        "real4_sqrt2" => Generators {
            aprime: int_rows(&[&[1, -1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, -1, 1]])
                .scale(&CycloElement::sqrt2().inv().expect("nonzero")),
            b: b4_literal(),
            c: c4_literal(),
        },
        "real4_sqrtm2" => Generators {
            aprime: int_rows(&[&[1, 1, 0, 0], &[-1, 1, 0, 0], &[0, 0, -1, 1], &[0, 0, -1, -1]])
                .scale(&CycloElement::sqrtm2().scale(&ratio(1, 2))),
            b: b4_literal(),
            c: c4_literal(),
        },
        "four_dim_over_qi" => {
            let o = CycloElement::zero();
            let i = CycloElement::sqrtm1();
            Generators {
                aprime: Matrix::from_rows(vec![
                    vec![o.clone(), gauss(1, 1, 1), o.clone(), o.clone()],
                    vec![gauss(1, 1, 2), o.clone(), o.clone(), o.clone()],
                    vec![o.clone(), o.clone(), o.clone(), gauss(1, -1, 1)],
                    vec![o.clone(), o.clone(), gauss(1, -1, 2), o.clone()],
                ]),
                b: Matrix::from_rows(vec![
                    vec![o.clone(), o.clone(), i.clone(), o.clone()],
                    vec![o.clone(), o.clone(), o.clone(), i.clone()],
                    vec![i.clone(), o.clone(), o.clone(), o.clone()],
                    vec![o.clone(), i.clone(), o.clone(), o.clone()],
                ]),
                c: Matrix::from_rows(vec![
                    vec![gauss(1, -1, 2), o.clone(), gauss(1, -1, 2), o.clone()],
                    vec![o.clone(), gauss(1, -1, 2), o.clone(), gauss(1, -1, 2)],
                    vec![gauss(-1, -1, 2), o.clone(), gauss(1, 1, 2), o.clone()],
                    vec![o.clone(), gauss(-1, -1, 2), o.clone(), gauss(1, 1, 2)],
                ]),
            }
        }
        "rational8" => Generators {
            aprime: int_rows(&[
                &[0, 2, 0, -2, 0, 0, 0, 0],
                &[1, 0, -1, 0, 0, 0, 0, 0],
                &[0, 2, 0, 2, 0, 0, 0, 0],
                &[1, 0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 2, 0, 2],
                &[0, 0, 0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 0, 0, -2, 0, 2],
                &[0, 0, 0, 0, -1, 0, 1, 0],
            ])
            .scale(&half),
            b: int_rows(&[
                &[0, 0, 0, 0, 0, 0, -1, 0],
                &[0, 0, 0, 0, 0, 0, 0, -1],
                &[0, 0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 0, 0],
                &[0, 0, -1, 0, 0, 0, 0, 0],
                &[0, 0, 0, -1, 0, 0, 0, 0],
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0],
            ]),
            c: int_rows(&[
                &[1, 0, 1, 0, 1, 0, 1, 0],
                &[0, 1, 0, 1, 0, 1, 0, 1],
                &[-1, 0, 1, 0, -1, 0, 1, 0],
                &[0, -1, 0, 1, 0, -1, 0, 1],
                &[-1, 0, 1, 0, 1, 0, -1, 0],
                &[0, -1, 0, 1, 0, 1, 0, -1],
                &[-1, 0, -1, 0, 1, 0, 1, 0],
                &[0, -1, 0, -1, 0, 1, 0, 1],
            ])
            .scale(&half),
        },
        _ => return None,
    })
}

/// Computes a representation by restriction of scalars from its source.
pub fn computed(name: &str) -> Result<Generators, GroupError> {
    match name {
        "two_dim" => Ok(two_dim()),
        "real4_sqrt2" => two_dim().map(|m| weil_restrict(m, &WeilSpec::sqrtm1_over(BaseField::QSqrt2))),
        "real4_sqrtm2" => two_dim().map(|m| weil_restrict(m, &WeilSpec::sqrtm1_over(BaseField::QSqrtm2))),
        "four_dim_over_qi" => two_dim().map(|m| weil_restrict(m, &WeilSpec::sqrt2_over(BaseField::QSqrtm1))),
        "rational8" => computed("real4_sqrt2")?.map(|m| weil_restrict(m, &WeilSpec::sqrt2_over(BaseField::Q))),
        other => Err(GroupError::UnknownRepresentation(other.to_string())),
    }
}

/// Each defining relation with whether it holds.
pub fn verify_presentation(g: &Generators) -> Vec<(&'static str, bool)> {
    let n = g.dim();
    let id = Matrix::identity(n);
    let minus = id.neg();
    let (a, b, c) = (&g.aprime, &g.b, &g.c);
    let pw = |m: &Matrix, e: i64| m.pow(e).unwrap_or_else(|| Matrix::zero(n));
    vec![
        ("a'^8 = 1", pw(a, 8) == id),
        ("b^4 = 1", pw(b, 4) == id),
        ("c^6 = 1", pw(c, 6) == id),
        ("b a' b^-1 = a'^-1", b.mul(a).mul(&pw(b, -1)) == pw(a, -1)),
        ("c b c^-1 = a'^2", c.mul(b).mul(&pw(c, -1)) == pw(a, 2)),
        ("(a'c)^2 = -a'^2 b", pw(&a.mul(c), 2) == pw(a, 2).mul(b).neg()),
        ("a'^4 = -1", pw(a, 4) == minus),
        ("b^2 = -1", pw(b, 2) == minus),
        ("c^3 = -1", pw(c, 3) == minus),
    ]
}

pub fn presentation_holds(g: &Generators) -> bool {
    verify_presentation(g).iter().all(|(_, ok)| *ok)
}

pub fn closure_of(g: &Generators) -> Result<LabeledGroup<Matrix>, GroupError> {
    closure(&g.as_vec(), &["aprime", "b", "c"], Matrix::identity(g.dim()), 1000)
}

/// Images of a′, b, c in S₄.
pub fn s4_projection() -> [Permutation; 3] {
    [
        Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).expect("valid"),
        Permutation::from_cycles(4, &[&[1, 4], &[2, 3]]).expect("valid"),
        Permutation::from_cycles(4, &[&[1, 2, 3]]).expect("valid"),
    ]
}

#[derive(Clone, Debug)]
pub struct QuotientCheck {
    pub is_homomorphism: bool,
    /// Indices of the kernel, empty when not a homomorphism.
    pub kernel: Vec<usize>,
    pub images: Vec<Permutation>,
}

/// Extends generator images to the whole group and reports the kernel.
pub fn quotient_check<T: GroupElement>(g: &LabeledGroup<T>, images: &[Permutation]) -> QuotientCheck {
    let n = images.first().map_or(1, |p| p.degree());
    match g.extend_map(images, Permutation::identity(n)) {
        Ok(imgs) => QuotientCheck {
            is_homomorphism: true,
            kernel: (0..g.order()).filter(|&i| imgs[i].is_identity()).collect(),
            images: imgs,
        },
        Err(_) => QuotientCheck {
            is_homomorphism: false,
            kernel: Vec::new(),
            images: Vec::new(),
        },
    }
}

/// For each permutation in the image, the orders of its preimages.
pub fn lift_orders<T: GroupElement>(g: &LabeledGroup<T>, proj: &[Permutation]) -> BTreeMap<Permutation, Vec<usize>> {
    let mut out: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
    for (i, p) in proj.iter().enumerate() {
        out.entry(p.clone()).or_default().push(g.element_order(i));
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Lift orders grouped by cycle type.
pub fn lift_orders_by_type(table: &BTreeMap<Permutation, Vec<usize>>) -> BTreeMap<Vec<usize>, BTreeSet<usize>> {
    let mut out: BTreeMap<Vec<usize>, BTreeSet<usize>> = BTreeMap::new();
    for (p, orders) in table {
        out.entry(p.cycle_type()).or_default().extend(orders.iter().copied());
    }
    out
}
