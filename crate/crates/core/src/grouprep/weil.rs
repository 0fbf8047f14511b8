use super::{GroupError, Matrix};
use crate::exactfield::{CycloElement, GaloisAut};

/// Subfields of Q(ζ) used as bases for restriction of scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Q,
    QSqrt2,
    QSqrtm1,
    QSqrtm2,
}

impl BaseField {
    pub fn contains(self, a: &CycloElement) -> bool {
        match self {
            BaseField::Q => a.is_rational(),
            BaseField::QSqrt2 => GaloisAut::J7.apply(a) == *a,
            BaseField::QSqrtm1 => GaloisAut::J5.apply(a) == *a,
            BaseField::QSqrtm2 => GaloisAut::J3.apply(a) == *a,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseField::Q => "Q",
            BaseField::QSqrt2 => "Q(sqrt2)",
            BaseField::QSqrtm1 => "Q(i)",
            BaseField::QSqrtm2 => "Q(sqrtm2)",
        }
    }
}

/// How to expand one square root θ: entries are written p + q·θ with p, q in
/// `base`, and θ is replaced by `companion`.
#[derive(Clone, Debug)]
pub struct WeilSpec {
    pub theta: CycloElement,
    pub companion: [[i64; 2]; 2],
    /// Automorphism negating θ and fixing `base`.
    pub involution: GaloisAut,
    pub base: BaseField,
}

impl WeilSpec {
    /// θ = √−1 with companion [[0, −1], [1, 0]].
    pub fn sqrtm1_over(base: BaseField) -> Self {
        let involution = match base {
            BaseField::QSqrtm2 => GaloisAut::J3,
            _ => GaloisAut::J7,
        };
        WeilSpec {
            theta: CycloElement::sqrtm1(),
            companion: [[0, -1], [1, 0]],
            involution,
            base,
        }
    }

    /// θ = √2 with companion [[0, 2], [1, 0]].
    pub fn sqrt2_over(base: BaseField) -> Self {
        WeilSpec {
            theta: CycloElement::sqrt2(),
            companion: [[0, 2], [1, 0]],
            involution: GaloisAut::J5,
            base,
        }
    }
}

/// Splits `a = p + q·θ`, failing unless p and q lie in the base field.
pub fn decompose(a: &CycloElement, spec: &WeilSpec) -> Option<(CycloElement, CycloElement)> {
    let ga = spec.involution.apply(a);
    let half = CycloElement::from_rational(crate::exactfield::Rational::new(1.into(), 2.into()));
    let p = &(a + &ga) * &half;
    let two_theta = spec.theta.scale(&crate::exactfield::Rational::from_integer(2.into()));
    let q = &(a - &ga) * &two_theta.inv().ok()?;
    (spec.base.contains(&p) && spec.base.contains(&q)).then_some((p, q))
}

/// Replaces every entry p + q·θ by the in-place 2×2 block p·I + q·companion.
pub fn weil_restrict(m: &Matrix, spec: &WeilSpec) -> Result<Matrix, GroupError> {
    let n = m.dim();
    let mut out = Matrix::zero(2 * n);
    for r in 0..n {
        for c in 0..n {
            let (p, q) = decompose(m.get(r, c), spec).ok_or(GroupError::NotDecomposable {
                row: r,
                col: c,
                base: spec.base.name(),
            })?;
            for i in 0..2 {
                for j in 0..2 {
                    let mut v = q.scale(&crate::exactfield::Rational::from_integer(spec.companion[i][j].into()));
                    if i == j {
                        v += &p;
                    }
                    out.set(2 * r + i, 2 * c + j, v);
                }
            }
        }
    }
    Ok(out)
}
