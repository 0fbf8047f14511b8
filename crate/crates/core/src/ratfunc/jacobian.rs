use rayon::prelude::*;

use super::RatFunc;
use crate::exactfield::CycloElement;
use crate::multipoly::{Poly, VarSet};

/// Rank of (∂fᵢ/∂xⱼ) over the rational function field.
///
/// Row i is scaled by denᵢ², which keeps every entry polynomial without
/// changing the rank, then eliminated fraction-free.
///
/// Specialising the variables can only lower the rank, so a point where the
/// matrix already has full rank settles the answer without elimination.
pub fn jacobian_rank(elements: &[RatFunc], vars: &VarSet) -> usize {
    let rows: Vec<Vec<Poly>> = elements
        .par_iter()
        .map(|f| {
            let f = f.reindex(vars).expect("element lives in the given variables");
            let (n, d) = (f.num(), f.den());
            (0..vars.len())
                .map(|j| &(&n.derivative_at(j) * d) - &(n * &d.derivative_at(j)))
                .collect()
        })
        .collect();
    let full = rows.len().min(vars.len());
    if (1..=3).any(|k| rank_at_point(&rows, k) == full) {
        return full;
    }
    polynomial_matrix_rank(rows)
}

/// Rank of `m` evaluated at a fixed small integer point (`k` picks the point).
fn rank_at_point(m: &[Vec<Poly>], k: i64) -> usize {
    let Some(first) = m.first().and_then(|r| r.first()) else {
        return 0;
    };
    let point: Vec<CycloElement> = (0..first.vars().len() as i64)
        .map(|j| CycloElement::from_int(2 + k * (3 * j + 1) + j * j))
        .collect();
    let mut a: Vec<Vec<CycloElement>> = m.iter().map(|row| row.iter().map(|p| p.eval(&point)).collect()).collect();
    field_rank(&mut a)
}

fn field_rank(a: &mut [Vec<CycloElement>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= &t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Bareiss elimination with row pivoting over the polynomial ring.
pub fn polynomial_matrix_rank(mut m: Vec<Vec<Poly>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev: Option<Poly> = None;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].num_terms());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let pr = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            let a = row[c].clone();
            for j in c + 1..cols {
                let t = &(&pr[c] * &row[j]) - &(&a * &pr[j]);
                // a failed division only rescales by a nonzero factor
                row[j] = match &prev {
                    Some(d) => t.div_exact(d).unwrap_or(t),
                    None => t,
                };
            }
            row[c] = Poly::zero(a.vars());
        }
        prev = Some(pr[c].clone());
        r += 1;
    }
    r
}
