//! Integer lattices spanned by exponent vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of an integer matrix (rows are
/// vectors), nonzero entries only.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the remaining block as pivot
        let Some((pr, pc)) = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..m {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the rest of the block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..n {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest nonzero of row/column t into the pivot
            let best_r = (t..m).filter(|&i| !a[i][t].is_zero()).min_by_key(|&i| a[i][t].abs());
            let best_c = (t..n).filter(|&j| !a[t][j].is_zero()).min_by_key(|&j| a[t][j].abs());
            if let Some(i) = best_r {
                if a[i][t].abs() < a[t][t].abs() {
                    a.swap(t, i);
                    continue;
                }
            }
            if let Some(j) = best_c {
                if a[t][j].abs() < a[t][t].abs() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Index of the lattice spanned by `rows` in Z^dim, or `None` when they do
/// not span a full-rank sublattice.
pub fn lattice_index(rows: &[Vec<i64>], dim: usize) -> Option<BigInt> {
    let inv = smith_invariants(rows);
    if inv.len() < dim {
        return None;
    }
    Some(inv.iter().fold(BigInt::one(), |acc, d| acc * d))
}

/// Rank over F₂ of 0/1 vectors.
pub fn rank_mod2(rows: &[Vec<u8>]) -> usize {
    let mut a: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|x| x & 1).collect()).collect();
    let n = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] == 1) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] == 1 {
                for j in 0..n {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        r += 1;
    }
    r
}
