//! Exact integer linear algebra: ranks by fraction-free elimination and the
//! lattice index used for normalized volumes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank over the rationals of an integer matrix (Bareiss elimination).
pub fn rank(rows: &[Vec<i64>]) -> usize {
    rank_i128(rows).unwrap_or_else(|| rank_big(rows))
}

/// Affine dimension of a point set: the rank of the differences to the first
/// point. A single point has affine dimension 0.
///
/// Panics on an empty input.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    assert!(!points.is_empty(), "affine rank of an empty point set");
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let lhs = a[r][c].checked_mul(a[i][j])?;
                let rhs = a[i][c].checked_mul(a[r][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == nrows {
            break;
        }
    }
    Some(r)
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// For linearly independent integer rows spanning a `k`-dimensional space
/// `W`, the index of their integer span inside the saturated lattice
/// `W ∩ Z^n`. Equals the product of the Smith invariants, i.e. the gcd of the
/// `k x k` minors. Returns zero if the rows are dependent.
pub fn lattice_index(rows: &[Vec<i64>]) -> BigInt {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let n = a[0].len();
    let mut product = BigInt::one();
    // Reduce to diagonal form with unimodular row and column operations; the
    // product of the diagonal is invariant.
    for t in 0..k {
        loop {
            // Smallest nonzero entry in the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return BigInt::zero();
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in rest[0][t..n].iter_mut().zip(&top[t][t..n]) {
                        *x -= y * &q;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
        }
        product *= a[t][t].abs();
    }
    product
}
