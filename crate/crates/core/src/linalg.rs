//! Exact integer rank by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix given as rows, computed exactly.
///
/// Rows are folded into an echelon basis one at a time. Each reduction step
/// cross-multiplies by the pivot and divides out the row content, so no
/// rationals are needed. The fast path runs in `i128` with checked
/// arithmetic and restarts over `BigInt` on overflow.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => rank_big(rows),
    }
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    // (pivot column, row) pairs
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::with_capacity(ncols);
    for r in rows {
        if basis.len() == ncols {
            break;
        }
        let mut v: Vec<i128> = r.iter().map(|&x| i128::from(x)).collect();
        for (col, b) in &basis {
            let f = v[*col];
            if f == 0 {
                continue;
            }
            let p = b[*col];
            for (x, &bx) in v.iter_mut().zip(b) {
                *x = x.checked_mul(p)?.checked_sub(f.checked_mul(bx)?)?;
            }
            let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                v.iter_mut().for_each(|x| *x /= g);
            }
        }
        if let Some(col) = v.iter().position(|&x| x != 0) {
            basis.push((col, v));
        }
    }
    Some(basis.len())
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::with_capacity(ncols);
    for r in rows {
        if basis.len() == ncols {
            break;
        }
        let mut v: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        for (col, b) in &basis {
            if v[*col].is_zero() {
                continue;
            }
            let f = v[*col].clone();
            let p = &b[*col];
            for (x, bx) in v.iter_mut().zip(b) {
                *x = &*x * p - &f * bx;
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g.abs() > BigInt::one() {
                v.iter_mut().for_each(|x| *x = &*x / &g);
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            basis.push((col, v));
        }
    }
    basis.len()
}
