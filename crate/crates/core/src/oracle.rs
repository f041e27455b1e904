//! Independent recomputation routes.
//!
//! Every function here answers a question the engines also answer, by a
//! deliberately different method: brute-force enumeration with pointwise
//! filtering instead of structured search, and fraction-free integer
//! elimination instead of rational Gauss-Jordan. None of the elimination
//! or enumeration code is shared with the engine modules.

use crate::linalg::{RatMatrix, Subspace};
use num::{BigInt, BigRational, One, Zero};

/// Right kernel of `a` by fraction-free Bareiss elimination over the
/// integers, followed by rational back-substitution. The basis is
/// normalized to reduced row echelon form locally so that the result can
/// be compared against the Gauss-Jordan route by structural equality.
pub fn bareiss_kernel(a: &RatMatrix) -> Subspace {
    let rows = a.rows();
    let cols = a.cols();

    // Clear denominators row by row; row scaling does not change the kernel.
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for e in a.row(i) {
                lcm = num::integer::lcm(lcm, e.denom().clone());
            }
            a.row(i)
                .iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect()
        })
        .collect();

    // Bareiss echelon with column pivoting. `prev` is the previous pivot;
    // every division below is exact.
    let mut prev = BigInt::one();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            for j in c..cols {
                let num = &pivot * &m[i][j] - &factor * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
        }
        prev = pivot;
        pivot_cols.push(c);
        r += 1;
    }

    // Back-substitute one kernel vector per free column.
    let rank = pivot_cols.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis: Vec<Vec<BigRational>> = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRational::zero(); cols];
        x[f] = BigRational::one();
        for i in (0..rank).rev() {
            let pc = pivot_cols[i];
            let mut s = BigRational::zero();
            for j in pc + 1..cols {
                if !m[i][j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from(m[i][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / BigRational::from(m[i][pc].clone());
        }
        basis.push(x);
    }

    let pivots = reduce_basis(&mut basis, cols);
    Subspace::from_echelon_rows_unchecked(cols, basis, pivots)
}

/// Local reduced-row-echelon normalization of a small row set. Kept
/// inside the oracle so the fraction-free route never touches the
/// engine's elimination.
fn reduce_basis(rows: &mut Vec<Vec<BigRational>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        let inv = rows[r][c].recip();
        for e in rows[r].iter_mut() {
            *e *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..width {
                let v = &rows[i][j] - &f * &rows[r][j];
                rows[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}
