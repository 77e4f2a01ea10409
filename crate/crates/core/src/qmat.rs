//! Dense exact linear algebra over the rationals.
//!
//! Matrices here are small (at most a few hundred rows), so plain Gaussian
//! elimination on `BigRational` entries is all that is needed.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (lo, hi) = m.split_at_mut(r.max(i));
                let (src, dst) = if i < r { (&hi[0], &mut lo[i]) } else { (&lo[r], &mut hi[0]) };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in row order.
pub fn independent_rows(m: &QMatrix) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in m.iter().enumerate() {
        let mut v = row.clone();
        for (pc, b) in &basis {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(pc) = (0..cols).find(|&c| !v[c].is_zero()) {
            let inv = v[pc].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            basis.push((pc, v));
            chosen.push(idx);
            if chosen.len() == cols {
                break;
            }
        }
    }
    chosen
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut aug: QMatrix = m
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// One solution of `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &QMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect())
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in piv.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    Some(x)
}

pub fn mat_vec(m: &QMatrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
