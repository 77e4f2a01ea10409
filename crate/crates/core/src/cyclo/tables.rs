//! Cached per-conductor data: cyclotomic polynomials, reductions of the
//! monomials `x^e mod Φ_n`, and the restriction maps `ℚ(ζ_n) → ℚ(ζ_m)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::numth::{divisors, euler_phi};
use crate::qmat;

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_poly(n: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in divisors(n as u64) {
        let d = d as usize;
        if d == n {
            continue;
        }
        num = div_monic(&num, &cyclotomic_poly(d));
    }
    let p = Arc::new(num);
    cache.write().unwrap().insert(n, p.clone());
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[k + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}

/// Sparse reductions of `x^e` modulo `Φ_n` for `0 <= e < n`.
pub struct PowerTable {
    pub n: usize,
    pub phi: usize,
    pub monomials: Vec<Vec<(usize, i64)>>,
}

impl PowerTable {
    #[inline]
    pub fn monomial(&self, e: usize) -> &[(usize, i64)] {
        &self.monomials[e % self.n]
    }
}

pub fn power_table(n: usize) -> Arc<PowerTable> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<PowerTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let poly = cyclotomic_poly(n);
    let phi = poly.len() - 1;
    let mut monomials = Vec::with_capacity(n);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    if phi == 0 {
        unreachable!("Φ_n has positive degree");
    }
    for _ in 0..n {
        monomials.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        );
        // multiply by x and reduce the overflowing x^phi term
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * poly[i];
            }
        }
    }
    let t = Arc::new(PowerTable { n, phi, monomials });
    cache.write().unwrap().insert(n, t.clone());
    t
}

/// Restriction data for `ℚ(ζ_m) ⊂ ℚ(ζ_n)` (`m | n`): the embedding of the
/// power basis of the subfield, a set of rows on which that embedding is
/// invertible, and the inverse of the selected square block.
pub struct Descent {
    pub pivots: Vec<usize>,
    pub inverse: Vec<Vec<BigRational>>,
}

type DescentCache = RwLock<HashMap<(usize, usize), Arc<Descent>>>;

pub fn descent(n: usize, m: usize) -> Arc<Descent> {
    static CACHE: OnceLock<DescentCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.read().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let table = power_table(n);
    let phi_m = euler_phi(m as u64) as usize;
    let step = n / m;
    // embedding matrix E (phi_n x phi_m): column j is ζ_n^{step*j}
    let mut e = vec![vec![BigRational::from_integer(BigInt::from(0)); phi_m]; table.phi];
    for j in 0..phi_m {
        for &(i, c) in table.monomial(step * j) {
            e[i][j] = BigRational::from_integer(BigInt::from(c));
        }
    }
    let pivots = qmat::independent_rows(&e);
    assert_eq!(pivots.len(), phi_m, "subfield power basis must embed injectively");
    let square: Vec<Vec<BigRational>> = pivots.iter().map(|&i| e[i].clone()).collect();
    let inverse = qmat::inverse(&square).expect("selected rows are independent");
    let d = Arc::new(Descent { pivots, inverse });
    cache.write().unwrap().insert((n, m), d.clone());
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn monomial_reduction_wraps() {
        let t = power_table(5);
        assert_eq!(t.phi, 4);
        // ζ^4 = -1 - ζ - ζ^2 - ζ^3
        assert_eq!(t.monomial(4), &[(0, -1), (1, -1), (2, -1), (3, -1)]);
        assert_eq!(t.monomial(5), &[(0, 1)]);
    }

    #[test]
    fn monomial_coefficients_stay_small() {
        for n in [105usize, 165, 231, 1155] {
            let t = power_table(n);
            let max = t.monomials.iter().flatten().map(|&(_, c)| c.abs()).max().unwrap();
            assert!(max < 1 << 20, "n={n}: {max}");
        }
    }
}
