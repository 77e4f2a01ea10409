//! Polynomials over GF(2) of degree below 64, packed into a `u128`
//! (products of two such polynomials still fit).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numth::order_of_two;

/// Bit `i` is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Poly(pub u128);

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({:#b})", self.0)
    }
}

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    pub const X: Gf2Poly = Gf2Poly(2);

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: Self) -> Self {
        Gf2Poly(self.0 ^ other.0)
    }

    /// Carry-less product; panics if the result would not fit.
    pub fn mul(self, other: Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Self::ZERO;
        };
        assert!(da + db < 128, "GF(2) polynomial product overflows");
        let mut acc = 0u128;
        let mut b = other.0;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= self.0 << shift;
            }
            b >>= 1;
            shift += 1;
        }
        Gf2Poly(acc)
    }

    pub fn div_rem(self, d: Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut q = 0u128;
        let mut r = self.0;
        while let Some(dr) = Gf2Poly(r).degree() {
            if dr < dd {
                break;
            }
            q |= 1 << (dr - dd);
            r ^= d.0 << (dr - dd);
        }
        (Gf2Poly(q), Gf2Poly(r))
    }

    pub fn rem(self, d: Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(mut a: Self, mut b: Self) -> Self {
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(self, other: Self, m: Self) -> Self {
        self.rem(m).mul(other.rem(m)).rem(m)
    }

    /// Reduces an integer polynomial (constant term first) modulo 2.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= 128);
        let bits = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.rem_euclid(2) == 1)
            .fold(0u128, |acc, (i, _)| acc | 1 << i);
        Gf2Poly(bits)
    }

    /// Whether `self` is irreducible (Rabin's test).
    pub fn is_irreducible(self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        // x^(2^n) ≡ x and gcd(x^(2^(n/p)) - x, f) = 1 for primes p | n
        let frob = |k: u32| {
            let mut y = Self::X;
            for _ in 0..k {
                y = y.mul_mod(y, self);
            }
            y
        };
        if frob(n) != Self::X.rem(self) {
            return false;
        }
        crate::numth::prime_factors(n as u64)
            .into_iter()
            .all(|p| Self::gcd(self, frob(n / p as u32).add(Self::X)).degree() == Some(0))
    }
}

/// Factors `Φ_n mod 2` (`n` odd, `φ(n) < 64`) into its irreducible factors,
/// which all have degree `ord_n(2)`. Factors are returned sorted.
pub fn cyclotomic_factors_mod2(n: usize) -> Vec<Gf2Poly> {
    assert!(n % 2 == 1, "n must be odd");
    let phi = crate::cyclo::cyclotomic_poly(n);
    let f = Gf2Poly::from_int_coeffs(&phi);
    let d = order_of_two(n as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let mut out = Vec::new();
    equal_degree_split(f, d, &mut rng, &mut out);
    out.sort();
    out
}

/// Equal-degree factorization over GF(2) using the trace map
/// `r + r^2 + … + r^(2^(d-1))`.
fn equal_degree_split(f: Gf2Poly, d: u32, rng: &mut ChaCha8Rng, out: &mut Vec<Gf2Poly>) {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f);
        return;
    }
    loop {
        let r = Gf2Poly(rng.random::<u128>() & ((1u128 << deg) - 1));
        let mut t = r;
        let mut sq = r;
        for _ in 1..d {
            sq = sq.mul_mod(sq, f);
            t = t.add(sq);
        }
        let g = Gf2Poly::gcd(f, t);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let (h, rem) = f.div_rem(g);
            debug_assert!(rem.is_zero());
            equal_degree_split(g, d, rng, out);
            equal_degree_split(h, d, rng, out);
            return;
        }
    }
}
