//! Reduction of cyclotomic integers modulo the fixed prime 𝔐 over 2.
//!
//! The residue field of `ℤ[ζ_n]` (`n` odd) is `GF(2^d)` with `d = ord_n(2)`,
//! stored as `GF(2)[x]/(f)` in a `u128`. For `d <= 20` the modulus `f` is
//! the Conway polynomial and `ζ_n ↦ x^((2^d-1)/n)`, which agrees with the
//! tables in [`crate::ffield`]. Larger degrees use the least irreducible
//! polynomial of degree `d` and a deterministic element of order `n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use super::{CycError, CycNum};
use crate::ffield::{conway_polynomial, FFElem, Gf2m, MAX_DEGREE};
use crate::numth::{mod_inverse, odd_part, order_of_two, prime_factors, two_part};

/// Largest residue degree supported.
pub const MAX_RESIDUE_DEGREE: u32 = 127;

/// An element of a residue field, as a polynomial in `x` modulo `f`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ResidueElem(pub u128);

impl ResidueElem {
    pub const ZERO: ResidueElem = ResidueElem(0);
    pub const ONE: ResidueElem = ResidueElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Multiplication in `GF(2)[x]/(f)` for `deg f = d <= 127`, `f` given
/// without its leading term.
fn mulmod(mut a: u128, mut b: u128, low: u128, d: u32) -> u128 {
    let top = 1u128 << (d - 1);
    let mask = (1u128 << d) - 1;
    let mut acc = 0u128;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        let carry = a & top != 0;
        a = (a << 1) & mask;
        if carry {
            a ^= low;
        }
    }
    acc
}

fn powmod(mut a: u128, mut e: u128, low: u128, d: u32) -> u128 {
    let mut r = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, low, d);
        }
        a = mulmod(a, a, low, d);
        e >>= 1;
    }
    r
}

/// Rabin's irreducibility test for `x^d + low`.
fn is_irreducible(low: u128, d: u32) -> bool {
    if low & 1 == 0 {
        return false;
    }
    let x = if d == 1 { low } else { 2u128 };
    let frob = |k: u32| {
        let mut y = x;
        for _ in 0..k {
            y = mulmod(y, y, low, d);
        }
        y
    };
    if frob(d) != x {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|p| {
        let h = frob(d / p as u32) ^ x;
        // gcd(h, f) must be 1; compute in GF(2)[x] with f = x^d + low
        gcd_with_modulus(h, low, d) == 1
    })
}

/// `gcd(h, x^d + low)` for `deg h < d`, returned as a bitmask.
fn gcd_with_modulus(h: u128, low: u128, d: u32) -> u128 {
    if h == 0 {
        return 0; // gcd is f itself, not 1
    }
    // one division step brings f below 128 bits
    let deg = |p: u128| 127 - p.leading_zeros();
    let mut a = h;
    // f mod h, computed as x^d mod h + low mod h
    let mut xd = 1u128;
    let dh = deg(h);
    let reduce = |mut p: u128| {
        while p != 0 && deg(p) >= dh {
            p ^= h << (deg(p) - dh);
        }
        p
    };
    for _ in 0..d {
        xd = reduce(xd << 1);
    }
    let mut b = reduce(xd ^ reduce(low));
    while b != 0 {
        let mut r = a;
        let db = deg(b);
        while r != 0 && deg(r) >= db {
            r ^= b << (deg(r) - db);
        }
        a = b;
        b = r;
    }
    a
}

/// `GF(2^d)` viewed as the residue field of `ℤ[ζ_n]` for odd `n`.
pub struct ResidueField {
    conductor: usize,
    degree: u32,
    /// The modulus minus its leading term `x^d`.
    low: u128,
    embedding: u128,
    conway: bool,
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueField(n={}, GF(2^{}))", self.conductor, self.degree)
    }
}

impl ResidueField {
    pub fn new(n: usize) -> Result<Arc<Self>, CycError> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<ResidueField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rf) = cache.read().unwrap().get(&n) {
            return Ok(rf.clone());
        }
        let rf = Arc::new(Self::build(n)?);
        cache.write().unwrap().insert(n, rf.clone());
        Ok(rf)
    }

    fn build(n: usize) -> Result<Self, CycError> {
        let unsupported = || CycError::ConductorMismatch { value: n, field: n };
        if n == 0 || n.is_multiple_of(2) {
            return Err(unsupported());
        }
        let d = order_of_two(n as u64);
        if d > MAX_RESIDUE_DEGREE {
            return Err(unsupported());
        }
        let unit_order = (1u128 << d) - 1;
        let cofactor = unit_order / n as u128;
        if d <= MAX_DEGREE {
            let f = conway_polynomial(d).expect("degree within table") as u128;
            let low = f ^ (1u128 << d);
            let x = if d == 1 { 1 } else { 2 };
            let embedding = powmod(x, cofactor, low, d);
            return Ok(ResidueField { conductor: n, degree: d, low, embedding, conway: true });
        }
        let low = (1u128..)
            .step_by(2)
            .find(|&low| is_irreducible(low, d))
            .expect("irreducible polynomials exist in every degree");
        let primes = prime_factors(n as u64);
        let embedding = (2u128..)
            .map(|y| powmod(y, cofactor, low, d))
            .find(|&a| primes.iter().all(|&p| powmod(a, (n as u64 / p) as u128, low, d) != 1))
            .expect("the unit group is cyclic of order divisible by n");
        Ok(ResidueField { conductor: n, degree: d, low, embedding, conway: false })
    }

    /// The smallest residue field into which all the given numbers reduce.
    pub fn for_values<'a>(values: impl IntoIterator<Item = &'a CycNum>) -> Result<Arc<Self>, CycError> {
        let n = values
            .into_iter()
            .fold(1usize, |acc, v| acc.lcm(&(odd_part(v.conductor() as u64) as usize)));
        Self::new(n)
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Whether the modulus is the Conway polynomial.
    pub fn is_conway(&self) -> bool {
        self.conway
    }

    /// The modulus as a bitmask including `x^d`.
    pub fn modulus(&self) -> u128 {
        self.low | (1u128 << self.degree)
    }

    /// The table-driven field with the same elements, when `d <= 20`.
    pub fn ffield(&self) -> Option<Arc<Gf2m>> {
        self.conway.then(|| Gf2m::get(self.degree).expect("degree within table"))
    }

    /// Image of `ζ_n`.
    pub fn embedding(&self) -> ResidueElem {
        ResidueElem(self.embedding)
    }

    pub fn add(&self, a: ResidueElem, b: ResidueElem) -> ResidueElem {
        ResidueElem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: ResidueElem, b: ResidueElem) -> ResidueElem {
        ResidueElem(mulmod(a.0, b.0, self.low, self.degree))
    }

    pub fn pow(&self, a: ResidueElem, e: u128) -> ResidueElem {
        ResidueElem(powmod(a.0, e, self.low, self.degree))
    }

    /// Image of `ζ_c` for a conductor `c = 2^a c'` with `c' | n`.
    pub fn root_image(&self, c: usize) -> Result<ResidueElem, CycError> {
        let odd = odd_part(c as u64) as usize;
        if !self.conductor.is_multiple_of(odd) {
            return Err(CycError::ConductorMismatch { value: c, field: self.conductor });
        }
        let base = self.pow(self.embedding(), (self.conductor / odd) as u128);
        // ζ_c^(2^a) = ζ_{c'}, and 2-power roots of unity reduce to 1
        let w = mod_inverse(two_part(c as u64) % odd as u64, odd as u64).expect("odd modulus");
        Ok(self.pow(base, w as u128))
    }

    /// The ring homomorphism `R → GF(2^d)`.
    pub fn reduce(&self, a: &CycNum) -> Result<ResidueElem, CycError> {
        let r = self.root_image(a.conductor())?;
        let mut acc = ResidueElem::ZERO;
        let mut power = ResidueElem::ONE;
        for c in a.coeffs() {
            if c.denom().is_even() {
                return Err(CycError::NotLocal(a.to_string()));
            }
            // odd denominators reduce to 1
            if c.numer().is_odd() {
                acc = self.add(acc, power);
            }
            power = self.mul(power, r);
        }
        Ok(acc)
    }

    /// [`Self::reduce`] landing in the table-driven field (`d <= 20` only).
    pub fn reduce_ff(&self, a: &CycNum) -> Result<FFElem, CycError> {
        if !self.conway {
            return Err(CycError::ConductorMismatch { value: a.conductor(), field: self.conductor });
        }
        Ok(FFElem(self.reduce(a)?.0 as u32))
    }

    /// Whether `a ∈ 2R`. For odd conductors 2 is unramified, so for `a ∈ R`
    /// this is `reduce(a) = 0`; even conductors are rejected.
    pub fn in_two_r(&self, a: &CycNum) -> Result<bool, CycError> {
        if a.conductor().is_multiple_of(2) {
            return Err(CycError::ConductorMismatch { value: a.conductor(), field: self.conductor });
        }
        Ok(self.reduce(a)?.is_zero())
    }
}
