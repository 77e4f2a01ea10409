//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CycNum`] is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` of
//! `ℚ(ζ_n)` with `ζ_n = exp(2πi/n)`, always at its minimal conductor (which is
//! never `2 mod 4`). Equal numbers therefore have identical representations.

mod residue;
mod tables;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use residue::{ResidueElem, ResidueField, MAX_RESIDUE_DEGREE};
pub use tables::{cyclotomic_poly, power_table};

use crate::numth::{euler_phi, lcm, prime_factors};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an algebraic integer")]
    NotAlgebraicInteger(String),
    #[error("{0} is not in the local ring at the chosen prime over 2 (even denominator)")]
    NotLocal(String),
    #[error("conductor {value} is not compatible with residue field of conductor {field}")]
    ConductorMismatch { value: usize, field: usize },
    #[error("malformed cyclotomic number {0:?}: {1}")]
    Parse(String, String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl CycNum {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(x: i64) -> Self {
        Self::from_rational(q(x))
    }

    pub fn from_rational(x: BigRational) -> Self {
        CycNum { conductor: 1, coeffs: vec![x] }
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: usize, k: i64) -> Self {
        assert!(n > 0);
        let e = k.rem_euclid(n as i64) as usize;
        let table = power_table(n);
        let mut coeffs = vec![BigRational::zero(); table.phi];
        for &(i, c) in table.monomial(e) {
            coeffs[i] = q(c);
        }
        Self::normalized(n, coeffs)
    }

    /// Builds a number from power-basis coordinates at conductor `n`; the
    /// result is normalized to its minimal conductor.
    pub fn from_coeffs(n: usize, coeffs: Vec<BigRational>) -> Result<Self, CycError> {
        let phi = euler_phi(n as u64) as usize;
        if n == 0 || coeffs.len() != phi {
            return Err(CycError::Parse(
                format!("{n}:{coeffs:?}"),
                format!("expected {phi} coordinates at conductor {n}"),
            ));
        }
        Ok(Self::normalized(n, coeffs))
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Integral power-basis coordinates, i.e. membership in `ℤ[ζ_n]`, which is
    /// the ring of integers of `ℚ(ζ_n)`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Whether the number lies in `2𝔸`, the even algebraic integers.
    /// Decided coordinatewise since `2𝔸 ∩ ℚ(ζ_n) = 2ℤ[ζ_n]`.
    pub fn is_twice_alg_int(&self) -> Result<bool, CycError> {
        if !self.is_integral() {
            return Err(CycError::NotAlgebraicInteger(self.to_string()));
        }
        Ok(self.coeffs.iter().all(|c| c.numer().is_even()))
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Complex conjugation `ζ_n ↦ ζ_n^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_n ↦ ζ_n^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as usize;
        assert_eq!(num_integer::gcd(k, n), 1, "galois exponent must be a unit");
        let table = power_table(n);
        let mut out = vec![BigRational::zero(); table.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in table.monomial(j * k) {
                out[i] += c * q(m);
            }
        }
        // same field, already at minimal conductor
        CycNum { conductor: n, coeffs: out }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&q(s))
    }

    pub fn div_int(&self, s: i64) -> Result<Self, CycError> {
        if s == 0 {
            return Err(CycError::DivisionByZero);
        }
        Ok(self.scale(&BigRational::new(BigInt::one(), BigInt::from(s))))
    }

    pub fn inverse(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Solve self * y = 1 using the matrix of multiplication by self.
        let n = self.conductor;
        let table = power_table(n);
        let phi = table.phi;
        let mut m = vec![vec![BigRational::zero(); phi]; phi];
        for (j, row_c) in self.coeffs.iter().enumerate() {
            if row_c.is_zero() {
                continue;
            }
            for col in 0..phi {
                for &(i, c) in table.monomial(j + col) {
                    m[i][col] += row_c * q(c);
                }
            }
        }
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let y = crate::qmat::solve(&m, &rhs).ok_or(CycError::DivisionByZero)?;
        Ok(Self::normalized(n, y))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of many numbers, normalizing once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a CycNum>>(items: I) -> Self {
        let items: Vec<&CycNum> = items.into_iter().collect();
        let n = items.iter().fold(1, |acc, x| lcm(acc, x.conductor));
        let phi = euler_phi(n as u64) as usize;
        let mut acc = vec![BigRational::zero(); phi];
        for x in items {
            x.accumulate_into(n, &mut acc, &BigRational::one());
        }
        Self::normalized(n, acc)
    }

    /// Adds `factor * self` to `acc`, a coordinate vector at conductor `n`
    /// (a multiple of `self.conductor`).
    fn accumulate_into(&self, n: usize, acc: &mut [BigRational], factor: &BigRational) {
        if self.conductor == n {
            for (a, c) in acc.iter_mut().zip(&self.coeffs) {
                if !c.is_zero() {
                    *a += c * factor;
                }
            }
            return;
        }
        let table = power_table(n);
        let step = n / self.conductor;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c * factor;
            for &(i, m) in table.monomial(step * j) {
                acc[i] += &cf * q(m);
            }
        }
    }

    fn lift(&self, n: usize) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); euler_phi(n as u64) as usize];
        self.accumulate_into(n, &mut acc, &BigRational::one());
        acc
    }

    fn normalized(n: usize, coeffs: Vec<BigRational>) -> Self {
        let (mut n, mut coeffs) = if n % 4 == 2 { halve(n, &coeffs) } else { (n, coeffs) };
        loop {
            if n == 1 || coeffs[1..].iter().all(Zero::is_zero) {
                return CycNum { conductor: 1, coeffs: vec![coeffs.swap_remove(0)] };
            }
            let mut moved = false;
            for p in prime_factors(n as u64) {
                let mut m = n / p as usize;
                if m % 4 == 2 {
                    m /= 2;
                }
                if let Some(y) = try_restrict(n, m, &coeffs) {
                    n = m;
                    coeffs = y;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return CycNum { conductor: n, coeffs };
            }
        }
    }
}

/// Rewrites coordinates at conductor `n = 2m` (`m` odd) at conductor `m`,
/// using `ζ_{2m} = -ζ_m^{(m+1)/2}`.
fn halve(n: usize, coeffs: &[BigRational]) -> (usize, Vec<BigRational>) {
    let m = n / 2;
    let table = power_table(m);
    let mut out = vec![BigRational::zero(); table.phi];
    let h = m.div_ceil(2);
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for &(i, v) in table.monomial(j * h) {
            out[i] += c * q(sign * v);
        }
    }
    (m, out)
}

/// Coordinates in `ℚ(ζ_m)` of `x ∈ ℚ(ζ_n)` if `x` lies in that subfield.
fn try_restrict(n: usize, m: usize, x: &[BigRational]) -> Option<Vec<BigRational>> {
    let d = tables::descent(n, m);
    let picked: Vec<BigRational> = d.pivots.iter().map(|&i| x[i].clone()).collect();
    let y = crate::qmat::mat_vec(&d.inverse, &picked);
    let back = CycNum { conductor: m, coeffs: y.clone() }.lift(n);
    (back == x).then_some(y)
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.is_rational() && rhs.is_rational() {
            return CycNum::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        CycNum::sum([self, rhs])
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if let Some(r) = self.to_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.to_rational() {
            return self.scale(r);
        }
        let n = lcm(self.conductor, rhs.conductor);
        let a = self.lift(n);
        let b = rhs.lift(n);
        // collect by exponent mod n, then reduce each bucket once
        let mut buckets = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    buckets[(i + j) % n] += x * y;
                }
            }
        }
        let table = power_table(n);
        let mut out = vec![BigRational::zero(); table.phi];
        for (e, c) in buckets.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in table.monomial(e) {
                out[i] += c * q(m);
            }
        }
        CycNum::normalized(n, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl From<i64> for CycNum {
    fn from(x: i64) -> Self {
        CycNum::from_int(x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", fmt_rational(&self.coeffs[0]));
        }
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        write!(f, "{}:[{}]", self.conductor, parts.join(","))
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().ok()?, b.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl FromStr for CycNum {
    type Err = CycError;

    /// Parses `n:[c0,c1,...]` or a bare rational `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| CycError::Parse(s.to_string(), why.to_string());
        let t = s.trim();
        match t.split_once(':') {
            None => parse_rational(t).map(CycNum::from_rational).ok_or_else(|| err("bad rational")),
            Some((n, rest)) => {
                let n: usize = n.trim().parse().map_err(|_| err("bad conductor"))?;
                if n == 0 {
                    return Err(err("conductor must be positive"));
                }
                let body = rest
                    .trim()
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| err("expected [..] coordinate list"))?;
                let coeffs = body
                    .split(',')
                    .map(|c| parse_rational(c).ok_or_else(|| err("bad coordinate")))
                    .collect::<Result<Vec<_>, _>>()?;
                CycNum::from_coeffs(n, coeffs).map_err(|_| err("wrong number of coordinates"))
            }
        }
    }
}

#[cfg(test)]
mod tests;
