//! Arithmetic in GF(2^m) with the Conway-polynomial basis, plus dense
//! linear algebra over those fields.
//!
//! Elements are plain bit vectors ([`FFElem`]); every operation goes through
//! the field descriptor [`Gf2m`], which owns the exp/log tables.

mod conway;
mod matrix;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

pub use conway::{conway_polynomial, CONWAY_GF2, MAX_DEGREE};
pub use matrix::{eval_poly, FFMatrix};
pub use poly::{cyclotomic_factors_mod2, Gf2Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("no Conway polynomial available for degree {0}")]
    UnsupportedDegree(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
}

/// A field element: coordinates w.r.t. `1, x, …, x^{m-1}` modulo the Conway
/// polynomial of degree `m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FFElem(pub u32);

impl FFElem {
    pub const ZERO: FFElem = FFElem(0);
    pub const ONE: FFElem = FFElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// GF(2^m) for `1 <= m <= 20`.
pub struct Gf2m {
    degree: u32,
    modulus: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Gf2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.degree)
    }
}

impl Gf2m {
    /// The shared descriptor for GF(2^m).
    pub fn get(degree: u32) -> Result<Arc<Gf2m>, FieldError> {
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Gf2m>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.read().unwrap().get(&degree) {
            return Ok(f.clone());
        }
        let f = Arc::new(Self::build(degree)?);
        cache.write().unwrap().insert(degree, f.clone());
        Ok(f)
    }

    fn build(degree: u32) -> Result<Gf2m, FieldError> {
        let modulus = conway_polynomial(degree).ok_or(FieldError::UnsupportedDegree(degree))?;
        let size = 1usize << degree;
        let mut exp = vec![0u32; size - 1];
        let mut log = vec![u32::MAX; size];
        let mut x = 1u32;
        for (e, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            assert_eq!(log[x as usize], u32::MAX, "Conway polynomial must be primitive");
            log[x as usize] = e as u32;
            x <<= 1;
            if x & (1 << degree) != 0 {
                x ^= modulus;
            }
        }
        Ok(Gf2m { degree, modulus, exp, log })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2^m`.
    pub fn size(&self) -> u32 {
        1 << self.degree
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn unit_order(&self) -> u32 {
        (1 << self.degree) - 1
    }

    /// The canonical generator: the class of `x`, a root of the Conway
    /// polynomial (`1` in GF(2)).
    pub fn generator(&self) -> FFElem {
        FFElem(self.exp[1 % self.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: FFElem, b: FFElem) -> FFElem {
        FFElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FFElem, b: FFElem) -> FFElem {
        if a.0 == 0 || b.0 == 0 {
            return FFElem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        let n = self.exp.len() as u32;
        FFElem(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    /// Carry-less multiplication with reduction; independent of the tables.
    pub fn mul_slow(&self, a: FFElem, b: FFElem) -> FFElem {
        let mut acc = 0u64;
        for i in 0..self.degree {
            if b.0 >> i & 1 == 1 {
                acc ^= (a.0 as u64) << i;
            }
        }
        for i in (self.degree..2 * self.degree).rev() {
            if acc >> i & 1 == 1 {
                acc ^= (self.modulus as u64) << (i - self.degree);
            }
        }
        FFElem(acc as u32)
    }

    pub fn inv(&self, a: FFElem) -> Result<FFElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        let n = self.exp.len() as u32;
        let l = self.log[a.0 as usize];
        Ok(FFElem(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: FFElem, b: FFElem) -> Result<FFElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FFElem, e: u64) -> FFElem {
        if e == 0 {
            return FFElem::ONE;
        }
        if a.is_zero() {
            return FFElem::ZERO;
        }
        let n = self.exp.len() as u64;
        let l = self.log[a.0 as usize] as u64;
        FFElem(self.exp[((l * (e % n)) % n) as usize])
    }

    /// `g^e` for the canonical generator `g`.
    pub fn gen_pow(&self, e: i64) -> FFElem {
        let n = self.exp.len() as i64;
        FFElem(self.exp[e.rem_euclid(n) as usize])
    }

    pub fn frobenius(&self, a: FFElem) -> FFElem {
        self.mul(a, a)
    }

    /// Discrete logarithm to the canonical generator by baby-step/giant-step.
    pub fn discrete_log(&self, x: FFElem) -> Result<u32, FieldError> {
        if x.is_zero() {
            return Err(FieldError::LogOfZero);
        }
        let n = self.unit_order() as u64;
        let step = (n as f64).sqrt().ceil() as u64;
        let g = self.generator();
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = FFElem::ONE;
        for j in 0..step {
            baby.entry(cur).or_insert(j);
            cur = self.mul_slow(cur, g);
        }
        // giant step factor g^{-step}
        let giant = self.inv(self.pow(g, step)).expect("generator is a unit");
        let mut y = x;
        for i in 0..=step {
            if let Some(&j) = baby.get(&y) {
                return Ok(((i * step + j) % n) as u32);
            }
            y = self.mul_slow(y, giant);
        }
        unreachable!("every nonzero element is a power of the generator")
    }

    /// Logarithm read from the precomputed table.
    pub fn log_lookup(&self, x: FFElem) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    /// Image of the canonical generator of GF(2^sub) under the embedding
    /// GF(2^sub) ↪ GF(2^m), namely `g^((2^m-1)/(2^sub-1))`.
    pub fn subfield_generator(&self, sub: u32) -> Option<FFElem> {
        if sub == 0 || !self.degree.is_multiple_of(sub) {
            return None;
        }
        let k = self.unit_order() / ((1u32 << sub) - 1);
        Some(self.gen_pow(k as i64))
    }

    /// Embeds an element of GF(2^sub) (`sub | m`) using the canonical
    /// generator map.
    pub fn embed_from(&self, sub: &Gf2m, a: FFElem) -> Option<FFElem> {
        if a.is_zero() {
            return Some(FFElem::ZERO);
        }
        let img = self.subfield_generator(sub.degree)?;
        Some(self.pow(img, sub.log_lookup(a)? as u64))
    }

    pub fn elements(&self) -> impl Iterator<Item = FFElem> {
        (0..self.size()).map(FFElem)
    }
}
