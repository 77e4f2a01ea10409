//! Randomized chopping into composition factors with a Norton-style
//! irreducibility certificate.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::forms::endomorphism_dimension;
use super::{MeatAxeError, ModRep};
use crate::ffield::{eval_poly, FFElem, FFMatrix, Gf2m, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChopConfig {
    pub seed: u64,
    /// Random algebra elements tried per piece before giving up.
    pub max_tries: usize,
    /// Largest piece on which the endomorphism ring is computed when
    /// certification fails.
    pub schur_limit: usize,
}

impl Default for ChopConfig {
    fn default() -> Self {
        ChopConfig { seed: super::DEFAULT_SEED, max_tries: 50, schur_limit: 64 }
    }
}

/// One isomorphism type of composition factor.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub module: ModRep,
    pub multiplicity: usize,
    /// Characteristic polynomials of the fingerprint words.
    pub fingerprint: Vec<Vec<FFElem>>,
    /// Dimension of the endomorphism algebra (1 over a splitting field).
    pub end_dim: usize,
}

#[derive(Clone, Debug)]
pub struct ChopResult {
    pub degree: u32,
    pub constituents: Vec<Constituent>,
    /// Random algebra elements used in total.
    pub tries: usize,
}

impl ChopResult {
    pub fn total_dimension(&self) -> usize {
        self.constituents.iter().map(|c| c.multiplicity * c.module.dim()).sum()
    }
}

/// Row space in reduced echelon form.
struct Echelon {
    field: Arc<Gf2m>,
    rows: Vec<Vec<FFElem>>,
    pivots: Vec<usize>,
}

fn axpy(field: &Gf2m, dst: &mut [FFElem], c: FFElem, src: &[FFElem]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        d.0 ^= field.mul(c, s).0;
    }
}

impl Echelon {
    fn new(field: Arc<Gf2m>) -> Self {
        Echelon { field, rows: Vec::new(), pivots: Vec::new() }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [FFElem]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            axpy(&self.field, v, c, r);
        }
    }

    fn insert(&mut self, mut v: Vec<FFElem>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = self.field.inv(v[p]).expect("nonzero");
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        for r in self.rows.iter_mut() {
            let c = r[p];
            axpy(&self.field, r, c, &v);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Smallest subspace containing `seed` and closed under `gens`.
fn spin(field: &Arc<Gf2m>, gens: &[FFMatrix], seed: Vec<FFElem>, dim: usize) -> Echelon {
    let mut e = Echelon::new(field.clone());
    let mut queue = vec![seed.clone()];
    e.insert(seed);
    let mut next = 0;
    while next < queue.len() && e.len() < dim {
        let v = queue[next].clone();
        next += 1;
        for g in gens {
            let w = g.vec_mul(&v);
            if e.insert(w.clone()) {
                queue.push(w);
                if e.len() == dim {
                    break;
                }
            }
        }
    }
    e
}

/// Actions on a submodule (echelon basis) and on the quotient.
fn split(rep: &ModRep, sub: &Echelon) -> (ModRep, ModRep) {
    let f = rep.field();
    let n = rep.dim();
    let k = sub.len();
    let mut is_pivot = vec![false; n];
    for &p in &sub.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut sub_gens = Vec::new();
    let mut quo_gens = Vec::new();
    for g in rep.gens() {
        let mut s = FFMatrix::zeros(f.clone(), k, k);
        for (i, row) in sub.rows.iter().enumerate() {
            let w = g.vec_mul(row);
            for (j, &p) in sub.pivots.iter().enumerate() {
                s.set(i, j, w[p]);
            }
        }
        let mut q = FFMatrix::zeros(f.clone(), n - k, n - k);
        for (i, &c) in free.iter().enumerate() {
            let mut w = g.row(c).to_vec();
            sub.reduce(&mut w);
            for (j, &d) in free.iter().enumerate() {
                q.set(i, j, w[d]);
            }
        }
        sub_gens.push(s);
        quo_gens.push(q);
    }
    (
        ModRep::new(f.clone(), k, sub_gens).expect("restriction of invertible maps"),
        ModRep::new(f.clone(), n - k, quo_gens).expect("quotient of invertible maps"),
    )
}

enum Probe {
    Submodule(Echelon),
    Irreducible,
    Inconclusive,
}

fn random_element(rep: &ModRep, rng: &mut ChaCha8Rng) -> FFMatrix {
    let f = rep.field();
    let g = rep.gens();
    let mut word = g[rng.random_range(0..g.len())].clone();
    let mut acc = word.scale(FFElem(rng.random_range(1..f.size())));
    for _ in 0..2 {
        word = word.mul(&g[rng.random_range(0..g.len())]);
        acc = acc.add(&word.scale(FFElem(rng.random_range(0..f.size()))));
    }
    acc
}

fn probe(rep: &ModRep, cfg: &ChopConfig, rng: &mut ChaCha8Rng, tries: &mut usize) -> Probe {
    let n = rep.dim();
    let f = rep.field();
    if n <= 1 {
        return Probe::Irreducible;
    }
    if rep.gens().is_empty() {
        // trivial action: any vector spans a submodule
        let mut e = Echelon::new(f.clone());
        let mut v = vec![FFElem::ZERO; n];
        v[0] = FFElem::ONE;
        e.insert(v);
        return Probe::Submodule(e);
    }
    let transposed: Vec<FFMatrix> = rep.gens().iter().map(FFMatrix::transpose).collect();
    for _ in 0..cfg.max_tries {
        *tries += 1;
        let a = random_element(rep, rng);
        let cp = a.charpoly();
        for lambda in f.elements() {
            if !eval_poly(f, &cp, lambda).is_zero() {
                continue;
            }
            let shifted = a.shift(lambda);
            let null = shifted.left_nullspace();
            let s = spin(f, rep.gens(), null[0].clone(), n);
            if s.len() < n {
                return Probe::Submodule(s);
            }
            if null.len() != 1 {
                continue;
            }
            let dual_null = shifted.transpose().left_nullspace();
            let t = spin(f, &transposed, dual_null[0].clone(), n);
            if t.len() < n {
                // the annihilator of an invariant subspace of the dual
                let w = FFMatrix::from_rows(f.clone(), t.rows.clone()).expect("rectangular");
                let mut e = Echelon::new(f.clone());
                for v in w.nullspace() {
                    e.insert(v);
                }
                return Probe::Submodule(e);
            }
            return Probe::Irreducible;
        }
    }
    Probe::Inconclusive
}

fn fingerprint(rep: &ModRep, words: &[Vec<usize>]) -> Vec<Vec<FFElem>> {
    words.iter().map(|w| rep.word_matrix(w).charpoly()).collect()
}

enum Failure {
    Error(MeatAxeError),
    /// Endomorphism algebra of this dimension found on an uncertified piece.
    NeedsExtension(usize),
}

fn chop_inner(rep: &ModRep, cfg: &ChopConfig, words: &[Vec<usize>]) -> Result<ChopResult, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tries = 0;
    let mut stack = vec![rep.clone()];
    let mut found: Vec<Constituent> = Vec::new();
    while let Some(piece) = stack.pop() {
        if piece.dim() == 0 {
            continue;
        }
        match probe(&piece, cfg, &mut rng, &mut tries) {
            Probe::Submodule(s) => {
                let (sub, quo) = split(&piece, &s);
                stack.push(quo);
                stack.push(sub);
            }
            Probe::Irreducible => {
                let fp = fingerprint(&piece, words);
                if let Some(c) = found.iter_mut().find(|c| c.module.dim() == piece.dim() && c.fingerprint == fp) {
                    c.multiplicity += 1;
                } else {
                    let end_dim = endomorphism_dimension(&piece);
                    if end_dim != 1 {
                        return Err(Failure::NeedsExtension(end_dim));
                    }
                    found.push(Constituent { module: piece, multiplicity: 1, fingerprint: fp, end_dim });
                }
            }
            Probe::Inconclusive => {
                if piece.dim() <= cfg.schur_limit {
                    let e = endomorphism_dimension(&piece);
                    if e > 1 {
                        return Err(Failure::NeedsExtension(e));
                    }
                }
                return Err(Failure::Error(MeatAxeError::Inconclusive { dim: piece.dim(), tries: cfg.max_tries }));
            }
        }
    }
    found.sort_by_key(|a| (a.module.dim(), !a.module.is_trivial()));
    Ok(ChopResult { degree: rep.degree(), constituents: found, tries })
}

/// Chops `rep` into composition factors over its own field. Isomorphism
/// types are told apart by the characteristic polynomials of the matrices
/// of `words` (class representatives suffice to separate irreducibles);
/// with no words the generators are used.
pub fn chop(rep: &ModRep, cfg: &ChopConfig, words: &[Vec<usize>]) -> Result<ChopResult, MeatAxeError> {
    let default: Vec<Vec<usize>>;
    let words = if words.is_empty() {
        default = (0..rep.gens().len()).map(|s| vec![s]).collect();
        &default
    } else {
        words
    };
    chop_inner(rep, cfg, words).map_err(|f| match f {
        Failure::Error(e) => e,
        Failure::NeedsExtension(_) => MeatAxeError::NotSplitting(rep.degree()),
    })
}

/// Like [`chop`], but enlarges the field whenever a piece has an
/// endomorphism algebra of dimension `e > 1`, from GF(2^m) to GF(2^{me}).
pub fn chop_with_escalation(rep: &ModRep, cfg: &ChopConfig, words: &[Vec<usize>]) -> Result<(ModRep, ChopResult), MeatAxeError> {
    let mut rep = rep.clone();
    loop {
        match chop_inner(&rep, cfg, words) {
            Ok(c) => return Ok((rep, c)),
            Err(Failure::Error(e)) => return Err(e),
            Err(Failure::NeedsExtension(e)) => {
                let m = rep.degree();
                let m2 = m * e as u32;
                if m2 > MAX_DEGREE {
                    return Err(MeatAxeError::NotSplitting(m));
                }
                let big = Gf2m::get(m2)?;
                rep = rep.extend_to(&big).ok_or(MeatAxeError::NotSplitting(m))?;
            }
        }
    }
}
