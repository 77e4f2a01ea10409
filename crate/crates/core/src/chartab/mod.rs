//! Ordinary character tables: ingestion with full validation, Frobenius–Schur
//! indicators, class-multiplication coefficients and the character-level
//! strong-reality test.

pub(crate) mod parse;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cyclo::{CycError, CycNum};
use crate::grp::{ClassReality, ClassRealityReport, Reality};
use crate::numth::{gcd, prime_factors};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid table: {0}")]
    Invalid(String),
    #[error("class {class}: missing power map for prime {prime}")]
    MissingPowerMap { class: String, prime: u64 },
    #[error("orthogonality fails: {0}")]
    Orthogonality(String),
    #[error("corrupt table: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableClass {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
    /// Index of the class of `g⁻¹`.
    pub inverse: usize,
    /// Index of the class of `g^p`, per prime `p`.
    pub power_maps: BTreeMap<u64, usize>,
}

impl TableClass {
    pub fn is_two_regular(&self) -> bool {
        self.element_order % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<CycNum>,
}

impl Character {
    pub fn degree(&self) -> &CycNum {
        &self.values[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub label: Option<String>,
    order: u64,
    classes: Vec<TableClass>,
    characters: Vec<Character>,
}

fn int(x: u64) -> CycNum {
    CycNum::from_rational(BigRational::from_integer(BigInt::from(x)))
}

impl CharacterTable {
    /// Builds and validates a table.
    pub fn new(
        label: Option<String>,
        order: u64,
        classes: Vec<TableClass>,
        characters: Vec<Character>,
    ) -> Result<Self, TableError> {
        let t = CharacterTable { label, order, classes, characters };
        t.validate()?;
        Ok(t)
    }

    pub fn parse(text: &str) -> Result<Self, TableError> {
        parse::parse_table(text)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| TableError::Io(path.display().to_string(), e.to_string()))?;
        Self::parse(&text)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[TableClass] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> &CycNum {
        &self.characters[chi].values[class]
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order / self.classes[class].size
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn character_index(&self, name: &str) -> Option<usize> {
        self.characters.iter().position(|c| c.name == name)
    }

    pub fn two_regular_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&k| self.classes[k].is_two_regular()).collect()
    }

    pub fn involution_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&k| self.classes[k].element_order == 2).collect()
    }

    fn validate(&self) -> Result<(), TableError> {
        let k = self.classes.len();
        let invalid = |m: String| Err(TableError::Invalid(m));
        if k == 0 {
            return invalid("no classes".into());
        }
        if self.classes[0].element_order != 1 || self.classes[0].size != 1 {
            return invalid("the first class must be the identity class".into());
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return invalid(format!("class sizes sum to {total}, not the group order {}", self.order));
        }
        let primes = prime_factors(self.order);
        for (ci, c) in self.classes.iter().enumerate() {
            if c.size == 0 || !self.order.is_multiple_of(c.size) {
                return invalid(format!("class {} has size {} not dividing |G|", c.name, c.size));
            }
            if c.element_order == 0 || !self.order.is_multiple_of(c.element_order) {
                return invalid(format!("class {} has element order {} not dividing |G|", c.name, c.element_order));
            }
            if c.inverse >= k {
                return invalid(format!("class {}: inverse index out of range", c.name));
            }
            let inv = &self.classes[c.inverse];
            if inv.inverse != ci {
                return invalid(format!("inverse map is not an involution at class {}", c.name));
            }
            if inv.element_order != c.element_order || inv.size != c.size {
                return invalid(format!("class {} and its inverse class {} differ in order or size", c.name, inv.name));
            }
            for &p in &primes {
                let &img = c
                    .power_maps
                    .get(&p)
                    .ok_or(TableError::MissingPowerMap { class: c.name.clone(), prime: p })?;
                if img >= k {
                    return invalid(format!("class {}: pow{p} index out of range", c.name));
                }
                let expect = c.element_order / gcd(c.element_order, p);
                if self.classes[img].element_order != expect {
                    return invalid(format!(
                        "class {}: pow{p} lands in class {} of order {}, expected order {expect}",
                        c.name, self.classes[img].name, self.classes[img].element_order
                    ));
                }
            }
        }
        if self.characters.len() != k {
            return invalid(format!("{} characters for {k} classes", self.characters.len()));
        }
        for chi in &self.characters {
            if chi.values.len() != k {
                return invalid(format!("character {} has {} values, expected {k}", chi.name, chi.values.len()));
            }
            match chi.degree().to_integer() {
                Some(d) if d.is_positive() => {}
                _ => return invalid(format!("character {} has degree {} (not a positive integer)", chi.name, chi.degree())),
            }
            for (c, v) in self.classes.iter().zip(&chi.values) {
                if !v.is_integral() {
                    return invalid(format!("{}({}) = {v} is not an algebraic integer", chi.name, c.name));
                }
                if c.element_order % v.conductor() as u64 != 0 {
                    return invalid(format!(
                        "{}({}) = {v} does not lie in the field of {}-th roots of unity",
                        chi.name, c.name, c.element_order
                    ));
                }
            }
            for (ci, c) in self.classes.iter().enumerate() {
                let v = &chi.values[ci];
                if chi.values[c.inverse] != v.conjugate() {
                    return invalid(format!("{}({}) is not the conjugate of its value at the inverse class", chi.name, c.name));
                }
                for (&p, &img) in &c.power_maps {
                    if c.element_order % p != 0 && chi.values[img] != v.galois(p as i64) {
                        return invalid(format!(
                            "{}: value at the {p}-th power of {} is not the Galois image of {v}",
                            chi.name, c.name
                        ));
                    }
                }
            }
        }
        self.check_orthogonality()
    }

    fn check_orthogonality(&self) -> Result<(), TableError> {
        let k = self.classes.len();
        let conj: Vec<Vec<CycNum>> =
            self.characters.iter().map(|c| c.values.iter().map(CycNum::conjugate).collect()).collect();
        let sizes: Vec<CycNum> = self.classes.iter().map(|c| int(c.size)).collect();
        for i in 0..k {
            let weighted: Vec<CycNum> =
                self.characters[i].values.iter().zip(&sizes).map(|(v, s)| v * s).collect();
            for j in 0..=i {
                let terms: Vec<CycNum> = weighted.iter().zip(&conj[j]).map(|(a, b)| a * b).collect();
                let s = CycNum::sum(&terms);
                let expect = if i == j { int(self.order) } else { CycNum::zero() };
                if s != expect {
                    return Err(TableError::Orthogonality(format!(
                        "row orthogonality <{}, {}> = {s}, expected {expect}",
                        self.characters[i].name, self.characters[j].name
                    )));
                }
            }
        }
        for a in 0..k {
            for b in 0..=a {
                let terms: Vec<CycNum> =
                    (0..k).map(|i| &self.characters[i].values[a] * &conj[i][b]).collect();
                let s = CycNum::sum(&terms);
                let expect = if a == b { int(self.centralizer_order(a)) } else { CycNum::zero() };
                if s != expect {
                    return Err(TableError::Orthogonality(format!(
                        "column orthogonality at ({}, {}) = {s}, expected {expect}",
                        self.classes[a].name, self.classes[b].name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Frobenius–Schur indicator `(1/|G|) Σ_g χ(g²)`.
    pub fn fs_indicator(&self, chi: usize) -> Result<i32, TableError> {
        let terms: Vec<CycNum> = self
            .classes
            .iter()
            .map(|c| {
                let sq = c.power_maps.get(&2).copied().unwrap_or(0);
                self.value(chi, sq).scale_int(c.size as i64)
            })
            .collect();
        let s = CycNum::sum(&terms).div_int(self.order as i64)?;
        match s.to_integer().and_then(|x| i32::try_from(x).ok()) {
            Some(v @ -1..=1) => Ok(v),
            _ => Err(TableError::Corrupt(format!(
                "indicator of {} is {s}",
                self.characters[chi].name
            ))),
        }
    }

    /// Number of pairs `(x, y) ∈ C_i × C_j` with `xy = g_k`, from the table.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<u64, TableError> {
        let kinv = self.classes[k].inverse;
        let terms: Vec<CycNum> = self
            .characters
            .iter()
            .map(|chi| {
                let num = &(&chi.values[i] * &chi.values[j]) * &chi.values[kinv];
                num.checked_div(chi.degree()).expect("degrees are nonzero")
            })
            .collect();
        let factor = BigRational::new(
            BigInt::from(self.classes[i].size) * BigInt::from(self.classes[j].size),
            BigInt::from(self.order),
        );
        let s = CycNum::sum(&terms).scale(&factor);
        match s.to_integer() {
            Some(v) if !v.is_negative() => Ok(u64::try_from(v).expect("bounded by |G|")),
            _ => Err(TableError::Corrupt(format!(
                "structure constant ({}, {}, {}) = {s}",
                self.classes[i].name, self.classes[j].name, self.classes[k].name
            ))),
        }
    }

    /// For each 2-regular class: strongly real iff `g = 1` or some involution
    /// class `t` has a nonzero coefficient `a(t, t, g)`.
    pub fn strong_reality_by_characters(&self) -> Result<Vec<(usize, bool)>, TableError> {
        let inv = self.involution_classes();
        self.two_regular_classes()
            .into_iter()
            .map(|g| {
                if self.classes[g].element_order == 1 {
                    return Ok((g, true));
                }
                for &t in &inv {
                    if self.structure_constant(t, t, g)? != 0 {
                        return Ok((g, true));
                    }
                }
                Ok((g, false))
            })
            .collect()
    }

    /// Reality tags for every class. A class is strongly real iff it is a
    /// product of two elements of order at most 2; for 2-regular classes
    /// both factors may be taken from a single involution class.
    pub fn reality_report(&self) -> Result<ClassRealityReport, TableError> {
        let inv = self.involution_classes();
        let strong_odd: BTreeMap<usize, bool> = self.strong_reality_by_characters()?.into_iter().collect();
        let mut classes = Vec::with_capacity(self.classes.len());
        for (ci, c) in self.classes.iter().enumerate() {
            let reality = if c.inverse != ci {
                Reality::NonReal
            } else {
                let strong = if c.element_order <= 2 {
                    true
                } else if let Some(&s) = strong_odd.get(&ci) {
                    s
                } else {
                    let mut found = false;
                    'outer: for (a, &t1) in inv.iter().enumerate() {
                        for &t2 in &inv[a..] {
                            if self.structure_constant(t1, t2, ci)? != 0 {
                                found = true;
                                break 'outer;
                            }
                        }
                    }
                    found
                };
                if strong { Reality::StronglyReal } else { Reality::WeaklyReal }
            };
            classes.push(ClassReality {
                name: c.name.clone(),
                element_order: c.element_order,
                size: c.size as usize,
                centralizer_order: self.centralizer_order(ci) as usize,
                representative: None,
                reality,
            });
        }
        Ok(ClassRealityReport { classes })
    }

    /// Sum of the degrees of all characters weighted by indicator.
    pub fn indicator_weighted_degree_sum(&self) -> Result<BigInt, TableError> {
        let mut acc = BigInt::zero();
        for i in 0..self.characters.len() {
            let d = self.characters[i].degree().to_integer().expect("validated degree");
            acc += d * self.fs_indicator(i)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests;
