//! 2-modular decomposition data: decomposition matrix, Brauer characters,
//! principal indecomposable characters and the Cartan matrix, with the
//! congruence and divisibility checks built on them.

pub mod blocks;
mod parse;
pub mod snf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::chartab::{CharacterTable, TableError};
use crate::cyclo::{CycError, CycNum, ResidueField};
use crate::grp::{ClassRealityReport, Reality};
use crate::numth::{lcm, two_part};
use crate::qmat;

pub use blocks::{BlockMatrices, CongruenceReport, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("decomposition matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("{pim} does not vanish on the 2-singular class {class}")]
    NonVanishing { pim: String, class: String },
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("{pim}({class}) / |C(g)|_2 is not an algebraic integer")]
    NotIntegral { pim: String, class: String },
    #[error("Cartan matrix: {0}")]
    Cartan(String),
    #[error("{count} self-dual Brauer characters but {classes} real 2-regular classes")]
    RealCount { count: usize, classes: usize },
    #[error("class {0} is missing from the reality report")]
    MissingClass(String),
    #[error("theorem check failed: {0}")]
    Theorem(String),
}

/// A 2-regular conjugacy class as seen by the decomposition data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularClass {
    pub name: String,
    pub element_order: u64,
    pub size: u64,
    pub centralizer_order: u64,
    /// Position (among the 2-regular classes) of the class of `g⁻¹`.
    pub inverse: usize,
}

impl RegularClass {
    pub fn centralizer_two_part(&self) -> u64 {
        two_part(self.centralizer_order)
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionData {
    label: String,
    group_order: u64,
    table: Option<CharacterTable>,
    /// Table column of each 2-regular class (table mode only).
    table_columns: Vec<usize>,
    classes: Vec<RegularClass>,
    brauer_labels: Vec<String>,
    decomposition: Option<Vec<Vec<i64>>>,
    phi: Vec<Vec<CycNum>>,
    pim: Vec<Vec<CycNum>>,
    cartan: Vec<Vec<i64>>,
}

fn int(x: u64) -> CycNum {
    CycNum::from_rational(BigRational::from_integer(BigInt::from(x)))
}

/// Inverse of a square matrix over the cyclotomic numbers.
pub(crate) fn cyc_inverse(m: &[Vec<CycNum>]) -> Option<Vec<Vec<CycNum>>> {
    let n = m.len();
    let mut a: Vec<Vec<CycNum>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { CycNum::one() } else { CycNum::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].inverse().ok()?;
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl DecompositionData {
    /// Ingests a decomposition matrix for a table. Rows of `d` follow the
    /// order of `table`'s characters; `known` optionally lists Brauer
    /// character values (on 2-regular classes, table order) to cross-check.
    pub fn from_matrix(
        table: CharacterTable,
        brauer_labels: Vec<String>,
        d: Vec<Vec<i64>>,
        known: &[(String, Vec<CycNum>)],
    ) -> Result<Self, DecError> {
        let k = table.num_classes();
        let cols = table.two_regular_classes();
        let l = cols.len();
        if d.len() != table.characters().len() || d.iter().any(|r| r.len() != l) {
            return Err(DecError::Shape(format!(
                "expected a {}x{l} matrix (characters x 2-regular classes)",
                table.characters().len()
            )));
        }
        if brauer_labels.len() != l {
            return Err(DecError::Shape(format!("{} Brauer labels for {l} columns", brauer_labels.len())));
        }
        if d.iter().flatten().any(|&x| x < 0) {
            return Err(DecError::Inconsistent("negative decomposition number".into()));
        }
        let dq: qmat::QMatrix =
            d.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let rank = qmat::rank(&dq);
        if rank != l {
            return Err(DecError::RankDeficient { rank, expected: l });
        }

        // Φ_j = Σ_i d_ij χ_i on every class
        let mut pim_full = vec![vec![CycNum::zero(); k]; l];
        for (j, row) in pim_full.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                let terms: Vec<CycNum> = d
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r[j] != 0)
                    .map(|(i, r)| table.value(i, c).scale_int(r[j]))
                    .collect();
                *slot = CycNum::sum(&terms);
            }
        }
        for (j, row) in pim_full.iter().enumerate() {
            for (c, class) in table.classes().iter().enumerate() {
                if !class.is_two_regular() && !row[c].is_zero() {
                    return Err(DecError::NonVanishing { pim: brauer_labels[j].clone(), class: class.name.clone() });
                }
            }
        }

        // φ(g) from D_R φ(g) = χ_R(g) on independent rows R, checked on all rows
        let rows = qmat::independent_rows(&dq);
        let sub: qmat::QMatrix = rows.iter().map(|&i| dq[i].clone()).collect();
        let sub_inv = qmat::inverse(&sub).expect("independent rows");
        let mut phi = vec![Vec::with_capacity(l); l];
        for &c in &cols {
            let rhs: Vec<&CycNum> = rows.iter().map(|&i| table.value(i, c)).collect();
            let x: Vec<CycNum> = sub_inv
                .iter()
                .map(|coef| {
                    let terms: Vec<CycNum> =
                        coef.iter().zip(&rhs).filter(|(q, _)| !q.is_zero()).map(|(q, v)| v.scale(q)).collect();
                    CycNum::sum(&terms)
                })
                .collect();
            for (i, r) in d.iter().enumerate() {
                let terms: Vec<CycNum> =
                    r.iter().zip(&x).filter(|(q, _)| **q != 0).map(|(q, v)| v.scale_int(*q)).collect();
                if CycNum::sum(&terms) != *table.value(i, c) {
                    return Err(DecError::Inconsistent(format!(
                        "restriction of {} to class {} is not a combination of the Brauer characters",
                        table.characters()[i].name,
                        table.classes()[c].name
                    )));
                }
            }
            for (j, v) in x.into_iter().enumerate() {
                phi[j].push(v);
            }
        }

        for (name, values) in known {
            let j = brauer_labels
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| DecError::Inconsistent(format!("values given for unknown Brauer character {name}")))?;
            if values.len() != l {
                return Err(DecError::Shape(format!("{name}: {} values for {l} classes", values.len())));
            }
            if let Some(c) = (0..l).find(|&c| values[c] != phi[j][c]) {
                return Err(DecError::Inconsistent(format!(
                    "{name}({}) is {} but the decomposition matrix gives {}",
                    table.classes()[cols[c]].name,
                    values[c],
                    phi[j][c]
                )));
            }
        }

        let position = |t: usize| cols.iter().position(|&c| c == t).expect("inverse of 2-regular is 2-regular");
        let classes: Vec<RegularClass> = cols
            .iter()
            .map(|&c| {
                let tc = &table.classes()[c];
                RegularClass {
                    name: tc.name.clone(),
                    element_order: tc.element_order,
                    size: tc.size,
                    centralizer_order: table.centralizer_order(c),
                    inverse: position(tc.inverse),
                }
            })
            .collect();
        let pim = pim_full.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        let cartan = (0..l)
            .map(|i| (0..l).map(|j| d.iter().map(|r| r[i] * r[j]).sum()).collect())
            .collect();
        let data = DecompositionData {
            label: table.label.clone().unwrap_or_else(|| "table".into()),
            group_order: table.order(),
            table_columns: cols,
            table: Some(table),
            classes,
            brauer_labels,
            decomposition: Some(d),
            phi,
            pim,
            cartan,
        };
        data.check_pim_integrality()?;
        Ok(data)
    }

    /// Builds the data from Brauer characters alone (no ordinary table).
    /// With `B[i][k] = φ_i(g_k)`, second orthogonality gives
    /// `Φ_w(g_k) = |C(g_k)| (B⁻¹)[k'][w]` where `g_k' = g_k⁻¹`, and the
    /// Cartan columns are the coordinates of each `Φ_j` in the basis `φ`.
    pub fn from_brauer_characters(
        label: impl Into<String>,
        group_order: u64,
        classes: Vec<RegularClass>,
        brauer_labels: Vec<String>,
        phi: Vec<Vec<CycNum>>,
    ) -> Result<Self, DecError> {
        let l = classes.len();
        if phi.len() != l || brauer_labels.len() != l || phi.iter().any(|r| r.len() != l) {
            return Err(DecError::Shape(format!("expected {l} Brauer characters on {l} classes")));
        }
        let b_inv = cyc_inverse(&phi)
            .ok_or_else(|| DecError::Inconsistent("Brauer characters are linearly dependent".into()))?;
        let pim: Vec<Vec<CycNum>> = (0..l)
            .map(|w| {
                classes
                    .iter()
                    .map(|c| &b_inv[c.inverse][w] * &int(c.centralizer_order))
                    .collect()
            })
            .collect();
        let mut cartan = vec![vec![0i64; l]; l];
        for j in 0..l {
            for i in 0..l {
                let terms: Vec<CycNum> = (0..l).map(|k| &pim[j][k] * &b_inv[k][i]).collect();
                let c = CycNum::sum(&terms);
                cartan[i][j] = c
                    .to_integer()
                    .and_then(|x| x.to_i64())
                    .filter(|&x| x >= 0)
                    .ok_or_else(|| DecError::Cartan(format!("c({}, {}) = {c} is not a non-negative integer", brauer_labels[i], brauer_labels[j])))?;
            }
        }
        let data = DecompositionData {
            label: label.into(),
            group_order,
            table: None,
            table_columns: Vec::new(),
            classes,
            brauer_labels,
            decomposition: None,
            phi,
            pim,
            cartan,
        };
        data.check_cartan_symmetric()?;
        data.check_pim_integrality()?;
        Ok(data)
    }

    /// Parses a `.dec` file against its table.
    pub fn parse(text: &str, table: CharacterTable) -> Result<Self, DecError> {
        parse::parse_dec(text, table)
    }

    fn check_cartan_symmetric(&self) -> Result<(), DecError> {
        let l = self.cartan.len();
        for i in 0..l {
            for j in 0..i {
                if self.cartan[i][j] != self.cartan[j][i] {
                    return Err(DecError::Cartan(format!("not symmetric at ({}, {})", self.brauer_labels[i], self.brauer_labels[j])));
                }
            }
        }
        Ok(())
    }

    /// `Φ_j(g)/|C(g)|_2` must be an algebraic integer.
    fn check_pim_integrality(&self) -> Result<(), DecError> {
        for (j, row) in self.pim.iter().enumerate() {
            for (c, v) in self.classes.iter().zip(row) {
                if !v.div_int(c.centralizer_two_part() as i64)?.is_integral() {
                    return Err(DecError::NotIntegral { pim: self.brauer_labels[j].clone(), class: c.name.clone() });
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn table(&self) -> Option<&CharacterTable> {
        self.table.as_ref()
    }

    /// Table column of each 2-regular class (empty without a table).
    pub fn table_columns(&self) -> &[usize] {
        &self.table_columns
    }

    pub fn classes(&self) -> &[RegularClass] {
        &self.classes
    }

    pub fn brauer_labels(&self) -> &[String] {
        &self.brauer_labels
    }

    pub fn num_brauer(&self) -> usize {
        self.brauer_labels.len()
    }

    pub fn decomposition(&self) -> Option<&[Vec<i64>]> {
        self.decomposition.as_deref()
    }

    /// `φ_j` on the 2-regular classes.
    pub fn phi(&self, j: usize) -> &[CycNum] {
        &self.phi[j]
    }

    /// `Φ_j` on the 2-regular classes (it vanishes elsewhere).
    pub fn pim(&self, j: usize) -> &[CycNum] {
        &self.pim[j]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn brauer_index(&self, label: &str) -> Option<usize> {
        self.brauer_labels.iter().position(|b| b == label)
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn identity_class(&self) -> usize {
        self.classes.iter().position(|c| c.element_order == 1).expect("identity class present")
    }

    /// Self-duality of `Φ_j`, decided by real-valuedness of `φ_j`.
    pub fn is_self_dual(&self, j: usize) -> bool {
        self.phi[j].iter().all(CycNum::is_real)
    }

    pub fn degree(&self, j: usize) -> BigInt {
        self.phi[j][self.identity_class()].to_integer().expect("Brauer degrees are integers")
    }

    /// The Brauer character that is constantly 1.
    pub fn trivial_index(&self) -> Option<usize> {
        self.phi.iter().position(|r| r.iter().all(|v| *v == CycNum::one()))
    }

    /// A residue field containing the reductions of all values here.
    pub fn residue_field(&self) -> Result<std::sync::Arc<ResidueField>, DecError> {
        let n = self.classes.iter().fold(1u64, |a, c| lcm(a, c.element_order));
        Ok(ResidueField::new(n as usize)?)
    }

    /// Reality tag of each 2-regular class, looked up by name.
    pub fn realities(&self, report: &ClassRealityReport) -> Result<Vec<Reality>, DecError> {
        self.classes
            .iter()
            .map(|c| {
                report
                    .classes
                    .iter()
                    .find(|r| r.name == c.name)
                    .map(|r| r.reality)
                    .ok_or_else(|| DecError::MissingClass(c.name.clone()))
            })
            .collect()
    }

    /// `Σ_w Φ_w(g_i⁻¹) φ_w(g_j) / |C(g_i)|` over all 2-regular `i, j`.
    pub fn second_orthogonality(&self) -> Vec<Vec<CycNum>> {
        let l = self.classes.len();
        (0..l)
            .map(|i| {
                let ii = self.classes[i].inverse;
                let cent = self.classes[i].centralizer_order as i64;
                (0..l)
                    .map(|j| {
                        let terms: Vec<CycNum> = (0..l).map(|w| &self.pim[w][ii] * &self.phi[w][j]).collect();
                        CycNum::sum(&terms).div_int(cent).expect("nonzero centralizer order")
                    })
                    .collect()
            })
            .collect()
    }

    /// Cartan matrix and its invariant factors, compared with the
    /// 2-parts of the centralizer orders of the 2-regular classes.
    pub fn cartan_report(&self) -> CartanReport {
        let invariant_factors = snf::invariant_factors(&self.cartan);
        let mut expected: Vec<u64> = self.classes.iter().map(RegularClass::centralizer_two_part).collect();
        expected.sort_unstable();
        let matches = invariant_factors.len() == expected.len()
            && invariant_factors.iter().zip(&expected).all(|(a, &b)| *a == BigInt::from(b));
        let rank_mod_2 = crate::ffield::FFMatrix::from_fn(
            crate::ffield::Gf2m::get(1).expect("GF(2)"),
            self.cartan.len(),
            self.cartan.len(),
            |i, j| crate::ffield::FFElem((self.cartan[i][j].rem_euclid(2)) as u32),
        )
        .rank();
        let defect_zero = expected.iter().filter(|&&x| x == 1).count();
        CartanReport { matrix: self.cartan.clone(), invariant_factors, expected, matches, rank_mod_2, defect_zero }
    }

    /// For every pair `(i, j)` with `c_ij` odd and `φ_i`, `φ_j` real: a real
    /// class `g_u` with `Φ_i(g_u)Φ_j(g_u⁻¹)/|C(g_u)| ∉ 𝔐`, which must have odd
    /// centralizer order and be strongly real, and a quadratic `Φ_w` with
    /// `c_iw` odd and `φ_w(g_u)` odd.
    pub fn odd_cartan_witnesses(
        &self,
        quadratic: &[bool],
        report: &ClassRealityReport,
    ) -> Result<Vec<OddCartanWitness>, DecError> {
        let l = self.num_brauer();
        let reality = self.realities(report)?;
        let rf = self.residue_field()?;
        let mut out = Vec::new();
        for i in 0..l {
            for j in i..l {
                if self.cartan[i][j] % 2 == 0 || !self.is_self_dual(i) || !self.is_self_dual(j) {
                    continue;
                }
                let pair = format!("({}, {})", self.brauer_labels[i], self.brauer_labels[j]);
                let mut g_u = None;
                for (u, c) in self.classes.iter().enumerate() {
                    if !reality[u].is_real() {
                        continue;
                    }
                    let t = (&self.pim[i][u] * &self.pim[j][c.inverse]).div_int(c.centralizer_order as i64)?;
                    if !rf.reduce(&t)?.is_zero() {
                        g_u = Some(u);
                        break;
                    }
                }
                let u = g_u.ok_or_else(|| DecError::Theorem(format!("no real class g_u for odd c{pair}")))?;
                let cu = &self.classes[u];
                if cu.centralizer_order.is_multiple_of(2) {
                    return Err(DecError::Theorem(format!("g_u = {} for {pair} has even centralizer order", cu.name)));
                }
                if reality[u] != Reality::StronglyReal {
                    return Err(DecError::Theorem(format!("g_u = {} for {pair} is not strongly real", cu.name)));
                }
                let mut w_found = None;
                for w in 0..l {
                    if quadratic.get(w).copied().unwrap_or(false)
                        && self.cartan[i][w] % 2 == 1
                        && !rf.reduce(&self.phi[w][u])?.is_zero()
                    {
                        w_found = Some(w);
                        break;
                    }
                }
                let w = w_found.ok_or_else(|| {
                    DecError::Theorem(format!("no quadratic w with c_iw odd and φ_w({}) odd for {pair}", cu.name))
                })?;
                out.push(OddCartanWitness { i, j, w, g_u: u });
            }
        }
        Ok(out)
    }

    /// `Φ_1(g)/|C(g)|_2 ∈ 2𝔸` for real 2-regular `g ≠ 1`, and `Φ_1(1)/|G|_2` odd.
    pub fn trivial_pim_check(&self, report: &ClassRealityReport) -> Result<TrivialPimReport, DecError> {
        let reality = self.realities(report)?;
        let t = self
            .trivial_index()
            .ok_or_else(|| DecError::Inconsistent("no trivial Brauer character".into()))?;
        let id = self.identity_class();
        let ratio = self.pim[t][id].div_int(two_part(self.group_order) as i64)?;
        let identity_ratio = ratio
            .to_integer()
            .ok_or_else(|| DecError::NotIntegral { pim: self.brauer_labels[t].clone(), class: self.classes[id].name.clone() })?;
        let mut classes = Vec::new();
        for (u, c) in self.classes.iter().enumerate() {
            if u == id || !reality[u].is_real() {
                continue;
            }
            let r = self.pim[t][u].div_int(c.centralizer_two_part() as i64)?;
            let even = r.is_twice_alg_int()?;
            classes.push(TrivialPimClass { class: u, ratio: r, even });
        }
        Ok(TrivialPimReport { trivial: t, identity_odd: num_integer::Integer::is_odd(&identity_ratio), identity_ratio, classes })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanReport {
    pub matrix: Vec<Vec<i64>>,
    pub invariant_factors: Vec<BigInt>,
    /// Sorted 2-parts of the centralizer orders.
    pub expected: Vec<u64>,
    pub matches: bool,
    pub rank_mod_2: usize,
    /// Number of 2-regular classes of 2-defect zero.
    pub defect_zero: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCartanWitness {
    pub i: usize,
    pub j: usize,
    pub w: usize,
    /// Class index (among 2-regular classes).
    pub g_u: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialPimClass {
    pub class: usize,
    pub ratio: CycNum,
    pub even: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialPimReport {
    pub trivial: usize,
    pub identity_ratio: BigInt,
    pub identity_odd: bool,
    pub classes: Vec<TrivialPimClass>,
}

impl TrivialPimReport {
    pub fn holds(&self) -> bool {
        self.identity_odd && self.classes.iter().all(|c| c.even)
    }
}

#[cfg(test)]
impl DecompositionData {
    /// Drops the given classes and PIMs. Kept classes must be real, so the
    /// inverse map stays inside the kept set.
    pub(crate) fn restrict(&self, keep_class: &[bool], keep_pim: &[bool]) -> Self {
        let cls: Vec<usize> = (0..self.classes.len()).filter(|&u| keep_class[u]).collect();
        let rows: Vec<usize> = (0..self.phi.len()).filter(|&w| keep_pim[w]).collect();
        let pick = |m: &[Vec<CycNum>]| rows.iter().map(|&w| cls.iter().map(|&u| m[w][u].clone()).collect()).collect();
        DecompositionData {
            label: self.label.clone(),
            group_order: self.group_order,
            table: None,
            table_columns: Vec::new(),
            classes: cls
                .iter()
                .enumerate()
                .map(|(k, &u)| RegularClass { inverse: k, ..self.classes[u].clone() })
                .collect(),
            brauer_labels: rows.iter().map(|&w| self.brauer_labels[w].clone()).collect(),
            decomposition: None,
            phi: pick(&self.phi),
            pim: pick(&self.pim),
            cartan: rows.iter().map(|&i| rows.iter().map(|&j| self.cartan[i][j]).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests;
