//! The real block matrices `A`, `B` and their congruences modulo 𝔐.

use std::cmp::Ordering;
use std::sync::Arc;

use super::{DecError, DecompositionData};
use crate::cyclo::{CycNum, ResidueField};
use crate::grp::{ClassRealityReport, Reality};

/// `A[i][j] = Φ_j(g_i⁻¹)/|C(g_i)|` and `B[i][j] = φ_i(g_j)` restricted to
/// real 2-regular classes and self-dual PIMs. Classes are ordered strongly
/// real first, PIMs quadratic first, so that the four blocks are
/// `A[..s][..σ]`, `A[..s][σ..]`, `A[s..][..σ]`, `A[s..][σ..]` and likewise
/// `B[..σ][..s]` and so on.
#[derive(Clone, Debug)]
pub struct BlockMatrices {
    /// Class indices (into the 2-regular classes) labelling rows of `A`.
    pub classes: Vec<usize>,
    pub class_names: Vec<String>,
    /// Number of strongly real classes.
    pub s: usize,
    /// Brauer indices labelling columns of `A`.
    pub pims: Vec<usize>,
    pub pim_names: Vec<String>,
    /// Number of quadratic PIMs.
    pub sigma: usize,
    pub a: Vec<Vec<CycNum>>,
    pub b: Vec<Vec<CycNum>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub row: String,
    pub col: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub residue_degree: u32,
    /// Each named congruence with the entries at which it fails.
    pub checks: Vec<(&'static str, Vec<Violation>)>,
}

impl CongruenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.is_empty())
    }

    pub fn passed(&self, name: &str) -> bool {
        self.checks.iter().any(|(n, v)| *n == name && v.is_empty())
    }
}

pub const AB_IDENTITY: &str = "AB=I";
pub const A21_ZERO: &str = "A21=0";
pub const B21_ZERO: &str = "B21=0";
pub const A11B11_IDENTITY: &str = "A11B11=I";
pub const A22B22_IDENTITY: &str = "A22B22=I";

impl DecompositionData {
    pub fn real_block_matrices(
        &self,
        report: &ClassRealityReport,
        quadratic: &[bool],
    ) -> Result<BlockMatrices, DecError> {
        let reality = self.realities(report)?;
        let l = self.num_brauer();
        if quadratic.len() != l {
            return Err(DecError::Shape(format!("{} verdicts for {l} PIMs", quadratic.len())));
        }
        let by_order = |&x: &usize, &y: &usize| {
            let (a, b) = (&self.classes[x], &self.classes[y]);
            (a.element_order, &a.name).cmp(&(b.element_order, &b.name))
        };
        let mut strong: Vec<usize> = (0..l).filter(|&u| reality[u] == Reality::StronglyReal).collect();
        let mut weak: Vec<usize> = (0..l).filter(|&u| reality[u] == Reality::WeaklyReal).collect();
        strong.sort_by(by_order);
        weak.sort_by(by_order);
        let s = strong.len();
        let classes: Vec<usize> = strong.into_iter().chain(weak).collect();

        let degrees: Vec<_> = (0..l).map(|j| self.degree(j)).collect();
        let by_degree = |&x: &usize, &y: &usize| -> Ordering {
            (&degrees[x], &self.brauer_labels[x]).cmp(&(&degrees[y], &self.brauer_labels[y]))
        };
        let mut quad: Vec<usize> = (0..l).filter(|&j| self.is_self_dual(j) && quadratic[j]).collect();
        let mut nonquad: Vec<usize> = (0..l).filter(|&j| self.is_self_dual(j) && !quadratic[j]).collect();
        quad.sort_by(by_degree);
        nonquad.sort_by(by_degree);
        let sigma = quad.len();
        let pims: Vec<usize> = quad.into_iter().chain(nonquad).collect();
        if pims.len() != classes.len() {
            return Err(DecError::RealCount { count: pims.len(), classes: classes.len() });
        }

        let a = classes
            .iter()
            .map(|&u| {
                let c = &self.classes[u];
                pims.iter()
                    .map(|&w| self.pim[w][c.inverse].div_int(c.centralizer_order as i64))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let b = pims.iter().map(|&w| classes.iter().map(|&u| self.phi[w][u].clone()).collect()).collect();
        Ok(BlockMatrices {
            class_names: classes.iter().map(|&u| self.classes[u].name.clone()).collect(),
            pim_names: pims.iter().map(|&w| self.brauer_labels[w].clone()).collect(),
            classes,
            s,
            pims,
            sigma,
            a,
            b,
        })
    }
}

impl BlockMatrices {
    pub fn dimension(&self) -> usize {
        self.classes.len()
    }

    /// A residue field holding the reductions of all entries.
    pub fn residue_field(&self) -> Result<Arc<ResidueField>, DecError> {
        Ok(ResidueField::for_values(self.a.iter().chain(&self.b).flatten())?)
    }

    /// Checks `AB ≡ I`, `A21 ≡ 0`, `B21 ≡ 0`, `A11 B11 ≡ I` and `A22 B22 ≡ I`
    /// entrywise after reduction.
    pub fn verify_congruences(&self, rf: &ResidueField) -> Result<CongruenceReport, DecError> {
        let r = self.dimension();
        let (s, sigma) = (self.s, self.sigma);
        let mut checks = Vec::new();

        // rows of A and columns of B are classes; columns of A and rows of B are PIMs
        let product = |rows: std::ops::Range<usize>, mid: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
            rows.map(|i| {
                cols.clone()
                    .map(|k| {
                        let terms: Vec<CycNum> = mid.clone().map(|w| &self.a[i][w] * &self.b[w][k]).collect();
                        CycNum::sum(&terms)
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
        };
        let identity_check = |name: &'static str, m: Vec<Vec<CycNum>>, offset: usize| -> Result<_, DecError> {
            let mut bad = Vec::new();
            for (i, row) in m.iter().enumerate() {
                for (k, x) in row.iter().enumerate() {
                    let target = if i == k { CycNum::one() } else { CycNum::zero() };
                    if !rf.reduce(&(x - &target))?.is_zero() {
                        bad.push(Violation {
                            check: name,
                            row: self.class_names[offset + i].clone(),
                            col: self.class_names[offset + k].clone(),
                        });
                    }
                }
            }
            Ok((name, bad))
        };

        checks.push(identity_check(AB_IDENTITY, product(0..r, 0..r, 0..r), 0)?);

        let mut bad = Vec::new();
        for i in s..r {
            for w in 0..sigma {
                if !rf.reduce(&self.a[i][w])?.is_zero() {
                    bad.push(Violation { check: A21_ZERO, row: self.class_names[i].clone(), col: self.pim_names[w].clone() });
                }
            }
        }
        checks.push((A21_ZERO, bad));

        let mut bad = Vec::new();
        for w in sigma..r {
            for k in 0..s {
                if !rf.reduce(&self.b[w][k])?.is_zero() {
                    bad.push(Violation { check: B21_ZERO, row: self.pim_names[w].clone(), col: self.class_names[k].clone() });
                }
            }
        }
        checks.push((B21_ZERO, bad));

        if s == sigma {
            checks.push(identity_check(A11B11_IDENTITY, product(0..s, 0..s, 0..s), 0)?);
            checks.push(identity_check(A22B22_IDENTITY, product(s..r, s..r, s..r), s)?);
        } else {
            let shape = |check| Violation { check, row: format!("s={s}"), col: format!("sigma={sigma}") };
            checks.push((A11B11_IDENTITY, vec![shape(A11B11_IDENTITY)]));
            checks.push((A22B22_IDENTITY, vec![shape(A22B22_IDENTITY)]));
        }
        Ok(CongruenceReport { residue_degree: rf.degree(), checks })
    }
}
