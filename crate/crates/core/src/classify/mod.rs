//! Quadratic-type classification of self-dual PIMs from character data,
//! the counting check against strongly real classes, and the
//! Frobenius–Schur constituent report.

mod battery;
mod report;

use std::fmt;

use thiserror::Error;

use crate::cyclo::{CycError, CycNum, ResidueField};
use crate::dectab::{DecError, DecompositionData};
use crate::grp::{ClassRealityReport, Reality};

pub use battery::{run_battery, Check, CONGRUENCE_KEYS};
pub use report::{classification_report, MachineReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Dec(#[from] DecError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error("criteria disagree for {pim}: strongly real witness {strong:?}, weakly real witness {weak:?}")]
    Disagreement { pim: String, strong: Option<String>, weak: Option<String> },
    #[error("the trivial PIM {0} is not classified quadratic")]
    TrivialNotQuadratic(String),
    #[error("Frobenius-Schur check failed for {pim}: {msg}")]
    FrobeniusSchur { pim: String, msg: String },
    #[error("no ordinary table or decomposition matrix available")]
    NoDecomposition,
}

/// Divisibility predicate used for criterion (ii).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Divisibility {
    /// `φ(g) ∈ 2𝔸`, twice an algebraic integer.
    #[default]
    AlgInt,
    /// `φ(g) ∈ 2R`, zero modulo the fixed prime over 2.
    StrictLocal,
}

impl Divisibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Divisibility::AlgInt => "alg-int",
            Divisibility::StrictLocal => "strict-local",
        }
    }

    fn other(self) -> Self {
        match self {
            Divisibility::AlgInt => Divisibility::StrictLocal,
            Divisibility::StrictLocal => Divisibility::AlgInt,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Quadratic,
    NonQuadratic,
    NotSelfDual,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Quadratic => "quadratic",
            Verdict::NonQuadratic => "non-quadratic",
            Verdict::NotSelfDual => "not-self-dual",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PimVerdict {
    /// Brauer index.
    pub index: usize,
    pub label: String,
    pub self_dual: bool,
    pub verdict: Verdict,
    /// Strongly real class with `φ(g)` not divisible by 2.
    pub strong_witness: Option<usize>,
    /// Weakly real class with `Φ(g)/|C(g)| ∉ 2R`.
    pub weak_witness: Option<usize>,
    /// `φ(g)` at every strongly real 2-regular class.
    pub evenness: Vec<(usize, CycNum)>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub mode: Divisibility,
    pub verdicts: Vec<PimVerdict>,
    /// Reality of each 2-regular class of the data.
    pub reality: Vec<Reality>,
    /// Verdicts that change under the other divisibility predicate.
    pub warnings: Vec<String>,
}

impl Classification {
    pub fn quadratic_mask(&self) -> Vec<bool> {
        self.verdicts.iter().map(|v| v.verdict == Verdict::Quadratic).collect()
    }

    pub fn labels_with(&self, verdict: Verdict) -> Vec<&str> {
        self.verdicts.iter().filter(|v| v.verdict == verdict).map(|v| v.label.as_str()).collect()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts.iter().filter(|v| v.verdict == verdict).count()
    }
}

struct Criteria {
    strong: Option<usize>,
    weak: Option<usize>,
    evenness: Vec<(usize, CycNum)>,
}

fn evaluate(
    dd: &DecompositionData,
    w: usize,
    reality: &[Reality],
    rf: &ResidueField,
    mode: Divisibility,
) -> Result<Criteria, ClassifyError> {
    let mut strong = None;
    let mut weak = None;
    let mut evenness = Vec::new();
    for (u, c) in dd.classes().iter().enumerate() {
        match reality[u] {
            Reality::StronglyReal => {
                let v = &dd.phi(w)[u];
                let even = match mode {
                    Divisibility::AlgInt => v.is_twice_alg_int()?,
                    Divisibility::StrictLocal => rf.in_two_r(v)?,
                };
                if !even && strong.is_none() {
                    strong = Some(u);
                }
                evenness.push((u, v.clone()));
            }
            Reality::WeaklyReal if weak.is_none() => {
                let x = dd.pim(w)[u].div_int(c.centralizer_order as i64)?;
                if !rf.in_two_r(&x)? {
                    weak = Some(u);
                }
            }
            _ => {}
        }
    }
    Ok(Criteria { strong, weak, evenness })
}

/// Decides each self-dual PIM by criterion (ii) and independently by
/// criterion (iii); the two must be complementary.
pub fn classify_pims(
    dd: &DecompositionData,
    report: &ClassRealityReport,
    mode: Divisibility,
) -> Result<Classification, ClassifyError> {
    let reality = dd.realities(report)?;
    let rf = dd.residue_field()?;
    let mut verdicts = Vec::with_capacity(dd.num_brauer());
    let mut warnings = Vec::new();
    let name = |u: Option<usize>| u.map(|u| dd.classes()[u].name.clone());
    for w in 0..dd.num_brauer() {
        let label = dd.brauer_labels()[w].clone();
        if !dd.is_self_dual(w) {
            verdicts.push(PimVerdict {
                index: w,
                label,
                self_dual: false,
                verdict: Verdict::NotSelfDual,
                strong_witness: None,
                weak_witness: None,
                evenness: Vec::new(),
            });
            continue;
        }
        let c = evaluate(dd, w, &reality, &rf, mode)?;
        if c.strong.is_some() == c.weak.is_some() {
            return Err(ClassifyError::Disagreement { pim: label, strong: name(c.strong), weak: name(c.weak) });
        }
        let alt = evaluate(dd, w, &reality, &rf, mode.other())?;
        if alt.strong.is_some() != c.strong.is_some() {
            warnings.push(format!(
                "{label}: verdict differs under {} divisibility",
                mode.other().as_str()
            ));
        }
        let verdict = if c.strong.is_some() { Verdict::Quadratic } else { Verdict::NonQuadratic };
        verdicts.push(PimVerdict {
            index: w,
            label,
            self_dual: true,
            verdict,
            strong_witness: c.strong,
            weak_witness: c.weak,
            evenness: c.evenness,
        });
    }
    if let Some(t) = dd.trivial_index() {
        if verdicts[t].verdict != Verdict::Quadratic {
            return Err(ClassifyError::TrivialNotQuadratic(verdicts[t].label.clone()));
        }
    }
    Ok(Classification { mode, verdicts, reality, warnings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub quadratic: usize,
    pub strongly_real: usize,
    pub non_quadratic: usize,
    pub weakly_real: usize,
    pub self_dual: usize,
    pub real: usize,
}

impl CountReport {
    pub fn holds(&self) -> bool {
        self.quadratic == self.strongly_real && self.non_quadratic == self.weakly_real && self.self_dual == self.real
    }
}

/// Compares PIM counts with the 2-regular class census.
pub fn verify_counts(c: &Classification) -> CountReport {
    let count = |r: Reality| c.reality.iter().filter(|&&x| x == r).count();
    CountReport {
        quadratic: c.count(Verdict::Quadratic),
        strongly_real: count(Reality::StronglyReal),
        non_quadratic: c.count(Verdict::NonQuadratic),
        weakly_real: count(Reality::WeaklyReal),
        self_dual: c.verdicts.iter().filter(|v| v.self_dual).count(),
        real: c.reality.iter().filter(|r| r.is_real()).count(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsEntry {
    pub pim: usize,
    /// Orthogonal constituents of odd multiplicity (character indices).
    pub orthogonal_odd: Vec<usize>,
    /// Symplectic constituents of odd multiplicity.
    pub symplectic_odd: Vec<usize>,
    /// All symplectic constituents with their multiplicities.
    pub symplectic: Vec<(usize, i64)>,
    /// `ε(Φ) = Σ d_χφ ν(χ)`.
    pub epsilon: i64,
}

/// Frobenius–Schur constituents of each self-dual PIM. Fails when a
/// self-dual PIM has no orthogonal constituent of odd multiplicity, or a
/// PIM with a symplectic constituent of odd multiplicity was classified
/// quadratic.
pub fn fs_report(dd: &DecompositionData, c: &Classification) -> Result<Vec<FsEntry>, ClassifyError> {
    let (Some(t), Some(d)) = (dd.table(), dd.decomposition()) else {
        return Err(ClassifyError::NoDecomposition);
    };
    let ind: Vec<i32> = (0..t.characters().len())
        .map(|i| t.fs_indicator(i))
        .collect::<Result<_, _>>()
        .map_err(DecError::from)?;
    let mut out = Vec::new();
    for v in c.verdicts.iter().filter(|v| v.self_dual) {
        let w = v.index;
        let mut e = FsEntry { pim: w, orthogonal_odd: vec![], symplectic_odd: vec![], symplectic: vec![], epsilon: 0 };
        for (i, row) in d.iter().enumerate() {
            let m = row[w];
            e.epsilon += m * ind[i] as i64;
            if m == 0 {
                continue;
            }
            match ind[i] {
                1 if m % 2 == 1 => e.orthogonal_odd.push(i),
                -1 => {
                    e.symplectic.push((i, m));
                    if m % 2 == 1 {
                        e.symplectic_odd.push(i);
                    }
                }
                _ => {}
            }
        }
        if e.orthogonal_odd.is_empty() {
            return Err(ClassifyError::FrobeniusSchur {
                pim: v.label.clone(),
                msg: "no orthogonal constituent of odd multiplicity".into(),
            });
        }
        if !e.symplectic_odd.is_empty() && v.verdict == Verdict::Quadratic {
            return Err(ClassifyError::FrobeniusSchur {
                pim: v.label.clone(),
                msg: "symplectic constituent of odd multiplicity in a quadratic PIM".into(),
            });
        }
        out.push(e);
    }
    Ok(out)
}
