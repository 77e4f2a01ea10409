//! Per-PIM verdicts computed from modules alone.

use super::{chop_with_escalation, fong_form, group_decomposition, lift_field_degree, murray_quadratic_test};
use super::{ChopConfig, MeatAxeError, ModRep};
use crate::classify::Verdict;
use crate::dectab::DecompositionData;
use crate::ffield::Gf2m;
use crate::grp::{EnumeratedGroup, GroupError, PermGroup};

pub const DEFAULT_SEED: u64 = 0x2b1d_5eed;
pub const DEFAULT_BOUND: usize = 300;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub label: String,
    pub dim: usize,
    /// Composition multiplicity in the regular module, `dim P`.
    pub multiplicity: usize,
    pub verdict: Verdict,
    /// Involution class with `B(mt, m) ≠ 0` for some `m`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub group: String,
    pub order: usize,
    pub field_degree: u32,
    pub tries: usize,
    pub verdicts: Vec<OracleVerdict>,
    /// Brauer characters from the constituents, with PIMs and Cartan
    /// matrix derived from them.
    pub data: DecompositionData,
    /// Constituent modules, in Brauer order.
    pub modules: Vec<ModRep>,
}

impl OracleReport {
    pub fn labels_with(&self, verdict: Verdict) -> Vec<&str> {
        self.verdicts.iter().filter(|v| v.verdict == verdict).map(|v| v.label.as_str()).collect()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts.iter().filter(|v| v.verdict == verdict).count()
    }

    pub fn quadratic_mask(&self) -> Vec<bool> {
        self.verdicts.iter().map(|v| v.verdict == Verdict::Quadratic).collect()
    }
}

/// Chops the regular module of `g` and decides every PIM: the trivial one
/// is quadratic, a non-self-dual one has no verdict, and any other is
/// quadratic iff some involution gives a non-zero `B(mt, m)` on its head.
pub fn oracle_verdicts(g: &PermGroup, cfg: &ChopConfig, bound: usize) -> Result<OracleReport, MeatAxeError> {
    let group = match g.enumerate_bounded(bound) {
        Err(GroupError::TooLarge(_)) => return Err(MeatAxeError::TooLarge(bound)),
        other => other?,
    };
    oracle_enumerated(&group, cfg)
}

pub fn oracle_enumerated(group: &EnumeratedGroup, cfg: &ChopConfig) -> Result<OracleReport, MeatAxeError> {
    let field = Gf2m::get(lift_field_degree(group))?;
    let rep = ModRep::regular(group, field)?;
    let words: Vec<Vec<usize>> =
        group.classes().iter().filter(|c| c.is_two_regular()).map(|c| group.word(c.representative)).collect();
    let (rep, chopped) = chop_with_escalation(&rep, cfg, &words)?;
    let (data, order) = group_decomposition(group, &chopped)?;
    let involutions: Vec<(String, Vec<usize>)> = group
        .classes()
        .iter()
        .filter(|c| c.element_order == 2)
        .map(|c| (c.name.clone(), group.word(c.representative)))
        .collect();

    let mut verdicts = Vec::new();
    let mut modules = Vec::new();
    for (j, &i) in order.iter().enumerate() {
        let c = &chopped.constituents[i];
        let m = &c.module;
        let label = data.brauer_labels()[j].clone();
        let (verdict, witness) = if m.is_trivial() {
            (Verdict::Quadratic, None)
        } else {
            match fong_form(m) {
                Err(MeatAxeError::NotSelfDual) if !data.is_self_dual(j) => (Verdict::NotSelfDual, None),
                Err(e) => return Err(e),
                Ok(_) if !data.is_self_dual(j) => {
                    return Err(MeatAxeError::Check(format!("{label} has an invariant form but a non-real Brauer character")));
                }
                Ok(form) => {
                    let witness = involutions
                        .iter()
                        .find(|(_, w)| murray_quadratic_test(&form, &[m.word_matrix(w)]))
                        .map(|(name, _)| name.clone());
                    let v = if witness.is_some() { Verdict::Quadratic } else { Verdict::NonQuadratic };
                    (v, witness)
                }
            }
        };
        verdicts.push(OracleVerdict { label, dim: m.dim(), multiplicity: c.multiplicity, verdict, witness });
        modules.push(m.clone());
    }
    Ok(OracleReport {
        group: group.name.clone(),
        order: group.order(),
        field_degree: rep.degree(),
        tries: chopped.tries,
        verdicts,
        data,
        modules,
    })
}

/// `C_n ⋊ E` test groups, each generator of `E` centralizing or inverting
/// `C_n`: (display name, recipe).
pub fn r_elementary_family() -> Vec<(String, String)> {
    let cases: &[(usize, &str, &str)] = &[
        (3, "cyclic:2", "-1"),
        (5, "cyclic:2", "-1"),
        (7, "cyclic:2", "-1"),
        (9, "cyclic:2", "-1"),
        (21, "cyclic:2", "-1"),
        (3, "cyclic:2", "1"),
        (3, "cyclic:4", "-1"),
        (5, "cyclic:4", "-1"),
        (7, "cyclic:4", "-1"),
        (15, "cyclic:4", "-1"),
        (5, "cyclic:4", "1"),
        (3, "q8", "-1,1"),
        (5, "q8", "-1,-1"),
        (7, "q8", "1,1"),
        (3, "dihedral:8", "1,-1"),
        (7, "dihedral:8", "1,-1"),
        (11, "dihedral:8", "1,-1"),
        (5, "dihedral:8", "-1,1"),
        (9, "dihedral:8", "-1,1"),
        (13, "dihedral:8", "-1,-1"),
    ];
    cases
        .iter()
        .map(|&(n, e, act)| {
            let short = match e {
                "cyclic:2" => "C2",
                "cyclic:4" => "C4",
                "q8" => "Q8",
                _ => "D8",
            };
            (format!("C{n}:{short}[{act}]"), format!("semidirect:cyclic:{n};{e};{act}"))
        })
        .collect()
}
