//! The full invariant battery on one set of decomposition data.

use super::{classify_pims, fs_report, verify_counts, ClassifyError, Divisibility};
use crate::cyclo::CycNum;
use crate::dectab::{blocks, DecompositionData};
use crate::grp::ClassRealityReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        Check { name, pass, detail: detail.into() }
    }
}

/// Key-friendly names of the block congruences.
pub const CONGRUENCE_KEYS: [(&str, &str); 5] = [
    (blocks::AB_IDENTITY, "congruence.ab_identity"),
    (blocks::A21_ZERO, "congruence.a21_zero"),
    (blocks::B21_ZERO, "congruence.b21_zero"),
    (blocks::A11B11_IDENTITY, "congruence.a11b11_identity"),
    (blocks::A22B22_IDENTITY, "congruence.a22b22_identity"),
];

/// Runs every check; a failed check is reported, not returned as an error.
/// Errors mean the classification itself could not be formed.
pub fn run_battery(dd: &DecompositionData, report: &ClassRealityReport, mode: Divisibility) -> Result<Vec<Check>, ClassifyError> {
    let c = classify_pims(dd, report, mode)?;
    let mut out = Vec::new();
    let counts = verify_counts(&c);
    out.push(Check::new(
        "counts",
        counts.holds(),
        format!(
            "quadratic {} / strongly real {}, non-quadratic {} / weakly real {}",
            counts.quadratic, counts.strongly_real, counts.non_quadratic, counts.weakly_real
        ),
    ));

    let so = dd.second_orthogonality();
    let identity = so
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| *x == if i == j { CycNum::one() } else { CycNum::zero() }));
    out.push(Check::new("orthogonality", identity, "second orthogonality between φ and Φ"));

    let cr = dd.cartan_report();
    let factors: Vec<String> = cr.invariant_factors.iter().map(ToString::to_string).collect();
    let expected: Vec<String> = cr.expected.iter().map(ToString::to_string).collect();
    out.push(Check::new(
        "cartan.invariant_factors",
        cr.matches,
        format!("{{{}}} vs centralizer 2-parts {{{}}}", factors.join(","), expected.join(",")),
    ));
    out.push(Check::new(
        "cartan.rank_mod_2",
        cr.rank_mod_2 == cr.defect_zero,
        format!("rank {} mod 2, {} classes of defect zero", cr.rank_mod_2, cr.defect_zero),
    ));

    let quadratic = c.quadratic_mask();
    let blocks = dd.real_block_matrices(report, &quadratic)?;
    let rf = blocks.residue_field()?;
    let cong = blocks.verify_congruences(&rf)?;
    for (name, key) in CONGRUENCE_KEYS {
        let bad = cong.checks.iter().find(|(n, _)| *n == name).map_or(0, |(_, v)| v.len());
        out.push(Check::new(key, cong.passed(name), format!("{name} over GF(2^{}), {bad} bad entries", cong.residue_degree)));
    }

    let tp = dd.trivial_pim_check(report)?;
    out.push(Check::new(
        "trivial_pim",
        tp.holds(),
        format!("Φ1(1)/|G|_2 = {}, {} real classes g ≠ 1 checked", tp.identity_ratio, tp.classes.len()),
    ));

    match dd.odd_cartan_witnesses(&quadratic, report) {
        Ok(w) => out.push(Check::new("odd_cartan", true, format!("{} odd entries with witnesses", w.len()))),
        Err(e) => out.push(Check::new("odd_cartan", false, e.to_string())),
    }

    if dd.decomposition().is_some() {
        match fs_report(dd, &c) {
            Ok(f) => out.push(Check::new("frobenius_schur", true, format!("{} self-dual PIMs", f.len()))),
            Err(e) => out.push(Check::new("frobenius_schur", false, e.to_string())),
        }
    }
    Ok(out)
}
