//! Twenty single-edit corruptions of the bundled fixtures, each of which
//! ingestion must reject.

use pimtype_core::{fixtures, CharacterTable, DecompositionData};

/// (fixture, edit the .dec file?, text to replace, replacement)
pub const MUTATIONS: &[(&str, bool, &str, &str)] = &[
    ("s3", false, "char chi3 [2, -1, 0]", "char chi3 [2, 1, 0]"),
    ("s3", false, "class 3A size=2", "class 3A size=3"),
    ("s3", false, "order 6", "order 7"),
    ("s3", false, "char chi3 [2, -1, 0]\n", ""),
    ("s3", false, "char chi3 [2, -1, 0]", "char chi3 [1, 1, -1]"),
    ("s3", false, "char chi2 [1, 1, -1]", "char chi2 [1, 1/2, -1]"),
    ("2a5", false, "char chi9 [6,", "char chi9 [7,"),
    ("2a5", false, "char chi4 [4, 4, 0, 1, 1, -1, -1, -1, -1]", "char chi4 [4, 4, 0, 1, 1, -1, -1, 1, -1]"),
    ("2a5", false, "char chi6 [2, -2,", "char chi6 [2, 2,"),
    ("2a5", false, "char chi8 [4, -4, 0, 1, -1, -1, 1, -1, 1]", "char chi8 [4, -4, 0, 1, -1, -1, 1, -1]"),
    ("mcl", false, "char chi2 [22, 6,", "char chi2 [22, 7,"),
    ("mcl", false, "class 3A size=30800", "class 3A size=30801"),
    ("mcl", false, "char chi22 [9856, 0, -80", "char chi22 [9856, 0, -81"),
    ("s3", true, "chi2: 1 0", "chi2: 0 1"),
    ("s3", true, "chi3: 0 1", "chi3: 0 2"),
    ("s3", true, "value phi2 [2, -1]", "value phi2 [2, 1]"),
    ("2a5", true, "chi9: 2 1 1 0", "chi9: 2 1 1 1"),
    ("2a5", true, "chi5: 1 1 1 0", "chi5: 1 -1 1 0"),
    ("2a5", true, "decmatrix 9 4", "decmatrix 9 3"),
    ("mcl", true, "chi2: 0 1 0", "chi2: 1 1 0"),
];

/// `Ok` when the corrupted text is rejected; `Err` names the escaped mutation.
pub fn check(name: &str, dec: bool, from: &str, to: &str) -> Result<(), String> {
    let (mut tbl, mut dtext) = fixtures::fixture_text(name).map_err(|e| e.to_string())?;
    let target = if dec { &mut dtext } else { &mut tbl };
    if !target.contains(from) {
        return Err(format!("{name}: pattern {from:?} not present"));
    }
    *target = target.replacen(from, to, 1);
    let outcome = CharacterTable::parse(&tbl)
        .map_err(|e| e.to_string())
        .and_then(|t| DecompositionData::parse(&dtext, t).map_err(|e| e.to_string()));
    match outcome {
        Err(_) => Ok(()),
        Ok(_) => Err(format!("{name}: mutation {from:?} -> {to:?} was accepted")),
    }
}
