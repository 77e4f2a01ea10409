//! Bundled character-table fixtures, with a directory override.
//!
//! Setting `PIMTYPE_FIXTURE_DIR` makes `<dir>/<name>.tbl` and
//! `<dir>/<name>.dec` take precedence over the bundled copies, and makes
//! extra fixtures (for example `sp45` or `2ru`) loadable by name.

use std::path::PathBuf;

use crate::chartab::{CharacterTable, TableError};
use crate::dectab::{DecError, DecompositionData};

pub const FIXTURE_DIR_ENV: &str = "PIMTYPE_FIXTURE_DIR";

const BUNDLED: &[(&str, &str, &str)] = &[
    ("s3", include_str!("../fixtures/s3.tbl"), include_str!("../fixtures/s3.dec")),
    ("2a5", include_str!("../fixtures/2a5.tbl"), include_str!("../fixtures/2a5.dec")),
    ("mcl", include_str!("../fixtures/mcl.tbl"), include_str!("../fixtures/mcl.dec")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|b| b.0).collect()
}

fn canonical(name: &str) -> &str {
    match name {
        "sl25" | "SL(2,5)" | "2.A5" => "2a5",
        "S3" | "sym3" => "s3",
        "McL" => "mcl",
        other => other,
    }
}

/// Raw table and decomposition text for a fixture.
pub fn fixture_text(name: &str) -> Result<(String, String), TableError> {
    let name = canonical(name);
    if let Some(dir) = std::env::var_os(FIXTURE_DIR_ENV) {
        let dir = PathBuf::from(dir);
        let tbl = dir.join(format!("{name}.tbl"));
        let dec = dir.join(format!("{name}.dec"));
        if tbl.is_file() && dec.is_file() {
            let read = |p: &PathBuf| {
                std::fs::read_to_string(p).map_err(|e| TableError::Io(p.display().to_string(), e.to_string()))
            };
            return Ok((read(&tbl)?, read(&dec)?));
        }
    }
    BUNDLED
        .iter()
        .find(|b| b.0 == name)
        .map(|b| (b.1.to_string(), b.2.to_string()))
        .ok_or_else(|| TableError::Io(name.to_string(), "no such fixture".into()))
}

/// Whether a fixture is loadable (bundled or present in the override dir).
pub fn available(name: &str) -> bool {
    fixture_text(name).is_ok()
}

fn labelled(name: &str, tbl: &str) -> Result<CharacterTable, TableError> {
    let mut t = CharacterTable::parse(tbl)?;
    t.label.get_or_insert_with(|| name.to_string());
    Ok(t)
}

pub fn load_table(name: &str) -> Result<CharacterTable, TableError> {
    labelled(name, &fixture_text(name)?.0)
}

pub fn load(name: &str) -> Result<DecompositionData, DecError> {
    let (tbl, dec) = fixture_text(name)?;
    DecompositionData::parse(&dec, labelled(name, &tbl)?)
}
