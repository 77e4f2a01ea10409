//! Input resolution: fixture name, table/decomposition files, or a group
//! recipe run through the oracle.

use std::fs;

use pimtype_core::classify::ClassifyError;
use pimtype_core::grp::{construct, ClassRealityReport, EnumeratedGroup, GroupError};
use pimtype_core::meataxe::{oracle_enumerated, ChopConfig, MeatAxeError, OracleReport};
use pimtype_core::{fixtures, CharacterTable, DecError, DecompositionData, TableError};

use crate::args::InputArgs;
use crate::CliError;

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<DecError> for CliError {
    fn from(e: DecError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge(b) => CliError::Input(format!("group order exceeds the bound {b} (raise --bound)")),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<MeatAxeError> for CliError {
    fn from(e: MeatAxeError) -> Self {
        match e {
            MeatAxeError::Group(g) => g.into(),
            MeatAxeError::TooLarge(_) => CliError::Input(e.to_string()),
            other => CliError::Inconsistent(other.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::Inconsistent(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Fixture(String),
    Files,
    Group(String),
}

/// The single input source named by the flags.
pub fn source(input: &InputArgs) -> Result<Source, CliError> {
    if input.table.is_some() != input.dec.is_some() {
        return Err(CliError::Input("--table and --dec must be given together".into()));
    }
    let given = [input.fixture.is_some(), input.table.is_some(), input.group.is_some()];
    match given {
        [true, false, false] => Ok(Source::Fixture(input.fixture.clone().unwrap())),
        [false, true, false] => Ok(Source::Files),
        [false, false, true] => Ok(Source::Group(input.group.clone().unwrap())),
        [false, false, false] => Err(CliError::Input("no input: use --fixture, --group or --table/--dec".into())),
        _ => Err(CliError::Input("give exactly one of --fixture, --group, --table/--dec".into())),
    }
}

fn read(path: &std::path::Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn table_from(input: &InputArgs) -> Result<Option<CharacterTable>, CliError> {
    if let Some(name) = &input.fixture {
        return Ok(Some(fixtures::load_table(name)?));
    }
    if let Some(path) = &input.table {
        return Ok(Some(CharacterTable::parse(&read(path)?)?));
    }
    Ok(None)
}

pub fn enumerate(recipe: &str, bound: usize) -> Result<EnumeratedGroup, CliError> {
    Ok(construct(recipe)?.enumerate_bounded(bound)?)
}

/// Decomposition data and class realities, plus the oracle run for group
/// input.
pub struct Loaded {
    pub data: DecompositionData,
    pub reality: ClassRealityReport,
    pub group: Option<EnumeratedGroup>,
    pub oracle: Option<OracleReport>,
}

pub fn load(input: &InputArgs) -> Result<Loaded, CliError> {
    let data = match source(input)? {
        Source::Fixture(name) => fixtures::load(&name)?,
        Source::Files => {
            let table = CharacterTable::parse(&read(input.table.as_ref().unwrap())?)?;
            DecompositionData::parse(&read(input.dec.as_ref().unwrap())?, table)?
        }
        Source::Group(recipe) => {
            let group = enumerate(&recipe, input.bound)?;
            let cfg = ChopConfig { seed: input.seed, ..ChopConfig::default() };
            let oracle = oracle_enumerated(&group, &cfg)?;
            let reality = group.reality_classification();
            return Ok(Loaded { data: oracle.data.clone(), reality, group: Some(group), oracle: Some(oracle) });
        }
    };
    let reality = data.table().expect("table input").reality_report()?;
    Ok(Loaded { data, reality, group: None, oracle: None })
}
