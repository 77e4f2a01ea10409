//! Quadratic type of principal indecomposable modules in characteristic 2.
//!
//! The crate has two independent routes to the same verdicts:
//!
//! * the character-theoretic route ([`chartab`], [`dectab`], [`classify`]),
//!   which works from an ordinary character table and a 2-decomposition
//!   matrix using exact cyclotomic arithmetic ([`cyclo`]);
//! * a module-theoretic oracle ([`meataxe`]) which builds the regular module
//!   of a small permutation group ([`grp`]) over GF(2^m) ([`ffield`]), chops it
//!   into irreducibles and tests invariant forms directly.

#![allow(clippy::needless_range_loop, clippy::should_implement_trait)]

pub mod chartab;
pub mod classify;
pub mod cyclo;
pub mod dectab;
pub mod ffield;
pub mod fixtures;
pub mod grp;
pub mod meataxe;
pub mod numth;
pub mod qmat;

pub use cyclo::{CycError, CycNum, ResidueElem, ResidueField};
pub use ffield::{FFElem, FFMatrix, FieldError, Gf2m};
pub use chartab::{CharacterTable, TableError};
pub use dectab::{DecError, DecompositionData};
pub use grp::{ClassRealityReport, EnumeratedGroup, GroupError, PermGroup, Reality};
pub use classify::{classify_pims, verify_counts, Classification, Divisibility, PimVerdict, Verdict};
pub use meataxe::{oracle_verdicts, ChopConfig, MeatAxeError, ModRep, OracleReport};
