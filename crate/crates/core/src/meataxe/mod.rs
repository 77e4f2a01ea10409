//! Module-theoretic oracle: the regular module of a small group over
//! GF(2^m), chopped into irreducibles, with Brauer characters, invariant
//! symplectic forms and the quadratic-type test on each constituent.

mod brauer;
mod chop;
mod forms;
mod oracle;

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::cyclo::CycError;
use crate::dectab::DecError;
use crate::ffield::{FFElem, FFMatrix, FieldError, Gf2m};
use crate::grp::{EnumeratedGroup, GroupError};

pub use brauer::{brauer_character, derive_decomposition, group_decomposition, lift_field_degree};
pub use chop::{chop, chop_with_escalation, ChopConfig, ChopResult, Constituent};
pub use forms::{endomorphism_dimension, fong_form, murray_quadratic_test, FongForm};
pub use oracle::{oracle_enumerated, oracle_verdicts, r_elementary_family, OracleReport, OracleVerdict, DEFAULT_BOUND, DEFAULT_SEED};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeatAxeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Dec(#[from] DecError),
    #[error("generator {0} is not an invertible square matrix of the module dimension")]
    BadGenerator(usize),
    #[error("relation check failed for element {0}")]
    Relation(usize),
    #[error("group order exceeds the oracle bound {0}")]
    TooLarge(usize),
    #[error("inconclusive: could not certify a {dim}-dimensional piece after {tries} random elements")]
    Inconclusive { dim: usize, tries: usize },
    #[error("GF(2^{0}) is not a splitting field and cannot be enlarged further")]
    NotSplitting(u32),
    #[error("eigenvalue extraction failed at class {class}: {msg}")]
    Eigenvalues { class: String, msg: String },
    #[error("Brauer lift disagrees with the trace at class {0}")]
    LiftMismatch(String),
    #[error("constituent is not self-dual")]
    NotSelfDual,
    #[error("constituent is trivial")]
    Trivial,
    #[error("invariant form space has dimension {0}, expected 1")]
    FormSpace(usize),
    #[error("invariant form is not symplectic and non-degenerate")]
    DegenerateForm,
    #[error("no class matching between the group and the table gives a valid decomposition matrix")]
    NoMatching,
    #[error("oracle consistency check failed: {0}")]
    Check(String),
}

/// A matrix representation over GF(2^m): one matrix per generator of the
/// source group, acting on row vectors.
#[derive(Clone, Debug)]
pub struct ModRep {
    field: Arc<Gf2m>,
    dim: usize,
    gens: Vec<FFMatrix>,
    source: Option<String>,
}

impl ModRep {
    pub fn new(field: Arc<Gf2m>, dim: usize, gens: Vec<FFMatrix>) -> Result<Self, MeatAxeError> {
        for (i, g) in gens.iter().enumerate() {
            if g.nrows() != dim || g.ncols() != dim || g.field().degree() != field.degree() {
                return Err(MeatAxeError::BadGenerator(i));
            }
            if dim > 0 && g.rank() != dim {
                return Err(MeatAxeError::BadGenerator(i));
            }
        }
        Ok(ModRep { field, dim, gens, source: None })
    }

    /// The right regular module: basis `e_x`, `e_x · g = e_{xg}`.
    pub fn regular(group: &EnumeratedGroup, field: Arc<Gf2m>) -> Result<Self, MeatAxeError> {
        let n = group.order();
        let gens = group
            .generators()
            .iter()
            .map(|g| {
                let gi = group.index_of(g).expect("generators are elements");
                let mut m = FFMatrix::zeros(field.clone(), n, n);
                for x in 0..n {
                    m.set(x, group.mul(x, gi), FFElem::ONE);
                }
                m
            })
            .collect();
        let mut rep = ModRep::new(field, n, gens)?;
        rep.source = Some(group.name.clone());
        Ok(rep)
    }

    pub fn field(&self) -> &Arc<Gf2m> {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[FFMatrix] {
        &self.gens
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    /// Matrix of the product of generators listed in `word`, left to right.
    pub fn word_matrix(&self, word: &[usize]) -> FFMatrix {
        word.iter()
            .fold(FFMatrix::identity(self.field.clone(), self.dim), |acc, &s| acc.mul(&self.gens[s]))
    }

    pub fn element_matrix(&self, group: &EnumeratedGroup, i: usize) -> FFMatrix {
        self.word_matrix(&group.word(i))
    }

    /// The same representation over a larger field.
    pub fn extend_to(&self, big: &Arc<Gf2m>) -> Option<Self> {
        let gens = self.gens.iter().map(|g| g.extend_to(big)).collect::<Option<Vec<_>>>()?;
        Some(ModRep { field: big.clone(), dim: self.dim, gens, source: self.source.clone() })
    }

    /// Contragredient module: `g ↦ (g⁻¹)ᵀ`.
    pub fn dual(&self) -> Result<Self, MeatAxeError> {
        let gens = self.gens.iter().map(|g| Ok(g.inverse()?.transpose())).collect::<Result<_, FieldError>>()?;
        Ok(ModRep { field: self.field.clone(), dim: self.dim, gens, source: self.source.clone() })
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 1 && self.gens.iter().all(FFMatrix::is_identity)
    }

    /// Checks that the matrices satisfy the group's relations: for
    /// `samples` random pairs `(x, y)`, the matrix of the word of `xy`
    /// equals the product of the matrices of the words of `x` and `y`.
    pub fn verify_relations(&self, group: &EnumeratedGroup, samples: usize, rng: &mut impl Rng) -> Result<(), MeatAxeError> {
        if group.order() == 1 {
            return Ok(());
        }
        for _ in 0..samples {
            let x = rng.random_range(0..group.order());
            let y = rng.random_range(0..group.order());
            let xy = group.mul(x, y);
            let lhs = self.element_matrix(group, xy);
            let rhs = self.element_matrix(group, x).mul(&self.element_matrix(group, y));
            if lhs != rhs {
                return Err(MeatAxeError::Relation(xy));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
