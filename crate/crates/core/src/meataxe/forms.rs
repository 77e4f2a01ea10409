//! Invariant bilinear forms, the Schur check and the quadratic-type test.

use super::{MeatAxeError, ModRep};
use crate::ffield::{FFElem, FFMatrix};

/// Gram matrix `X` of a form `B(u, v) = u X vᵀ` invariant under the
/// module: `A X Aᵀ = X` for every generator matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FongForm {
    pub gram: FFMatrix,
}

impl FongForm {
    pub fn is_invariant_under(&self, a: &FFMatrix) -> bool {
        a.mul(&self.gram).mul(&a.transpose()) == self.gram
    }

    pub fn is_symplectic(&self) -> bool {
        let x = &self.gram;
        let n = x.nrows();
        (0..n).all(|i| x.get(i, i).is_zero() && (0..i).all(|j| x.get(i, j) == x.get(j, i)))
    }
}

/// Solution space of a homogeneous system in the `n²` entries of `X`; the
/// closure writes the coefficient row of equation `(a, b)` for a generator.
fn matrix_solutions(rep: &ModRep, coeff: impl Fn(&FFMatrix, usize, usize, &mut [FFElem])) -> Vec<Vec<FFElem>> {
    let n = rep.dim();
    let f = rep.field();
    let mut rows = Vec::with_capacity(rep.gens().len() * n * n);
    for a in rep.gens() {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![FFElem::ZERO; n * n];
                coeff(a, i, j, &mut row);
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..n * n)
            .map(|k| {
                let mut v = vec![FFElem::ZERO; n * n];
                v[k] = FFElem::ONE;
                v
            })
            .collect();
    }
    FFMatrix::from_rows(f.clone(), rows).expect("rectangular").nullspace()
}

/// Dimension of `{X : X A = A X for all generators}`.
pub fn endomorphism_dimension(rep: &ModRep) -> usize {
    let n = rep.dim();
    let f = rep.field().clone();
    matrix_solutions(rep, |a, i, j, row| {
        // (XA - AX)_{ij} = Σ_c X_ic A_cj - A_ic X_cj
        for c in 0..n {
            let k = i * n + c;
            row[k] = f.add(row[k], a.get(c, j));
            let k = c * n + j;
            row[k] = f.add(row[k], a.get(i, c));
        }
    })
    .len()
}

/// The invariant symplectic form of a non-trivial self-dual irreducible.
pub fn fong_form(m: &ModRep) -> Result<FongForm, MeatAxeError> {
    if m.is_trivial() {
        return Err(MeatAxeError::Trivial);
    }
    let n = m.dim();
    let f = m.field().clone();
    let sols = matrix_solutions(m, |a, i, j, row| {
        // (A X Aᵀ - X)_{ij} = Σ_{c,d} A_ic X_cd A_jd - X_ij
        for c in 0..n {
            let aic = a.get(i, c);
            if aic.is_zero() {
                continue;
            }
            for d in 0..n {
                row[c * n + d] = f.mul(aic, a.get(j, d));
            }
        }
        let k = i * n + j;
        row[k] = f.add(row[k], FFElem::ONE);
    });
    match sols.len() {
        0 => return Err(MeatAxeError::NotSelfDual),
        1 => {}
        d => return Err(MeatAxeError::FormSpace(d)),
    }
    let gram = FFMatrix::from_fn(f, n, n, |i, j| sols[0][i * n + j]);
    let form = FongForm { gram };
    if form.gram.rank() != n || !form.is_symplectic() {
        return Err(MeatAxeError::DegenerateForm);
    }
    Ok(form)
}

/// Whether `Q_t(m) = B(mt, m)` is not identically zero for one of the
/// given involution matrices. With `K = T X`, `Q_t(m) = m K mᵀ`, which
/// vanishes identically iff `K` is symmetric with zero diagonal.
pub fn murray_quadratic_test(form: &FongForm, involutions: &[FFMatrix]) -> bool {
    involutions.iter().any(|t| {
        if t.is_identity() {
            return false;
        }
        let k = t.mul(&form.gram);
        let n = k.nrows();
        (0..n).any(|i| !k.get(i, i).is_zero() || (0..i).any(|j| k.get(i, j) != k.get(j, i)))
    })
}
