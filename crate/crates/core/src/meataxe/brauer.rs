//! Brauer characters of constituents and the decomposition data built
//! from them.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{ChopResult, MeatAxeError, ModRep};
use crate::chartab::CharacterTable;
use crate::cyclo::{CycNum, ResidueField};
use crate::dectab::{cyc_inverse, DecompositionData, RegularClass};
use crate::ffield::{eval_poly, FFElem, Gf2m};
use crate::grp::EnumeratedGroup;
use crate::numth::{odd_part, order_of_two};

/// Starting field degree: the order of 2 modulo the odd part of the
/// exponent, so GF(2^m) holds every eigenvalue of a 2-regular element.
pub fn lift_field_degree(group: &EnumeratedGroup) -> u32 {
    let e = group.classes().iter().fold(1u64, |acc, c| num_integer::lcm(acc, odd_part(c.element_order)));
    order_of_two(e).max(1)
}

/// Divides `p` (constant term first) by `x - λ`, returning the quotient
/// when the remainder is zero.
fn divide_root(field: &Gf2m, p: &[FFElem], lambda: FFElem) -> Option<Vec<FFElem>> {
    if p.len() < 2 || !eval_poly(field, p, lambda).is_zero() {
        return None;
    }
    let n = p.len() - 1;
    let mut q = vec![FFElem::ZERO; n];
    q[n - 1] = p[n];
    for i in (1..n).rev() {
        q[i - 1] = field.add(p[i], field.mul(lambda, q[i]));
    }
    Some(q)
}

/// Values of the Brauer character of `m` at the given 2-regular classes of
/// `group`: eigenvalues `γ^{k(2^m-1)/o}` of a class representative of order
/// `o` lift to `ζ_o^k`, with `γ` the canonical generator.
pub fn brauer_character(m: &ModRep, group: &EnumeratedGroup, classes: &[usize]) -> Result<Vec<CycNum>, MeatAxeError> {
    let f = m.field();
    let q1 = f.unit_order() as u64;
    classes
        .iter()
        .map(|&c| {
            let class = &group.classes()[c];
            let fail = |msg: String| MeatAxeError::Eigenvalues { class: class.name.clone(), msg };
            let o = class.element_order;
            if o.is_multiple_of(2) || !q1.is_multiple_of(o) {
                return Err(fail(format!("element order {o} does not divide 2^{} - 1", f.degree())));
            }
            let a = m.element_matrix(group, class.representative);
            let mut p = a.charpoly();
            let mut terms = Vec::new();
            for k in 0..o {
                let lambda = f.gen_pow((k * (q1 / o)) as i64);
                while let Some(q) = divide_root(f, &p, lambda) {
                    p = q;
                    terms.push(CycNum::root_of_unity(o as usize, k as i64));
                }
            }
            if terms.len() != m.dim() {
                return Err(fail(format!("found {} of {} eigenvalues", terms.len(), m.dim())));
            }
            let value = CycNum::sum(&terms);
            // the lift must reduce back to the trace
            let rf = ResidueField::new(o as usize)?;
            if rf.is_conway() {
                let sub = Gf2m::get(rf.degree())?;
                let reduced = f.embed_from(&sub, rf.reduce_ff(&value)?);
                let trace = (0..m.dim()).fold(FFElem::ZERO, |acc, i| f.add(acc, a.get(i, i)));
                if reduced != Some(trace) {
                    return Err(MeatAxeError::LiftMismatch(class.name.clone()));
                }
            }
            Ok(value)
        })
        .collect()
}

fn sort_key(m: &ModRep, phi: &[CycNum]) -> (bool, usize, String) {
    let text: Vec<String> = phi.iter().map(ToString::to_string).collect();
    (!m.is_trivial(), m.dim(), text.join(","))
}

/// Decomposition data of `group` from its chopped regular module, with no
/// ordinary table. Also returns, for each Brauer index, the position of the
/// matching constituent in `chop`. Composition multiplicities are checked
/// against `Φ_j(1)`.
pub fn group_decomposition(group: &EnumeratedGroup, chop: &ChopResult) -> Result<(DecompositionData, Vec<usize>), MeatAxeError> {
    let regular: Vec<usize> = (0..group.classes().len()).filter(|&c| group.classes()[c].is_two_regular()).collect();
    if chop.constituents.len() != regular.len() {
        return Err(MeatAxeError::Check(format!(
            "{} constituents for {} 2-regular classes",
            chop.constituents.len(),
            regular.len()
        )));
    }
    let classes: Vec<RegularClass> = regular
        .iter()
        .map(|&c| {
            let k = &group.classes()[c];
            RegularClass {
                name: k.name.clone(),
                element_order: k.element_order,
                size: k.size as u64,
                centralizer_order: k.centralizer_order as u64,
                inverse: regular.iter().position(|&x| x == k.inverse).expect("inverse of odd order is odd"),
            }
        })
        .collect();
    let mut rows: Vec<(usize, Vec<CycNum>)> = chop
        .constituents
        .iter()
        .enumerate()
        .map(|(i, c)| Ok((i, brauer_character(&c.module, group, &regular)?)))
        .collect::<Result<_, MeatAxeError>>()?;
    rows.sort_by_cached_key(|(i, phi)| sort_key(&chop.constituents[*i].module, phi));
    let labels: Vec<String> = (1..=rows.len()).map(|j| format!("phi{j}")).collect();
    let order: Vec<usize> = rows.iter().map(|(i, _)| *i).collect();
    let phi: Vec<Vec<CycNum>> = rows.into_iter().map(|(_, v)| v).collect();
    let data = DecompositionData::from_brauer_characters(group.name.clone(), group.order() as u64, classes, labels, phi)?;
    let id = data.identity_class();
    for (j, &i) in order.iter().enumerate() {
        let dim_p = data.pim(j)[id].to_integer().and_then(|x| x.to_usize());
        if dim_p != Some(chop.constituents[i].multiplicity) {
            return Err(MeatAxeError::Check(format!(
                "{}: composition multiplicity {} but PIM dimension {:?}",
                data.brauer_labels()[j],
                chop.constituents[i].multiplicity,
                dim_p
            )));
        }
    }
    Ok((data, order))
}

/// Solves `χ* = Σ d_χφ φ` against an ordinary table of the same group.
/// Table classes are matched to group classes by element order, class size
/// and power maps; every candidate bijection is tried until one gives a
/// non-negative integer matrix.
pub fn derive_decomposition(
    group: &EnumeratedGroup,
    group_data: &DecompositionData,
    table: &CharacterTable,
) -> Result<DecompositionData, MeatAxeError> {
    let tcols = table.two_regular_classes();
    let gregular: Vec<usize> = (0..group.classes().len()).filter(|&c| group.classes()[c].is_two_regular()).collect();
    if tcols.len() != gregular.len() {
        return Err(MeatAxeError::NoMatching);
    }
    let candidates: Vec<Vec<usize>> = tcols
        .iter()
        .map(|&t| {
            let tc = &table.classes()[t];
            (0..gregular.len())
                .filter(|&k| {
                    let gc = &group.classes()[gregular[k]];
                    gc.element_order == tc.element_order && gc.size as u64 == tc.size
                })
                .collect()
        })
        .collect();
    let mut sigma = Vec::new();
    let mut used = vec![false; gregular.len()];
    search(group, group_data, table, &tcols, &gregular, &candidates, &mut sigma, &mut used)
        .ok_or(MeatAxeError::NoMatching)
}

#[allow(clippy::too_many_arguments)]
fn search(
    group: &EnumeratedGroup,
    data: &DecompositionData,
    table: &CharacterTable,
    tcols: &[usize],
    gregular: &[usize],
    candidates: &[Vec<usize>],
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<DecompositionData> {
    let k = sigma.len();
    if k == tcols.len() {
        return try_matching(group, data, table, tcols, gregular, sigma);
    }
    for &c in &candidates[k] {
        if used[c] {
            continue;
        }
        used[c] = true;
        sigma.push(c);
        let found = search(group, data, table, tcols, gregular, candidates, sigma, used);
        sigma.pop();
        used[c] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

fn try_matching(
    group: &EnumeratedGroup,
    data: &DecompositionData,
    table: &CharacterTable,
    tcols: &[usize],
    gregular: &[usize],
    sigma: &[usize],
) -> Option<DecompositionData> {
    // power maps must commute with the matching
    for (k, &t) in tcols.iter().enumerate() {
        let gc = &group.classes()[gregular[sigma[k]]];
        for (p, &img) in &table.classes()[t].power_maps {
            let (Some(tk), Some(&gimg)) = (tcols.iter().position(|&x| x == img), gc.power_maps.get(p)) else {
                continue;
            };
            if gregular[sigma[tk]] != gimg {
                return None;
            }
        }
    }
    let l = data.num_brauer();
    let phi: Vec<Vec<CycNum>> = (0..l).map(|j| sigma.iter().map(|&g| data.phi(j)[g].clone()).collect()).collect();
    let b_inv = cyc_inverse(&phi)?;
    let mut d = Vec::with_capacity(table.characters().len());
    for chi in table.characters() {
        let mut row = Vec::with_capacity(l);
        for j in 0..l {
            let terms: Vec<CycNum> = tcols.iter().enumerate().map(|(k, &t)| &chi.values[t] * &b_inv[k][j]).collect();
            let x = CycNum::sum(&terms).to_integer()?;
            if x < BigInt::from(0) {
                return None;
            }
            row.push(x.to_i64()?);
        }
        d.push(row);
    }
    let known: Vec<(String, Vec<CycNum>)> = data.brauer_labels().iter().cloned().zip(phi).collect();
    DecompositionData::from_matrix(table.clone(), data.brauer_labels().to_vec(), d, &known).ok()
}
