use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::classify::Verdict;
use crate::cyclo::CycNum;
use crate::fixtures;
use crate::grp::construct;

fn group(recipe: &str) -> EnumeratedGroup {
    construct(recipe).unwrap().enumerate().unwrap()
}

fn class_words(g: &EnumeratedGroup) -> Vec<Vec<usize>> {
    g.classes().iter().filter(|c| c.is_two_regular()).map(|c| g.word(c.representative)).collect()
}

fn regular_chop(g: &EnumeratedGroup) -> ChopResult {
    let field = Gf2m::get(lift_field_degree(g)).unwrap();
    let rep = ModRep::regular(g, field).unwrap();
    chop(&rep, &ChopConfig::default(), &class_words(g)).unwrap()
}

#[test]
fn c3_over_gf4_splits_into_three_characters() {
    let g = group("cyclic:3");
    assert_eq!(lift_field_degree(&g), 2);
    let c = regular_chop(&g);
    assert_eq!(c.constituents.len(), 3);
    assert!(c.constituents.iter().all(|k| k.module.dim() == 1 && k.multiplicity == 1));
    let mut scalars: Vec<FFElem> = c.constituents.iter().map(|k| k.module.gens()[0].get(0, 0)).collect();
    scalars.sort();
    let f = Gf2m::get(2).unwrap();
    let mut expect = vec![FFElem::ONE, f.generator(), f.gen_pow(2)];
    expect.sort();
    assert_eq!(scalars, expect);
}

#[test]
fn c3_over_gf2_escalates() {
    let g = group("cyclic:3");
    let rep = ModRep::regular(&g, Gf2m::get(1).unwrap()).unwrap();
    let cfg = ChopConfig::default();
    assert!(matches!(chop(&rep, &cfg, &class_words(&g)), Err(MeatAxeError::NotSplitting(1))));
    let (big, c) = chop_with_escalation(&rep, &cfg, &class_words(&g)).unwrap();
    assert_eq!(big.degree(), 2);
    assert_eq!(c.constituents.len(), 3);
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let g = group("sym:3");
    let rep = ModRep::regular(&g, Gf2m::get(2).unwrap()).unwrap();
    let cfg = ChopConfig { max_tries: 0, schur_limit: 0, ..ChopConfig::default() };
    assert!(matches!(chop(&rep, &cfg, &[]), Err(MeatAxeError::Inconclusive { .. })));
}

#[test]
fn regular_module_satisfies_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for recipe in ["sym:3", "q8", "alt:4"] {
        let g = group(recipe);
        let rep = ModRep::regular(&g, Gf2m::get(2).unwrap()).unwrap();
        rep.verify_relations(&g, 10, &mut rng).unwrap();
    }
}

#[test]
fn s3_constituents_forms_and_murray() {
    let g = group("sym:3");
    let c = regular_chop(&g);
    assert_eq!(c.total_dimension(), 6);
    let dims: Vec<(usize, usize)> = c.constituents.iter().map(|k| (k.module.dim(), k.multiplicity)).collect();
    assert_eq!(dims, [(1, 2), (2, 2)]);
    let natural = &c.constituents[1].module;
    let a3 = g.class_by_name("3A").unwrap();
    let phi = brauer_character(natural, &g, &[0, a3]).unwrap();
    assert_eq!(phi, vec![CycNum::from_int(2), CycNum::from_int(-1)]);
    let trivial = brauer_character(&c.constituents[0].module, &g, &[0, a3]).unwrap();
    assert_eq!(trivial, vec![CycNum::one(), CycNum::one()]);

    let form = fong_form(natural).unwrap();
    assert!(form.is_symplectic());
    assert_eq!(form.gram.rank(), 2);
    let t = g.classes().iter().find(|k| k.element_order == 2).unwrap();
    let tm = natural.element_matrix(&g, t.representative);
    assert!(murray_quadratic_test(&form, &[tm]));
    assert!(!murray_quadratic_test(&form, &[FFMatrix::identity(natural.field().clone(), 2)]));
    assert!(matches!(fong_form(&c.constituents[0].module), Err(MeatAxeError::Trivial)));
}

#[test]
fn c3_characters_are_not_self_dual() {
    let c = regular_chop(&group("cyclic:3"));
    let nontrivial = c.constituents.iter().find(|k| !k.module.is_trivial()).unwrap();
    assert!(matches!(fong_form(&nontrivial.module), Err(MeatAxeError::NotSelfDual)));
}

#[test]
fn derived_decomposition_for_s3() {
    let g = group("sym:3");
    let c = regular_chop(&g);
    let (data, _) = group_decomposition(&g, &c).unwrap();
    assert_eq!(data.cartan(), &[vec![2, 0], vec![0, 1]]);
    let table = fixtures::load_table("s3").unwrap();
    let d = derive_decomposition(&g, &data, &table).unwrap();
    assert_eq!(d.decomposition().unwrap(), &[vec![1, 0], vec![1, 0], vec![0, 1]]);
}

fn sorted_columns(d: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = d[0].len();
    let mut cols: Vec<Vec<i64>> = (0..l).map(|j| d.iter().map(|r| r[j]).collect()).collect();
    cols.sort();
    cols
}

#[test]
fn sl25_oracle_matches_fixture() {
    let g = group("sl25");
    let report = oracle_enumerated(&g, &ChopConfig::default()).unwrap();
    let dims: Vec<usize> = report.verdicts.iter().map(|v| v.dim).collect();
    assert_eq!(dims, [1, 2, 2, 4]);
    assert_eq!(report.labels_with(Verdict::Quadratic), ["phi1"]);
    assert_eq!(report.count(Verdict::NonQuadratic), 3);

    let fixture = fixtures::load("2a5").unwrap();
    let table = fixture.table().unwrap();
    let derived = derive_decomposition(&g, &report.data, table).unwrap();
    assert_eq!(
        sorted_columns(derived.decomposition().unwrap()),
        sorted_columns(fixture.decomposition().unwrap())
    );

    // forms are invariant under arbitrary group elements, not only generators
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in report.modules.iter().filter(|m| !m.is_trivial()) {
        let form = fong_form(m).unwrap();
        assert_eq!(m.dim() % 2, 0);
        for _ in 0..100 {
            let x = rng.random_range(0..g.order());
            assert!(form.is_invariant_under(&m.element_matrix(&g, x)));
        }
    }
}

#[test]
fn small_oracle_verdicts() {
    let cfg = ChopConfig::default();
    let cases: [(&str, usize, usize, usize); 4] =
        [("c3xc4", 1, 1, 0), ("dihedral:14", 4, 0, 0), ("semidirect:cyclic:7;cyclic:4;-1", 1, 3, 0), ("cyclic:3", 1, 0, 2)];
    for (recipe, q, nq, nsd) in cases {
        let r = oracle_verdicts(&construct(recipe).unwrap(), &cfg, DEFAULT_BOUND).unwrap();
        let counts = (r.count(Verdict::Quadratic), r.count(Verdict::NonQuadratic), r.count(Verdict::NotSelfDual));
        assert_eq!(counts, (q, nq, nsd), "{recipe}");
    }
    let big = oracle_verdicts(&construct("sym:5").unwrap(), &cfg, 100);
    assert!(matches!(big, Err(MeatAxeError::TooLarge(100))));
}
