use num_bigint::BigInt;

use super::*;
use crate::fixtures;
use crate::grp::construct;

fn c(s: &str) -> CycNum {
    s.parse().unwrap()
}

fn quadratic_from_labels(d: &DecompositionData, labels: &[&str]) -> Vec<bool> {
    d.brauer_labels().iter().map(|b| labels.contains(&b.as_str())).collect()
}

#[test]
fn s3_pims_and_brauer_values() {
    let d = fixtures::load("s3").unwrap();
    assert_eq!(d.decomposition().unwrap(), &[vec![1, 0], vec![1, 0], vec![0, 1]]);
    let t = d.table().unwrap();
    let sum: Vec<CycNum> = ["1A", "2A", "3A"]
        .iter()
        .map(|n| {
            let k = t.class_index(n).unwrap();
            t.value(0, k) + t.value(1, k)
        })
        .collect();
    assert_eq!(sum, vec![c("2"), c("0"), c("2")]);
    assert_eq!(d.pim(0), &[c("2"), c("2")]);
    assert_eq!(d.phi(1), &[c("2"), c("-1")]);
    assert_eq!(d.cartan(), &[vec![2, 0], vec![0, 1]]);
    let rep = d.cartan_report();
    assert!(rep.matches);
    assert_eq!(rep.invariant_factors, vec![BigInt::from(1), BigInt::from(2)]);
}

#[test]
fn trivial_group() {
    let cls = vec![RegularClass { name: "1A".into(), element_order: 1, size: 1, centralizer_order: 1, inverse: 0 }];
    let d = DecompositionData::from_brauer_characters("1", 1, cls, vec!["phi1".into()], vec![vec![CycNum::one()]]).unwrap();
    assert_eq!(d.cartan(), &[vec![1]]);
    let g = construct("trivial").unwrap().enumerate().unwrap();
    let rep = g.reality_classification();
    let blocks = d.real_block_matrices(&rep, &[true]).unwrap();
    assert_eq!(blocks.a, vec![vec![CycNum::one()]]);
    assert_eq!(blocks.b, vec![vec![CycNum::one()]]);
    let rf = blocks.residue_field().unwrap();
    assert!(blocks.verify_congruences(&rf).unwrap().all_pass());
    let w = d.odd_cartan_witnesses(&[true], &rep).unwrap();
    assert_eq!(w, vec![OddCartanWitness { i: 0, j: 0, w: 0, g_u: 0 }]);
    let tp = d.trivial_pim_check(&rep).unwrap();
    assert!(tp.holds());
    assert_eq!(tp.identity_ratio, BigInt::from(1));
}

#[test]
fn sl25_fixture_values_and_cartan() {
    // the fixture carries independently known φ values; ingestion cross-checks them
    let d = fixtures::load("2a5").unwrap();
    assert_eq!(d.num_brauer(), 4);
    let rep = d.cartan_report();
    assert!(rep.matches, "{rep:?}");
    let expected: Vec<BigInt> = [2, 2, 2, 8].into_iter().map(BigInt::from).collect();
    assert_eq!(rep.invariant_factors, expected);
    // compare with centralizer orders computed in the group
    let g = construct("sl25").unwrap().enumerate().unwrap();
    let mut from_group: Vec<u64> = g
        .classes()
        .iter()
        .filter(|k| k.is_two_regular())
        .map(|k| crate::numth::two_part(k.centralizer_order as u64))
        .collect();
    from_group.sort_unstable();
    assert_eq!(from_group, rep.expected);
}

#[test]
fn mcl_spot_values() {
    let d = fixtures::load("mcl").unwrap();
    assert_eq!(d.num_brauer(), 13);
    let p3 = d.brauer_index("phi3").unwrap();
    let at = |j: usize, n: &str| d.phi(j)[d.class_index(n).unwrap()].clone();
    // χ3 restricts to φ1 + φ3, so φ3 = χ3 - 1 on 2-regular classes
    let t = d.table().unwrap();
    let chi3 = t.character_index("chi3").unwrap();
    for (k, &col) in d.table_columns().iter().enumerate() {
        assert_eq!(&d.phi(p3)[k] + &CycNum::one(), *t.value(chi3, col));
    }
    assert_eq!(at(p3, "5B"), c("0"));
    assert_eq!(at(p3, "3B"), c("5"));
    // φ2 is the restriction of χ2
    let p2 = d.brauer_index("phi2").unwrap();
    let chi2 = t.character_index("chi2").unwrap();
    for (k, &col) in d.table_columns().iter().enumerate() {
        assert_eq!(&d.phi(p2)[k], t.value(chi2, col));
    }
    let rep = d.cartan_report();
    assert!(rep.matches);
    assert_eq!(rep.rank_mod_2, rep.defect_zero);
}

#[test]
fn restriction_identity_and_second_orthogonality() {
    for name in ["s3", "2a5", "mcl"] {
        let d = fixtures::load(name).unwrap();
        let t = d.table().unwrap();
        let dm = d.decomposition().unwrap();
        for (i, row) in dm.iter().enumerate() {
            for (k, &col) in d.table_columns().iter().enumerate() {
                let terms: Vec<CycNum> = row.iter().enumerate().map(|(j, &x)| d.phi(j)[k].scale_int(x)).collect();
                assert_eq!(&CycNum::sum(&terms), t.value(i, col), "{name}");
            }
        }
        let so = d.second_orthogonality();
        for (i, row) in so.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expect = if i == j { CycNum::one() } else { CycNum::zero() };
                assert_eq!(*x, expect, "{name}");
            }
        }
        let rep = d.cartan_report();
        assert!(rep.matches, "{name}");
        assert_eq!(rep.rank_mod_2, rep.defect_zero, "{name}");
    }
}

#[test]
fn duality_pairing_permutes_rows() {
    for name in ["s3", "2a5", "mcl"] {
        let d = fixtures::load(name).unwrap();
        let t = d.table().unwrap();
        let dm = d.decomposition().unwrap();
        let dual_char: Vec<usize> = t
            .characters()
            .iter()
            .map(|chi| {
                let conj: Vec<CycNum> = chi.values.iter().map(CycNum::conjugate).collect();
                t.characters().iter().position(|x| x.values == conj).unwrap()
            })
            .collect();
        for j in 0..d.num_brauer() {
            let conj: Vec<CycNum> = d.phi(j).iter().map(CycNum::conjugate).collect();
            let jd = (0..d.num_brauer()).find(|&x| d.phi(x) == &conj[..]).unwrap();
            for i in 0..dm.len() {
                assert_eq!(dm[i][j], dm[dual_char[i]][jd]);
            }
            assert_eq!(jd == j, d.is_self_dual(j));
        }
    }
}

#[test]
fn table_and_brauer_routes_agree_on_s3() {
    let d = fixtures::load("s3").unwrap();
    let g = DecompositionData::from_brauer_characters(
        "s3",
        6,
        d.classes().to_vec(),
        d.brauer_labels().to_vec(),
        (0..2).map(|j| d.phi(j).to_vec()).collect(),
    )
    .unwrap();
    assert_eq!(g.cartan(), d.cartan());
    for j in 0..2 {
        assert_eq!(g.pim(j), d.pim(j));
    }
}

#[test]
fn block_congruences_on_fixtures() {
    let cases: [(&str, &[&str]); 3] =
        [("s3", &["phi1", "phi2"]), ("2a5", &["phi1"]), ("mcl", &["phi1", "phi3", "phi11"])];
    for (name, quad) in cases {
        let d = fixtures::load(name).unwrap();
        let rep = d.table().unwrap().reality_report().unwrap();
        let q = quadratic_from_labels(&d, quad);
        let blocks = d.real_block_matrices(&rep, &q).unwrap();
        assert_eq!(blocks.s, blocks.sigma, "{name}");
        let rf = blocks.residue_field().unwrap();
        let report = blocks.verify_congruences(&rf).unwrap();
        assert!(report.all_pass(), "{name}: {report:?}");
        let w = d.odd_cartan_witnesses(&q, &rep).unwrap();
        for x in &w {
            let cu = &d.classes()[x.g_u];
            assert_eq!(cu.centralizer_order % 2, 1);
        }
        assert!(d.trivial_pim_check(&rep).unwrap().holds(), "{name}");
    }
}

#[test]
fn sl25_blocks_are_four_by_four() {
    let d = fixtures::load("2a5").unwrap();
    let rep = d.table().unwrap().reality_report().unwrap();
    let blocks = d.real_block_matrices(&rep, &quadratic_from_labels(&d, &["phi1"])).unwrap();
    assert_eq!(blocks.dimension(), 4);
    assert_eq!((blocks.s, blocks.sigma), (1, 1));
    let rf = blocks.residue_field().unwrap();
    let report = blocks.verify_congruences(&rf).unwrap();
    assert!(report.passed(blocks::A21_ZERO) && report.passed(blocks::B21_ZERO));
}

#[test]
fn wrong_verdicts_break_the_congruences() {
    let d = fixtures::load("2a5").unwrap();
    let rep = d.table().unwrap().reality_report().unwrap();
    let blocks = d.real_block_matrices(&rep, &quadratic_from_labels(&d, &["phi1", "phi2"])).unwrap();
    let rf = blocks.residue_field().unwrap();
    assert!(!blocks.verify_congruences(&rf).unwrap().all_pass());
}

#[test]
fn mcl_phi2_column_even_at_strongly_real_classes() {
    let d = fixtures::load("mcl").unwrap();
    let p2 = d.brauer_index("phi2").unwrap();
    let vals: Vec<CycNum> = ["1A", "3B", "5B"].iter().map(|n| d.phi(p2)[d.class_index(n).unwrap()].clone()).collect();
    assert_eq!(vals, vec![c("22"), c("4"), c("2")]);
}

#[test]
fn s3_odd_cartan_witness() {
    let d = fixtures::load("s3").unwrap();
    let rep = d.table().unwrap().reality_report().unwrap();
    let w = d.odd_cartan_witnesses(&[true, true], &rep).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!((w[0].i, w[0].j, w[0].w), (1, 1, 1));
    assert_eq!(d.classes()[w[0].g_u].name, "3A");
    let tp = d.trivial_pim_check(&rep).unwrap();
    assert_eq!(tp.identity_ratio, BigInt::from(1));
    assert_eq!(tp.classes[0].ratio, c("2"));
}

#[test]
fn ingestion_errors() {
    let t = fixtures::load_table("s3").unwrap();
    let labels = vec!["a".to_string(), "b".to_string()];
    let err = DecompositionData::from_matrix(t.clone(), labels.clone(), vec![vec![1, 1], vec![1, 1], vec![1, 1]], &[]);
    assert!(matches!(err, Err(DecError::RankDeficient { rank: 1, expected: 2 })));
    let err = DecompositionData::from_matrix(t.clone(), labels.clone(), vec![vec![1, 0], vec![0, 0], vec![0, 1]], &[]);
    assert!(matches!(err, Err(DecError::NonVanishing { .. })));
    let known = vec![("a".to_string(), vec![c("1"), c("-1")])];
    let err = DecompositionData::from_matrix(t.clone(), labels.clone(), vec![vec![1, 0], vec![1, 0], vec![0, 1]], &known);
    assert!(matches!(err, Err(DecError::Inconsistent(_))));
    assert!(matches!(DecompositionData::parse("brauer: a b\n", t.clone()), Err(DecError::Parse { .. })));
    let text = "decmatrix 3 2\nchi1: 1 0\nchi2: 1 0\n";
    assert!(matches!(DecompositionData::parse(text, t), Err(DecError::Shape(_))));
}
