use num_bigint::BigInt;

use super::*;
use crate::fixtures::load_table;
use crate::grp::construct;

fn reality_multiset(r: &ClassRealityReport) -> Vec<(u64, usize, Reality)> {
    let mut v: Vec<_> = r.classes.iter().map(|c| (c.element_order, c.size, c.reality)).collect();
    v.sort_by_key(|x| (x.0, x.1, x.2.as_str()));
    v
}

#[test]
fn fixtures_load() {
    let s3 = load_table("s3").unwrap();
    assert_eq!(s3.num_classes(), 3);
    let degrees: Vec<_> = s3.characters().iter().map(|c| c.degree().to_integer().unwrap()).collect();
    assert_eq!(degrees, [1, 1, 2].map(BigInt::from));
    let t = load_table("2a5").unwrap();
    assert_eq!((t.num_classes(), t.characters().len()), (9, 9));
    assert_eq!(t.order(), 120);
    let mcl = load_table("mcl").unwrap();
    assert_eq!(mcl.num_classes(), 24);
    assert_eq!(mcl.two_regular_classes().len(), 13);
}

#[test]
fn parse_errors() {
    let missing_inv = "order 2\nclass 1A size=1 order=1 inv=1 pow2=1\nclass 2A size=1 order=2 pow2=1\nchar a [1, 1]\nchar b [1, -1]\n";
    assert!(matches!(CharacterTable::parse(missing_inv), Err(TableError::Parse { line: 3, .. })));
    let ok = missing_inv.replace("order=2 pow2", "order=2 inv=2 pow2");
    assert!(CharacterTable::parse(&ok).is_ok());
    let no_pow = ok.replace("order=2 inv=2 pow2=1", "order=2 inv=2");
    assert!(matches!(CharacterTable::parse(&no_pow), Err(TableError::MissingPowerMap { prime: 2, .. })));
    let bad_orth = ok.replace("char b [1, -1]", "char b [1, 1]");
    assert!(matches!(CharacterTable::parse(&bad_orth), Err(TableError::Orthogonality(_))));
    assert!(matches!(CharacterTable::parse("bogus 1\n"), Err(TableError::Parse { line: 1, .. })));
    let declared = format!("classes 3\n{ok}");
    assert!(matches!(CharacterTable::parse(&declared), Err(TableError::Invalid(_))));
}

#[test]
fn indicators() {
    let mcl = load_table("mcl").unwrap();
    let symplectic: Vec<&str> = (0..mcl.characters().len())
        .filter(|&i| mcl.fs_indicator(i).unwrap() == -1)
        .map(|i| mcl.characters()[i].name.as_str())
        .collect();
    assert_eq!(symplectic, ["chi11", "chi13"]);

    // faithful characters of SL(2,5) are exactly those with χ(-1) = -χ(1), all symplectic
    let t = load_table("2a5").unwrap();
    let z = t.class_index("2A").unwrap();
    for (i, chi) in t.characters().iter().enumerate() {
        let faithful = chi.values[z] == chi.degree().scale_int(-1);
        assert_eq!(t.fs_indicator(i).unwrap(), if faithful { -1 } else { 1 }, "{}", chi.name);
    }
    let faithful: Vec<&str> =
        t.characters().iter().filter(|c| c.values[z] != *c.degree()).map(|c| c.name.as_str()).collect();
    assert_eq!(faithful, ["chi6", "chi7", "chi8", "chi9"]);
}

#[test]
fn involution_count_identity() {
    for (fixture, recipe) in [("s3", "sym:3"), ("2a5", "sl25")] {
        let t = load_table(fixture).unwrap();
        let g = construct(recipe).unwrap().enumerate().unwrap();
        assert_eq!(t.indicator_weighted_degree_sum().unwrap(), BigInt::from(g.count_square_roots_of_identity()));
    }
}

#[test]
fn structure_constants() {
    let s3 = load_table("s3").unwrap();
    let (a1, a2, a3) = (0, s3.class_index("2A").unwrap(), s3.class_index("3A").unwrap());
    assert_eq!(s3.structure_constant(a2, a2, a3).unwrap(), 3);
    assert_eq!(s3.structure_constant(a2, a2, a1).unwrap(), 3);
    assert_eq!(s3.structure_constant(a3, a3, a3).unwrap(), 1);
    let g = construct("sym:3").unwrap().enumerate().unwrap();
    let (g2, g3) = (g.class_by_name("2A").unwrap(), g.class_by_name("3A").unwrap());
    assert_eq!(g.structure_constant(g2, g2, g3), 3);

    let t = load_table("2a5").unwrap();
    let (a2, a3) = (t.class_index("2A").unwrap(), t.class_index("3A").unwrap());
    assert_eq!(t.structure_constant(a2, a2, a3).unwrap(), 0);

    for name in ["s3", "2a5"] {
        let t = load_table(name).unwrap();
        let k = t.num_classes();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    assert_eq!(t.structure_constant(i, j, l).unwrap(), t.structure_constant(j, i, l).unwrap());
                }
            }
        }
    }
}

#[test]
fn structure_constants_match_group_counts() {
    let t = load_table("2a5").unwrap();
    let g = construct("sl25").unwrap().enumerate().unwrap();
    // class numbering differs between the two sources, so compare multisets
    let mut from_table: Vec<u64> = Vec::new();
    let mut from_group: Vec<u64> = Vec::new();
    let k = t.num_classes();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                from_table.push(t.structure_constant(i, j, l).unwrap());
                from_group.push(g.structure_constant(i, j, l) as u64);
            }
        }
    }
    from_table.sort_unstable();
    from_group.sort_unstable();
    assert_eq!(from_table, from_group);
}

#[test]
fn strong_reality_from_characters() {
    let mcl = load_table("mcl").unwrap();
    let rep = mcl.reality_report().unwrap();
    assert_eq!(rep.names_with(Reality::StronglyReal, true), ["1A", "3B", "5B"]);
    assert_eq!(rep.names_with(Reality::WeaklyReal, true), ["3A", "5A"]);
    let s3 = load_table("s3").unwrap();
    assert_eq!(s3.reality_report().unwrap().names_with(Reality::StronglyReal, true), ["1A", "3A"]);
}

#[test]
fn reality_agrees_with_group_enumeration() {
    for (fixture, recipe) in [("s3", "sym:3"), ("2a5", "sl25")] {
        let t = load_table(fixture).unwrap();
        let g = construct(recipe).unwrap().enumerate().unwrap();
        assert_eq!(
            reality_multiset(&t.reality_report().unwrap()),
            reality_multiset(&g.reality_classification()),
            "{fixture}"
        );
    }
}
