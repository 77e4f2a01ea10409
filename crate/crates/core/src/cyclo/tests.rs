use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;


fn z(n: usize, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k)
}

fn c(s: &str) -> CycNum {
    s.parse().unwrap()
}

#[test]
fn roots_of_unity_sum_and_product() {
    assert_eq!(&z(3, 1) + &z(3, 2), CycNum::from_int(-1));
    assert_eq!(&z(5, 1) * &z(5, 4), CycNum::one());
    assert_eq!(z(4, 2), CycNum::from_int(-1));
    assert_eq!(z(6, 1), -&z(3, 2));
    assert_eq!(z(1, 0), CycNum::one());
}

/// Multiplies integer polynomials and reduces modulo `1 + x + … + x^6`.
fn brute_mul_mod_phi7(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut prod = vec![0i64; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    for k in (6..prod.len()).rev() {
        let t = prod[k];
        if t != 0 {
            for j in 0..=6 {
                prod[k - 6 + j] -= t;
            }
        }
    }
    prod.truncate(6);
    prod
}

#[test]
fn conjugate_pair_product_is_real() {
    let a = &CycNum::one() + &z(7, 1);
    let b = &CycNum::one() + &z(7, 6);
    let p = &a * &b;
    assert!(p.is_real());
    assert_eq!(p.conjugate(), p);
    let expect = brute_mul_mod_phi7(&[1, 1], &[1, 0, 0, 0, 0, 0, 1]);
    let coeffs = expect.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    assert_eq!(p, CycNum::from_coeffs(7, coeffs).unwrap());
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(CycNum::zero().inverse(), Err(CycError::DivisionByZero));
    assert_eq!(CycNum::one().div_int(0), Err(CycError::DivisionByZero));
    let x = &CycNum::from_int(2) + &z(5, 1);
    let y = x.inverse().unwrap();
    assert_eq!(&x * &y, CycNum::one());
}

#[test]
fn conjugation_examples() {
    assert_eq!(z(3, 1).conjugate(), z(3, 2));
    assert_eq!(CycNum::from_int(-1).conjugate(), CycNum::from_int(-1));
    let r = &z(5, 1) + &z(5, 4);
    assert_eq!(r.conjugate(), r);
    assert!(!z(3, 1).is_real());
}

#[test]
fn twice_algebraic_integer_examples() {
    assert!(!CycNum::from_int(-1).is_twice_alg_int().unwrap());
    assert!((&CycNum::from_int(2) + &z(3, 1).scale_int(2)).is_twice_alg_int().unwrap());
    assert!(CycNum::from_int(22).is_twice_alg_int().unwrap());
    assert!(matches!(c("1/2").is_twice_alg_int(), Err(CycError::NotAlgebraicInteger(_))));
}

#[test]
fn reduction_examples() {
    let rf3 = ResidueField::new(3).unwrap();
    assert_eq!(rf3.degree(), 2);
    let s = CycNum::sum([&CycNum::one(), &z(3, 1), &z(3, 2)]);
    assert_eq!(rf3.reduce(&s).unwrap(), ResidueElem::ZERO);
    let rf1 = ResidueField::new(1).unwrap();
    assert_eq!(rf1.reduce(&c("1/3")).unwrap(), ResidueElem::ONE);
    assert_eq!(rf1.reduce(&CycNum::from_int(-1)).unwrap(), ResidueElem::ONE);
    assert!(matches!(rf1.reduce(&c("1/2")), Err(CycError::NotLocal(_))));
    assert!(matches!(rf1.reduce(&z(3, 1)), Err(CycError::ConductorMismatch { .. })));
}

#[test]
fn residue_embedding_has_exact_order() {
    for n in [1usize, 3, 5, 7, 9, 15, 21, 31, 33, 45, 63, 99, 1023] {
        let rf = ResidueField::new(n).unwrap();
        let e = rf.embedding();
        let mut x = e;
        let mut ord = 1;
        while x != ResidueElem::ONE {
            x = rf.mul(x, e);
            ord += 1;
        }
        assert_eq!(ord, n);
    }
}

#[test]
fn even_conductor_roots_reduce_consistently() {
    // ζ_12 = ζ_4^a ζ_3^b, and ζ_4 reduces to 1
    let rf = ResidueField::new(3).unwrap();
    let z12 = z(12, 1);
    let z12_sq = &z12 * &z12;
    let r = rf.reduce(&z12).unwrap();
    assert_eq!(rf.reduce(&z12_sq).unwrap(), rf.mul(r, r));
    assert_eq!(rf.reduce(&z(4, 1)).unwrap(), ResidueElem::ONE);
}

#[test]
fn parse_and_display_round_trip() {
    for s in ["0", "-7/3", "5:[1,0,1,1]", "3:[0,1]", "20:[1,0,0,0,0,0,0,1]"] {
        let x = c(s);
        assert_eq!(c(&x.to_string()), x);
    }
    assert_eq!(c("5:[1,0,1,1]").to_string(), "5:[1,0,1,1]");
    assert_eq!(c("3:[4,0]").to_string(), "4");
    assert!(matches!("7:[1,2]".parse::<CycNum>(), Err(CycError::Parse(..))));
    assert!(matches!("x".parse::<CycNum>(), Err(CycError::Parse(..))));
    assert!(matches!("1/0".parse::<CycNum>(), Err(CycError::Parse(..))));
}

#[test]
fn conductor_two_mod_four_is_never_stored() {
    let x = c("6:[1,1]");
    assert_eq!(x.conductor(), 3);
    let y = &z(10, 1) + &z(5, 2);
    assert!(!(y.conductor() % 4 == 2));
}

#[test]
fn galois_conjugates_of_sqrt5() {
    // (ζ5 + ζ5^4) - (ζ5^2 + ζ5^3) = √5
    let s5 = &(&z(5, 1) + &z(5, 4)) - &(&z(5, 2) + &z(5, 3));
    assert_eq!(&s5 * &s5, CycNum::from_int(5));
    assert_eq!(s5.galois(2), -&s5);
    assert!(s5.is_real());
}

fn arb_num(conductors: &'static [usize], bound: i64) -> impl Strategy<Value = CycNum> {
    proptest::sample::select(conductors).prop_flat_map(move |n| {
        let phi = crate::numth::euler_phi(n as u64) as usize;
        proptest::collection::vec(-bound..=bound, phi).prop_map(move |v| {
            let coeffs = v.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect();
            CycNum::from_coeffs(n, coeffs).unwrap()
        })
    })
}

const SMALL: &[usize] = &[1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 28, 30, 36, 40, 45, 60];
const ODD: &[usize] = &[1, 3, 5, 7, 9, 15, 21];

fn pair_in_same_field() -> impl Strategy<Value = (usize, CycNum, CycNum)> {
    proptest::sample::select(ODD).prop_flat_map(|n| {
        let phi = crate::numth::euler_phi(n as u64) as usize;
        let v = move || {
            proptest::collection::vec(-9i64..=9, phi).prop_map(move |v| {
                let cs = v.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
                CycNum::from_coeffs(n, cs).unwrap()
            })
        };
        (Just(n), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn normalization_is_idempotent(x in arb_num(SMALL, 5)) {
        let again = CycNum::from_coeffs(x.conductor(), x.coeffs().to_vec()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(x.conductor() % 4 != 2);
    }

    #[test]
    fn conjugation_is_an_involution(x in arb_num(SMALL, 5)) {
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn ring_laws(a in arb_num(SMALL, 4), b in arb_num(SMALL, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn twice_implies_reduces_to_zero(x in arb_num(ODD, 6)) {
        let rf = ResidueField::new(x.conductor()).unwrap();
        let twice = x.scale_int(2);
        prop_assert!(twice.is_twice_alg_int().unwrap());
        prop_assert_eq!(rf.reduce(&twice).unwrap(), ResidueElem::ZERO);
        if x.is_twice_alg_int().unwrap() {
            prop_assert_eq!(rf.reduce(&x).unwrap(), ResidueElem::ZERO);
        }
        if x.is_rational() {
            prop_assert_eq!(x.is_twice_alg_int().unwrap(), rf.reduce(&x).unwrap().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn reduction_is_a_ring_homomorphism((n, a, b) in pair_in_same_field()) {
        let rf = ResidueField::new(n).unwrap();
        let (ra, rb) = (rf.reduce(&a).unwrap(), rf.reduce(&b).unwrap());
        prop_assert_eq!(rf.reduce(&(&a * &b)).unwrap(), rf.mul(ra, rb));
        prop_assert_eq!(rf.reduce(&(&a + &b)).unwrap(), rf.add(ra, rb));
    }
}
