/// Conway polynomials over GF(2) for degrees 1..=20, as bitmasks with bit `i`
/// holding the coefficient of `x^i` (the leading term included).
pub const CONWAY_GF2: [u32; 20] = [
    0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D, 0x211, 0x46F, 0x805, 0x10EB, 0x201B, 0x40A9,
    0x8035, 0x1002D, 0x20009, 0x41403, 0x80027, 0x1006F3,
];

pub const MAX_DEGREE: u32 = 20;

pub fn conway_polynomial(degree: u32) -> Option<u32> {
    (1..=MAX_DEGREE).contains(&degree).then(|| CONWAY_GF2[degree as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{FFElem, Gf2m};
    use crate::numth::prime_factors;

    fn eval_at(field: &Gf2m, poly: u32, x: FFElem) -> FFElem {
        (0..=31).rev().fold(FFElem::ZERO, |acc, i| {
            let c = if poly >> i & 1 == 1 { FFElem::ONE } else { FFElem::ZERO };
            field.add(field.mul(acc, x), c)
        })
    }

    /// Whether `x` generates the multiplicative group of `field`.
    fn is_primitive_element(field: &Gf2m, x: FFElem) -> bool {
        let n = field.unit_order() as u64;
        !x.is_zero() && prime_factors(n).iter().all(|&p| field.pow(x, n / p) != FFElem::ONE)
    }

    #[test]
    fn subfield_compatibility() {
        for d in 2..=MAX_DEGREE {
            let f = Gf2m::get(d).unwrap();
            for e in (1..d).filter(|e| d % e == 0) {
                let img = f.subfield_generator(e).unwrap();
                assert_eq!(eval_at(&f, conway_polynomial(e).unwrap(), img), FFElem::ZERO, "d={d} e={e}");
            }
        }
    }

    #[test]
    fn least_compatible_primitive_polynomial() {
        // Bitmask order coincides with the lexicographic order on
        // coefficients from x^(d-1) down.
        for d in 1..=10u32 {
            let mine = conway_polynomial(d).unwrap();
            let big = Gf2m::get(d).unwrap();
            for cand in (1u32 << d)..mine {
                // roots of the candidate inside GF(2^d), if any
                let root = big.elements().find(|&x| {
                    eval_at(&big, cand, x).is_zero() && is_primitive_element(&big, x)
                });
                let Some(root) = root else { continue };
                let compatible = (1..d).filter(|e| d % e == 0).all(|e| {
                    let k = big.unit_order() / ((1 << e) - 1);
                    eval_at(&big, conway_polynomial(e).unwrap(), big.pow(root, k as u64)).is_zero()
                });
                assert!(!compatible, "d={d}: {cand:#x} precedes the shipped polynomial");
            }
        }
    }
}
