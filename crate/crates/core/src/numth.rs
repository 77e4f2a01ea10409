//! Small integer helpers shared by the cyclotomic and finite-field code.

pub use num_integer::{gcd, lcm};

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Largest power of 2 dividing `n` (for `n > 0`).
pub fn two_part(n: u64) -> u64 {
    1 << n.trailing_zeros()
}

pub fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

/// Multiplicative order of 2 modulo an odd `n`; 1 for `n = 1`.
pub fn order_of_two(n: u64) -> u32 {
    assert!(n % 2 == 1, "order of 2 is only defined modulo odd n");
    if n == 1 {
        return 1;
    }
    let mut x = 2 % n;
    let mut d = 1;
    while x != 1 {
        x = x * 2 % n;
        d += 1;
    }
    d
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).filter(|k| n.is_multiple_of(*k)).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_and_parts() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(1155), 480);
        assert_eq!(two_part(24), 8);
        assert_eq!(odd_part(24), 3);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }

    #[test]
    fn order_of_two_small() {
        assert_eq!(order_of_two(3), 2);
        assert_eq!(order_of_two(7), 3);
        assert_eq!(order_of_two(15), 4);
        assert_eq!(order_of_two(29), 28);
        assert_eq!(mod_inverse(4, 15), Some(4));
        assert_eq!(mod_inverse(6, 15), None);
    }
}
