//! The Kronecker symbol (a|n), the full multiplicative extension of the
//! Legendre symbol to arbitrary integer "denominators".

use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Kronecker symbol (a|n) in {-1, 0, +1}; total on all integer pairs.
///
/// Agrees with the Legendre symbol for odd prime n and a coprime to n, and
/// is completely multiplicative in both arguments.
pub fn kronecker(a: &Int, n: &Int) -> i32 {
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    if a.is_even() && n.is_even() {
        return 0;
    }
    let mut k: i32 = 1;
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            k = -k;
        }
    }
    // split off the even part of n; (a|2) = 0, +1, -1 for a mod 8 in
    // {even}, {1,7}, {3,5}
    let two = Int::from(2);
    let mut e = 0u32;
    while n.is_even() {
        n /= &two;
        e += 1;
    }
    if e > 0 {
        if a.is_even() {
            return 0;
        }
        if e % 2 == 1 {
            let a8 = a.mod_floor(&Int::from(8));
            if a8 == Int::from(3) || a8 == Int::from(5) {
                k = -k;
            }
        }
    }
    // Jacobi symbol (a|n) with n odd positive, by reciprocity
    let mut a = a.mod_floor(&n);
    loop {
        if n.is_one() {
            return k;
        }
        if a.is_zero() {
            return 0;
        }
        let mut v = 0u32;
        while a.is_even() {
            a /= &two;
            v += 1;
        }
        if v % 2 == 1 {
            let n8 = n.mod_floor(&Int::from(8));
            if n8 == Int::from(3) || n8 == Int::from(5) {
                k = -k;
            }
        }
        if a.mod_floor(&Int::from(4)) == Int::from(3)
            && n.mod_floor(&Int::from(4)) == Int::from(3)
        {
            k = -k;
        }
        let t = n.mod_floor(&a);
        n = a;
        a = t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kr(a: i64, n: i64) -> i32 {
        kronecker(&Int::from(a), &Int::from(n))
    }

    #[test]
    fn spec_values() {
        assert_eq!(kr(1, 7), 1);
        assert_eq!(kr(3, 7), -1); // 3^3 = 27 = -1 mod 7
        assert_eq!(kr(6, 5), 1); // 6 = 1 mod 5
    }

    #[test]
    fn matches_euler_criterion_for_odd_primes() {
        let primes = [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        for &p in &primes {
            for a in -60i64..60 {
                if a.rem_euclid(p) == 0 {
                    assert_eq!(kr(a, p), 0);
                    continue;
                }
                let is_qr = (1..p).any(|x| (x * x - a).rem_euclid(p) == 0);
                assert_eq!(kr(a, p), if is_qr { 1 } else { -1 }, "a={a}, p={p}");
            }
        }
    }

    #[test]
    fn multiplicative_in_numerator() {
        for n in (1i64..200).step_by(2) {
            for a in -20i64..20 {
                for b in -20i64..20 {
                    assert_eq!(kr(a * b, n), kr(a, n) * kr(b, n), "a={a} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn edge_denominators() {
        assert_eq!(kr(1, 0), 1);
        assert_eq!(kr(-1, 0), 1);
        assert_eq!(kr(5, 0), 0);
        assert_eq!(kr(4, 2), 0);
        assert_eq!(kr(7, 2), 1); // 7 = -1 mod 8
        assert_eq!(kr(3, 2), -1);
        assert_eq!(kr(-7, -3), -(kr(-7, 3))); // (a|-1) factor for a < 0
    }
}
