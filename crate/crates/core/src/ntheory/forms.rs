//! Class numbers of imaginary quadratic orders by counting reduced
//! primitive binary quadratic forms.

use crate::{Error, Int, Result};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Number of reduced primitive forms ax^2 + bxy + cy^2 of discriminant
/// `d = b^2 - 4ac < 0`, i.e. the class number h(d) of the order of that
/// discriminant.
///
/// Reduction convention: |b| <= a <= c, with forms having a = c or a = |b|
/// counted once with b >= 0.
pub fn class_number(d: &Int) -> Result<u64> {
    let four = Int::from(4);
    let rem = d.mod_floor(&four);
    if !d.is_negative() || !(rem.is_zero() || rem == Int::from(1)) {
        return Err(Error::InvalidDiscriminant(d.clone()));
    }
    let abs_d = d.abs();
    // 3a^2 <= 4ac - b^2 = |d| bounds a
    let a_max = (&abs_d / Int::from(3)).sqrt();
    let mut h = 0u64;
    let mut a = Int::from(1);
    while a <= a_max {
        // b = d (mod 2), 0 <= b <= a; negative b handled by symmetry
        let mut b = if d.is_even() { Int::zero() } else { Int::from(1) };
        while b <= a {
            let t = &b * &b - d;
            let four_a = &four * &a;
            if t.mod_floor(&four_a).is_zero() {
                let c = t / four_a;
                if c >= a && a.gcd(&b).gcd(&c) == Int::from(1) {
                    let on_boundary = b.is_zero() || b == a || a == c;
                    h += if on_boundary { 1 } else { 2 };
                }
            }
            b += 2;
        }
        a += 1;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: i64) -> u64 {
        class_number(&Int::from(d)).unwrap()
    }

    #[test]
    fn spec_values() {
        assert_eq!(h(-4), 1);
        assert_eq!(h(-23), 3);
        assert_eq!(h(-20), 2);
    }

    #[test]
    fn known_table_values() {
        assert_eq!(h(-3), 1);
        assert_eq!(h(-7), 1);
        assert_eq!(h(-8), 1);
        assert_eq!(h(-11), 1);
        assert_eq!(h(-15), 2);
        assert_eq!(h(-19), 1);
        assert_eq!(h(-116), 6);
        assert_eq!(h(-163), 1);
        assert_eq!(h(-231), 12);
    }

    #[test]
    fn bad_discriminants_rejected() {
        for d in [0i64, 4, -5, -6, -1, -2, 3] {
            assert!(class_number(&Int::from(d)).is_err(), "d={d}");
        }
    }
}
