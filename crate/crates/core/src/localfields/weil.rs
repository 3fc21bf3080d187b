//! The Weil-bound threshold: the least prime power M1 such that every
//! smooth genus-g curve over a finite field with at least M1 elements has
//! a rational point.

use crate::ntheory::factor;
use crate::{Error, Int, Result};

/// Genus together with the prime-power threshold M1.
///
/// The defining inequality q + 1 - 2g sqrt(q) > 0 is checked exactly as
/// (q+1)^2 > 4 g^2 q; it holds at M1 and at every prime power beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilThreshold {
    pub genus: u32,
    pub m1: Int,
}

fn weil_positive(q: &Int, g: u32) -> bool {
    // (q+1)^2 > 4 g^2 q, exact in integers
    let q1 = q + Int::from(1);
    &q1 * &q1 > Int::from(4u64 * (g as u64) * (g as u64)) * q
}

fn is_prime_power(n: u64) -> bool {
    n >= 2 && factor(&Int::from(n)).map(|f| f.factors().len() == 1).unwrap_or(false)
}

/// Prime powers >= 2, ascending.
fn prime_powers() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime_power(n))
}

/// Smallest prime power at and beyond which the Weil inequality holds.
pub fn weil_threshold(g: u32) -> Result<WeilThreshold> {
    if g < 1 {
        return Err(Error::InvalidInput("genus must be >= 1".into()));
    }
    // the inequality is an upward parabola in q, true for all
    // q > 2g^2 - 1 + 2g sqrt(g^2 - 1), so 4g^2 safely bounds the last failure
    let scan_to = 4u64 * (g as u64) * (g as u64) + 2;
    let mut last_fail: Option<u64> = None;
    for q in prime_powers().take_while(|&q| q <= scan_to) {
        if !weil_positive(&Int::from(q), g) {
            last_fail = Some(q);
        }
    }
    let m1 = match last_fail {
        None => 2,
        Some(f) => prime_powers().find(|&q| q > f).expect("next prime power"),
    };
    let t = WeilThreshold {
        genus: g,
        m1: Int::from(m1),
    };
    // invariant checks: true at M1 and the next ten prime powers,
    // false at the largest prime power below (when one fails at all)
    debug_assert!(prime_powers()
        .filter(|&q| q >= m1)
        .take(11)
        .all(|q| weil_positive(&Int::from(q), g)));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        assert_eq!(weil_threshold(1).unwrap().m1, Int::from(2));
        assert_eq!(weil_threshold(2).unwrap().m1, Int::from(16));
        assert_eq!(weil_threshold(3).unwrap().m1, Int::from(37));
    }

    #[test]
    fn monotone_in_genus() {
        let mut prev = Int::from(0);
        for g in 1..=8 {
            let m1 = weil_threshold(g).unwrap().m1;
            assert!(m1 >= prev, "g={g}");
            prev = m1;
        }
    }

    #[test]
    fn boundary_behavior() {
        // g = 2: q = 13 fails (14 < 4*sqrt(13)), 16 is the next prime power
        assert!(!weil_positive(&Int::from(13), 2));
        assert!(weil_positive(&Int::from(16), 2));
        assert!(!is_prime_power(14));
        assert!(!is_prime_power(15));
        // g = 3: 32 fails, 37 passes, no prime power in between
        assert!(!weil_positive(&Int::from(32), 3));
        assert!(weil_positive(&Int::from(37), 3));
        for n in 33..37 {
            assert!(!is_prime_power(n), "{n}");
        }
    }
}
