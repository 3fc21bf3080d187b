//! Primality testing and a small prime sieve.

use crate::Int;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

/// Outcome of a primality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Deterministically proven prime (inputs below 2^64, or found by sieve).
    ProvenPrime,
    /// Miller–Rabin with 64 witness rounds; error probability < 4^-64.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

const SIEVE_LIMIT: usize = 1 << 20; // ~1.05e6, covers the trial-division bound

static SIEVE: Lazy<Vec<u32>> = Lazy::new(|| {
    let mut composite = vec![false; SIEVE_LIMIT];
    let mut primes = Vec::with_capacity(82_000);
    for n in 2..SIEVE_LIMIT {
        if !composite[n] {
            primes.push(n as u32);
            let mut m = n * n;
            while m < SIEVE_LIMIT {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
});

/// All primes below 2^20, ascending.
pub fn small_primes() -> &'static [u32] {
    &SIEVE
}

// Verifying these twelve bases decides primality for every n < 2^64.
const MR_BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn miller_rabin(n: &BigUint, base: &BigUint) -> bool {
    // true = passes (probably prime for this base)
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = base.modpow(&d, n);
    if x.is_one() || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Primality of |n|.  Deterministic below 2^64; 64 Miller–Rabin rounds above,
/// reported as [`Primality::ProbablePrime`].
pub fn is_prime(n: &Int) -> Primality {
    let n = n.magnitude().clone();
    if n < BigUint::from(2u32) {
        return Primality::Composite;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return Primality::ProvenPrime; // 2, 3
        }
        if small % 2 == 0 {
            return Primality::Composite;
        }
        for &b in MR_BASES_64.iter() {
            if small == b {
                return Primality::ProvenPrime;
            }
            if small % b == 0 {
                return Primality::Composite;
            }
            if !miller_rabin(&n, &BigUint::from(b)) {
                return Primality::Composite;
            }
        }
        return Primality::ProvenPrime;
    }
    // Large input: trial-divide by a few small primes, then 64 rounds with
    // the first 64 primes as witnesses (deterministic choice).
    for &p in &SIEVE[..256] {
        if (&n % p).is_zero() {
            return Primality::Composite;
        }
    }
    for &b in SIEVE.iter().take(64) {
        if !miller_rabin(&n, &BigUint::from(b)) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn prime_by_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn agrees_with_trial_division_below_10000() {
        for n in 0..10_000u64 {
            let got = is_prime(&Int::from_u64(n).unwrap()).is_prime();
            assert_eq!(got, prime_by_trial(n), "n = {n}");
        }
    }

    #[test]
    fn sieve_starts_correctly() {
        assert_eq!(&small_primes()[..8], &[2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn large_carmichael_rejected() {
        // 3^2 * 1000003^2-ish composites and a known strong pseudoprime base 2
        let n = Int::from(3215031751u64); // spsp to bases 2,3,5,7? composite
        assert_eq!(is_prime(&n), Primality::Composite);
    }
}
