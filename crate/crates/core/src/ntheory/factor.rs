//! Integer factorization: trial division below 2^20, then Pollard's rho
//! (Brent variant) with fixed seeds.  Running out of rho attempts is an
//! explicit error, never a wrong factorization.

use super::primality::{is_prime, small_primes, Primality};
use crate::{Error, Int, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Whether every prime in a factorization was proven or merely subjected to
/// 64 Miller–Rabin rounds (only possible for factors >= 2^64).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum PrimalityCertainty {
    Proven,
    Probable,
}

/// A nonzero integer together with its prime factorization.
///
/// Invariants: primes strictly increasing, exponents >= 1, and the product
/// of `p^e` equals `|value|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: Int,
    factors: Vec<(Int, u32)>,
    certainty: PrimalityCertainty,
}

impl FactoredInteger {
    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn factors(&self) -> &[(Int, u32)] {
        &self.factors
    }

    pub fn certainty(&self) -> PrimalityCertainty {
        self.certainty
    }

    /// Recompose `sign * prod p^e`; equals `value` by construction.
    pub fn recompose(&self) -> Int {
        let mut acc = if self.value.is_negative() {
            -Int::one()
        } else {
            Int::one()
        };
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    /// The squarefree kernel `sign * prod_{e odd} p`.
    pub fn squarefree_kernel(&self) -> Int {
        let mut acc = if self.value.is_negative() {
            -Int::one()
        } else {
            Int::one()
        };
        for (p, e) in &self.factors {
            if e % 2 == 1 {
                acc *= p;
            }
        }
        acc
    }
}

fn rho_brent(n: &Int, seed: u64) -> Option<Int> {
    // Brent's cycle-finding rho; n odd composite, not a prime power check
    // needed by the caller.  Deterministic for a fixed seed.
    let c = Int::from(seed);
    let mut y = Int::from(seed.wrapping_mul(0x9e3779b9) % 1_000_003 + 2);
    let m = 128u32;
    let mut g = Int::one();
    let mut r = 1u64;
    let mut q = Int::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let step = |v: &Int| ((v * v) + &c) % n;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min((r - k) as u32) {
                y = step(&y);
                q = (&q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m as u64;
        }
        r *= 2;
        if r > (1u64 << 24) {
            return None;
        }
    }
    if &g == n {
        // backtrack
        loop {
            ys = step(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g.is_one() || &g == n {
        None
    } else {
        Some(g)
    }
}

fn factor_magnitude(n: &Int, out: &mut Vec<(Int, u32)>, certainty: &mut PrimalityCertainty) -> Result<()> {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let p = Int::from(p);
        if &(&p * &p) > &rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p);
            if r.is_zero() {
                e += 1;
                rest = q;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if rest.is_one() {
        return Ok(());
    }
    // rest has no factor below 2^20
    let mut stack = vec![rest];
    let mut found: Vec<Int> = Vec::new();
    while let Some(m) = stack.pop() {
        match is_prime(&m) {
            Primality::ProvenPrime => found.push(m),
            Primality::ProbablePrime => {
                *certainty = PrimalityCertainty::Probable;
                found.push(m);
            }
            Primality::Composite => {
                let mut split = None;
                for seed in 1..=24u64 {
                    if let Some(g) = rho_brent(&m, seed) {
                        split = Some(g);
                        break;
                    }
                }
                let g = split.ok_or_else(|| Error::BudgetExhausted {
                    context: format!("factoring {m} by Pollard rho"),
                })?;
                let h = &m / &g;
                stack.push(g);
                stack.push(h);
            }
        }
    }
    found.sort();
    let mut i = 0;
    while i < found.len() {
        let mut e = 1u32;
        while i + 1 < found.len() && found[i + 1] == found[i] {
            e += 1;
            found.remove(i + 1);
        }
        out.push((found[i].clone(), e));
        i += 1;
    }
    Ok(())
}

/// Factor a nonzero integer into certified primes.
pub fn factor(n: &Int) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors = Vec::new();
    let mut certainty = PrimalityCertainty::Proven;
    factor_magnitude(&n.abs(), &mut factors, &mut certainty)?;
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(FactoredInteger {
        value: n.clone(),
        factors,
        certainty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(n: i64) -> FactoredInteger {
        factor(&Int::from(n)).unwrap()
    }

    #[test]
    fn unit_has_empty_factor_list() {
        assert!(fi(1).factors().is_empty());
        assert!(fi(-1).factors().is_empty());
    }

    #[test]
    fn sixty() {
        let f = fi(60);
        let want: Vec<(Int, u32)> =
            vec![(Int::from(2), 2), (Int::from(3), 1), (Int::from(5), 1)];
        assert_eq!(f.factors(), &want[..]);
    }

    #[test]
    fn negative_prime() {
        let f = fi(-97);
        assert_eq!(f.factors(), &[(Int::from(97), 1)]);
        assert_eq!(f.value(), &Int::from(-97));
    }

    #[test]
    fn zero_rejected() {
        assert!(matches!(factor(&Int::from(0)), Err(Error::ZeroInput)));
    }

    #[test]
    fn recompose_and_primality_of_listed_factors() {
        for n in [-720i64, -97, 2, 97 * 89, 1 << 20, 999_983 * 7, 1_000_003] {
            let f = fi(n);
            assert_eq!(f.recompose(), Int::from(n));
            for (p, e) in f.factors() {
                assert!(*e >= 1);
                assert!(is_prime(p).is_prime(), "{p} not prime");
            }
            for w in f.factors().windows(2) {
                assert!(w[0].0 < w[1].0, "primes not strictly increasing");
            }
        }
    }

    #[test]
    fn semiprime_beyond_sieve() {
        // both factors above the 2^20 trial-division bound
        let p = Int::from(1_048_583u64); // prime
        let q = Int::from(1_048_589u64); // prime
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.factors(), &[(p, 1), (q, 1)]);
        assert_eq!(f.certainty(), PrimalityCertainty::Proven);
    }
}
