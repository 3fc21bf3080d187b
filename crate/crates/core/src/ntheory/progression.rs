//! Prime streams in arithmetic progressions.

use super::primality::is_prime;
use crate::{Budget, Error, Int, Result};
use num_integer::Integer;
use num_traits::{One, Signed};

/// First `count` primes p = a (mod m), ascending, for which `pred(p)` holds.
///
/// Requires gcd(a, m) = 1 (Dirichlet's condition for the progression to
/// contain primes at all).  The budget bounds the number of candidates
/// scanned; exhaustion is reported as a distinct error.
pub fn primes_in_progression<F>(
    a: &Int,
    m: &Int,
    mut pred: F,
    count: usize,
    budget: &mut Budget,
) -> Result<Vec<Int>>
where
    F: FnMut(&Int) -> bool,
{
    if !m.is_positive() {
        return Err(Error::InvalidInput(format!("modulus {m} must be positive")));
    }
    if a.gcd(m) != Int::one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            m: m.clone(),
        });
    }
    let mut found = Vec::with_capacity(count);
    let mut candidate = a.mod_floor(m);
    if candidate < Int::from(2) {
        candidate += m;
    }
    while found.len() < count {
        budget.spend(1, "scanning a prime progression")?;
        if is_prime(&candidate).is_prime() && pred(&candidate) {
            found.push(candidate.clone());
        }
        candidate += m;
    }
    Ok(found)
}
