//! Exact integer arithmetic primitives.
//!
//! Everything here is deterministic and allocation-exact: primality testing,
//! integer factorization, square classes of rationals, Kronecker symbols,
//! class numbers of imaginary quadratic discriminants by reduced-form
//! counting, and prime streams in arithmetic progressions.  All operations
//! are pure and safe to call from any thread.

mod factor;
mod forms;
mod primality;
mod progression;
pub mod qpoly;
mod squareclass;
mod symbols;

pub use factor::{factor, FactoredInteger, PrimalityCertainty};
pub use forms::class_number;
pub use primality::{is_prime, small_primes, Primality};
pub use progression::primes_in_progression;
pub use squareclass::{squarefree_part, squarefree_part_int, SquareClass};
pub use symbols::kronecker;

use crate::{Int, Rat};
use num_traits::{Signed, Zero};

/// Floor square root test for big integers.
pub fn is_square_int(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Exact square test for rationals (numerator and denominator both squares).
pub fn is_square_rat(r: &Rat) -> bool {
    if r.is_zero() {
        return true;
    }
    is_square_int(r.numer()) && is_square_int(r.denom())
}

/// p-adic valuation of a nonzero integer.
pub fn valuation_int(n: &Int, p: &Int) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let mut v = 0u32;
    let mut m = n.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return v;
        }
    }
}

/// p-adic valuation of a nonzero rational (may be negative).
pub fn valuation_rat(r: &Rat, p: &Int) -> i64 {
    assert!(!r.is_zero(), "valuation of zero");
    valuation_int(r.numer(), p) as i64 - valuation_int(r.denom(), p) as i64
}

/// Strip all factors of `p` from a nonzero integer: returns (unit, valuation).
pub fn unit_part(n: &Int, p: &Int) -> (Int, u32) {
    let v = valuation_int(n, p);
    let mut m = n.clone();
    for _ in 0..v {
        m /= p;
    }
    (m, v)
}
