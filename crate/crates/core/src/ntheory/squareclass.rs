//! Square classes of nonzero rationals, i.e. elements of Q^x / Q^x2,
//! represented by their unique squarefree integer representative.

use super::factor::factor;
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// An element of Q^x/Q^x2: a squarefree nonzero integer.  The class is
/// trivial iff the representative is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareClass(Int);

impl SquareClass {
    /// Wrap an integer already known squarefree; verified by factoring.
    pub fn new(n: Int) -> Result<Self> {
        let f = factor(&n)?;
        if f.factors().iter().any(|(_, e)| *e > 1) {
            return Err(Error::InvalidInput(format!("{n} is not squarefree")));
        }
        Ok(SquareClass(n))
    }

    pub fn representative(&self) -> &Int {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }

    pub fn one() -> Self {
        SquareClass(Int::one())
    }

    /// Class multiplication: for squarefree a, b the product class is
    /// a*b / gcd(a,b)^2, again squarefree.  No factoring involved.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let g = self.0.gcd(&other.0);
        SquareClass((&self.0 * &other.0) / (&g * &g))
    }
}

impl std::fmt::Display for SquareClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The squarefree part of a nonzero rational: the unique squarefree integer
/// c with r/c a rational square.  Uses `num/den ~ num*den (mod squares)`.
pub fn squarefree_part(r: &Rat) -> Result<SquareClass> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    squarefree_part_int(&(r.numer() * r.denom()))
}

/// Squarefree part of a nonzero integer.
pub fn squarefree_part_int(n: &Int) -> Result<SquareClass> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(SquareClass(factor(n)?.squarefree_kernel()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: i64, d: i64) -> Int {
        squarefree_part(&Rat::new(Int::from(n), Int::from(d)))
            .unwrap()
            .representative()
            .clone()
    }

    #[test]
    fn spec_values() {
        assert_eq!(part(18, 1), Int::from(2));
        assert_eq!(part(4, 9), Int::from(1));
        assert_eq!(part(-8, 1), Int::from(-2));
    }

    #[test]
    fn zero_rejected() {
        assert!(squarefree_part(&Rat::zero()).is_err());
    }

    #[test]
    fn quotient_is_a_square() {
        for n in [-50i64, -12, -1, 1, 2, 18, 45, 49, 360] {
            for d in [1i64, 2, 9, 25] {
                let r = Rat::new(Int::from(n), Int::from(d));
                let c = squarefree_part(&r).unwrap();
                let q = &r / Rat::from(c.representative().clone());
                assert!(super::super::is_square_rat(&q), "{n}/{d}");
            }
        }
    }

    #[test]
    fn class_multiplication_matches_part_of_product() {
        for a in [-30i64, -5, 2, 6, 15, 35] {
            for b in [-21i64, -6, 3, 10, 15] {
                let ca = squarefree_part_int(&Int::from(a)).unwrap();
                let cb = squarefree_part_int(&Int::from(b)).unwrap();
                let cab = squarefree_part_int(&Int::from(a * b)).unwrap();
                assert_eq!(ca.mul(&cb), cab, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn squarefree_constructor_rejects_squares() {
        assert!(SquareClass::new(Int::from(12)).is_err());
        assert!(SquareClass::new(Int::from(-15)).is_ok());
    }
}
