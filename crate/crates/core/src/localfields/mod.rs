//! Solvability of the supported curve models over the completions of Q.
//!
//! A place is the real place or a finite prime p.  Square classification in
//! Q_p is exact (valuation parity plus a unit residue test), and solvability
//! of the bielliptic double-cover system and of smooth plane quartics is
//! decided by residue-disk recursion with Hensel-stable square classes, with
//! witnesses that can be re-checked against the defining congruences.
//! Places beyond an explicit finite set are certified wholesale by the Weil
//! bound on smooth curves over finite fields.

mod bielliptic;
mod disks;
mod everywhere;
mod plane;
mod weil;

pub use bielliptic::{local_solvable_bielliptic, verify_bielliptic_witness};
pub use everywhere::{
    everywhere_local_bielliptic, everywhere_local_plane, EverywhereLocalReport, WeilArgument,
};
pub use plane::{local_solvable_plane, verify_plane_witness, PlaneQuartic};
pub use weil::{weil_threshold, WeilThreshold};

use crate::ntheory::{self, is_prime, kronecker};
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The real place or a finite prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(Int),
}

impl Place {
    pub fn finite(p: i64) -> Self {
        Place::Finite(Int::from(p))
    }

    pub fn new_finite(p: Int) -> Result<Self> {
        if !is_prime(&p).is_prime() {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(Place::Finite(p))
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "p={p}"),
        }
    }
}

/// How a local verdict was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    RealInterval,
    HenselLift,
    CountAndLift,
    WeilBound,
    DiskExhaustion,
}

/// Approximate solution data accompanying a solvable verdict.
///
/// For finite places the residues satisfy the model's defining congruences
/// at the stated modulus p^k (in the chart indicated); for the real place a
/// floating-point sample point is given instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Affine chart of the double cover: Y^2 = A(x), d*W^2 = B(x) mod p^k,
    /// where A, B are the integer-scaled chart polynomials of the model.
    BiellipticPadic {
        chart: Chart,
        x: Int,
        y: Int,
        w: Int,
        k: u32,
    },
    /// Real sample (x, y, w) with small residuals.
    BiellipticReal { x: f64, y: f64, w: f64 },
    /// Projective residue point with F = 0 mod p^k.
    PlanePadic { x: Int, y: Int, z: Int, k: u32 },
    /// Real projective sample with a small residual.
    PlaneReal { x: f64, y: f64, z: f64 },
}

/// Coordinate chart on the base P^1 of the double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Chart {
    /// x finite: y^2 = P3(x), d w^2 = a f(x).
    Affine,
    /// z = 1/x with v_p(z) >= 1 (the places over x = infinity).
    InfiniteZ,
}

/// Per-place verdict with method and re-checkable witness.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalSolvabilityReport {
    pub place: Place,
    pub solvable: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    pub depth_used: u32,
}

/// Is r a square in the completion at v?
///
/// Real: r > 0.  Odd p: even valuation and the unit part a quadratic
/// residue mod p.  p = 2: even valuation and unit part = 1 mod 8.
pub fn is_square_local(r: &Rat, v: &Place) -> bool {
    assert!(!r.is_zero(), "square class of zero is undefined");
    match v {
        Place::Real => r.is_positive(),
        Place::Finite(p) => {
            let val = ntheory::valuation_rat(r, p);
            if val.rem_euclid(2) != 0 {
                return false;
            }
            let unit = unit_part_rat(r, p, val);
            unit_is_square(&unit, p)
        }
    }
}

/// The unit part of r at p as a residue: r / p^val reduced mod p (odd p)
/// or mod 8 (p = 2), computed through a modular inverse of the denominator.
fn unit_part_rat(r: &Rat, p: &Int, val: i64) -> Int {
    let modulus = if p == &Int::from(2) {
        Int::from(8)
    } else {
        p.clone()
    };
    let (num_u, nv) = ntheory::unit_part(r.numer(), p);
    let (den_u, dv) = ntheory::unit_part(r.denom(), p);
    debug_assert_eq!(nv as i64 - dv as i64, val);
    let inv = mod_inverse(&den_u.mod_floor(&modulus), &modulus).expect("unit denominator");
    (num_u * inv).mod_floor(&modulus)
}

/// Square test on a p-adic unit residue.
pub(crate) fn unit_is_square(u: &Int, p: &Int) -> bool {
    if p == &Int::from(2) {
        u.mod_floor(&Int::from(8)) == Int::one()
    } else {
        kronecker(u, p) == 1
    }
}

/// Exact test: is the integer n a square in Q_p (zero counts as a square)?
pub(crate) fn int_is_square_in_qp(n: &Int, p: &Int) -> bool {
    if n.is_zero() {
        return true;
    }
    let (unit, v) = ntheory::unit_part(n, p);
    v % 2 == 0 && unit_is_square(&unit.mod_floor(&modulus_for(p)), p)
}

fn modulus_for(p: &Int) -> Int {
    if p == &Int::from(2) {
        Int::from(8)
    } else {
        p.clone()
    }
}

/// Extended-Euclid modular inverse (None when not coprime).
pub(crate) fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let egcd = Int::extended_gcd(&a.mod_floor(m), m);
    if egcd.gcd.is_one() {
        Some(egcd.x.mod_floor(m))
    } else {
        None
    }
}

/// Square root of a quadratic-residue unit mod an odd prime (Tonelli–Shanks).
pub(crate) fn sqrt_mod_p(a: &Int, p: &Int) -> Int {
    let a = a.mod_floor(p);
    debug_assert_eq!(kronecker(&a, p), 1, "not a residue");
    let one = Int::one();
    let two = Int::from(2);
    if p.mod_floor(&Int::from(4)) == Int::from(3) {
        let e = (p + &one) / Int::from(4);
        return a.modpow(&e, p);
    }
    // p = 1 mod 4: full Tonelli–Shanks
    let mut q = p - &one;
    let mut s = 0u32;
    while q.is_even() {
        q /= &two;
        s += 1;
    }
    // least nonresidue
    let mut z = Int::from(2);
    while kronecker(&z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) / &two), p);
    while !t.is_one() {
        let mut i = 0u32;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2).mod_floor(p);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b).mod_floor(p);
        }
        m = i;
        c = (&b * &b).mod_floor(p);
        t = (t * &c).mod_floor(p);
        r = (r * b).mod_floor(p);
    }
    r
}

/// Lift a square root of the unit u to precision p^prec: returns t with
/// t^2 = u mod p^prec.  u must be a square unit in Z_p.
pub(crate) fn sqrt_lift(u: &Int, p: &Int, prec: u32) -> Int {
    if prec == 0 {
        return Int::zero();
    }
    if p == &Int::from(2) {
        // u = 1 mod 8; lift bit by bit from t = 1
        let mut t = Int::one();
        let mut j = 3u32;
        if prec <= 3 {
            return t;
        }
        while j < prec {
            let mj1 = Int::from(2).pow(j + 1);
            if (&t * &t - u).mod_floor(&mj1) != Int::zero() {
                t += Int::from(2).pow(j - 1);
            }
            j += 1;
        }
        t.mod_floor(&Int::from(2).pow(prec))
    } else {
        let mut t = sqrt_mod_p(u, p);
        let mut k = 1u32;
        while k < prec {
            let k2 = (2 * k).min(prec);
            let modulus = p.pow(k2);
            let inv = mod_inverse(&(Int::from(2) * &t).mod_floor(&modulus), &modulus)
                .expect("2t invertible");
            let t2 = (&t * &t - u).mod_floor(&modulus);
            t = (&t - t2 * inv).mod_floor(&modulus);
            k = k2;
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn spec_examples() {
        assert!(is_square_local(&rat(2, 1), &Place::Real));
        assert!(is_square_local(&rat(17, 1), &Place::finite(2)));
        assert!(!is_square_local(&rat(5, 1), &Place::finite(5)));
    }

    #[test]
    fn squares_are_squares_everywhere() {
        let places = [
            Place::Real,
            Place::finite(2),
            Place::finite(3),
            Place::finite(5),
            Place::finite(7),
        ];
        for n in [-12i64, -5, -1, 1, 2, 3, 4, 18, 50] {
            for d in [1i64, 2, 3, 7, 8] {
                let r = rat(n, d);
                let r2 = &r * &r;
                for v in &places {
                    assert!(is_square_local(&r2, v), "{n}/{d} squared at {v}");
                }
            }
        }
    }

    #[test]
    fn square_product_rule() {
        let places = [Place::finite(2), Place::finite(3), Place::finite(13)];
        let vals = [-10i64, -3, -1, 2, 5, 6, 9, 12, 17, 25];
        for v in &places {
            for a in vals {
                for b in vals {
                    let ra = rat(a, 1);
                    let rb = rat(b, 1);
                    if is_square_local(&ra, v) && is_square_local(&rb, v) {
                        assert!(is_square_local(&(ra * rb), v), "{a}*{b} at {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn sqrt_lifting() {
        // odd p
        for (u, p) in [(2i64, 7i64), (4, 5), (9, 11), (5, 11), (12, 13)] {
            let (u, p) = (Int::from(u), Int::from(p));
            if kronecker(&u, &p) != 1 {
                continue;
            }
            for prec in [1u32, 2, 4, 7] {
                let t = sqrt_lift(&u, &p, prec);
                assert!(
                    (&t * &t - &u).mod_floor(&p.pow(prec)).is_zero(),
                    "u={u} p={p} prec={prec}"
                );
            }
        }
        // p = 2: units that are 1 mod 8
        for u in [1i64, 9, 17, 25, 33, 41, 57] {
            let u = Int::from(u);
            for prec in [3u32, 5, 8, 12] {
                let t = sqrt_lift(&u, &Int::from(2), prec);
                assert!(
                    (&t * &t - &u)
                        .mod_floor(&Int::from(2).pow(prec))
                        .is_zero(),
                    "u={u} prec={prec}"
                );
            }
        }
    }
}
