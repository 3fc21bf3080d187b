//! Construction and exact certification of algebraic curves over Q that
//! violate the Hasse principle.
//!
//! The library builds double covers `C -> E` of rank-zero elliptic curves
//! (bielliptic curves with an involution `w -> -w`), searches for quadratic
//! twist parameters `d` for which the twisted curve has points in every
//! completion of Q, and then proves exactly that the twist has no rational
//! points at all, by reducing the global question to square-class checks on
//! the finitely many rational fibers.  The outcome is a machine-checkable
//! certificate that can be re-verified from scratch.
//!
//! Module map:
//!
//! - [`ntheory`] — exact integer arithmetic: primality, factoring, Kronecker
//!   symbols, imaginary-quadratic class numbers, primes in progressions.
//! - [`localfields`] — solvability over R and Q_p: square classification,
//!   residue-disk search with Hensel lifting, Weil-bound thresholds, and the
//!   place-by-place `everywhere_local` driver.
//! - [`elliptic`] — elliptic curves over Q: group law, complete torsion by
//!   the Lutz–Nagell bound, reduction data, and graded Mordell–Weil evidence.
//! - [`twist`] — bielliptic model construction, hypothesis checks, twist
//!   candidate search, fiber square classes, and certification.
//! - [`ffield`] — F_p[t] arithmetic: irreducible streams, polynomial residue
//!   symbols, Kummer and Artin–Schreier twist selection.
//! - [`modparams`] — admissible level pairs (M, N) for Atkin–Lehner fixed
//!   points, class-number filtered level searches, and the explicit
//!   Hasse-bound term.
//! - [`cert`] — certificate documents (JSON), independent re-verification,
//!   the end-to-end pipeline, and model-file parsing.

pub mod budget;
pub mod cert;
pub mod elliptic;
pub mod error;
pub mod ffield;
pub mod localfields;
pub mod modparams;
pub mod ntheory;
pub mod twist;

pub use budget::Budget;
pub use error::{Error, Result};

/// Big integers used throughout; all arithmetic is exact.
pub type Int = num_bigint::BigInt;
/// Exact rational numbers (always kept in lowest terms by `num-rational`).
pub type Rat = num_rational::BigRational;
