//! Crate-wide error type.

use crate::localfields::Place;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("zero input where a nonzero value is required")]
    ZeroInput,

    #[error("invalid discriminant {0}: need D < 0 and D = 0 or 1 mod 4")]
    InvalidDiscriminant(crate::Int),

    #[error("residues not coprime: gcd({a}, {m}) != 1")]
    NotCoprime { a: crate::Int, m: crate::Int },

    #[error("search budget exhausted while {context}")]
    BudgetExhausted { context: String },

    #[error("local solvability indeterminate at {place} (depth {depth})")]
    Indeterminate { place: Place, depth: u32 },

    #[error("curve y^2 = x^3 + ({a})x + ({b}) not in the rank-zero registry")]
    RegistryMiss { a: crate::Rat, b: crate::Rat },

    #[error("point does not lie on the curve")]
    PointOffCurve,

    #[error("prime {0} is a prime of bad reduction here")]
    BadPrime(crate::Int),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("branch value {0} is a rational square, contradicting a fixed-point-free involution")]
    SquareFixedPoint(crate::Rat),

    #[error("hypothesis check failed: {0}")]
    HypothesisFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("certificate schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },

    #[error("parse error: {0}")]
    Parse(String),
}
