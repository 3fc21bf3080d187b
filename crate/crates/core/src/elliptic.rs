//! Elliptic curves over Q in short Weierstrass form: exact group law,
//! provably complete torsion via the Lutz–Nagell bound, reduction data,
//! and graded Mordell–Weil finiteness evidence.
//!
//! Rank zero is never proved here.  It enters as *evidence*: a shipped
//! registry of curves whose rank is established in the literature, a
//! caller-supplied assertion, or the (inconclusive) outcome of a naive
//! point search.  Certificates downstream are graded accordingly.

use crate::ntheory::{self, factor, is_prime, kronecker};
use crate::{Budget, Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// y^2 = x^3 + a x + b over Q, with nonzero discriminant -16(4a^3 + 27b^2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurveQ {
    a: Rat,
    b: Rat,
}

/// A rational point: the origin at infinity or an affine pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EPoint {
    Infinity,
    Affine(Rat, Rat),
}

impl EPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EPoint::Infinity)
    }

    pub fn affine(x: i64, y: i64) -> Self {
        EPoint::Affine(Rat::from(Int::from(x)), Rat::from(Int::from(y)))
    }
}

impl std::fmt::Display for EPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EPoint::Infinity => write!(f, "O"),
            EPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl EllipticCurveQ {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        let curve = EllipticCurveQ { a, b };
        if curve.disc().is_zero() {
            return Err(Error::InvalidModel(
                "singular Weierstrass equation (discriminant zero)".into(),
            ));
        }
        Ok(curve)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        EllipticCurveQ::new(Rat::from(Int::from(a)), Rat::from(Int::from(b)))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// -16(4a^3 + 27b^2)
    pub fn disc(&self) -> Rat {
        let four_a3 = Rat::from(Int::from(4)) * &self.a * &self.a * &self.a;
        let t27b2 = Rat::from(Int::from(27)) * &self.b * &self.b;
        Rat::from(Int::from(-16)) * (four_a3 + t27b2)
    }

    /// Right-hand side x^3 + a x + b.
    pub fn rhs(&self, x: &Rat) -> Rat {
        x * x * x + &self.a * x + &self.b
    }

    pub fn contains(&self, p: &EPoint) -> bool {
        match p {
            EPoint::Infinity => true,
            EPoint::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    /// The u-scaling (a, b) -> (u^4 a, u^6 b) with the least u clearing all
    /// denominators; points map by (x, y) -> (u^2 x, u^3 y).
    pub fn integral_model(&self) -> (Int, Int, Int) {
        let u = self.a.denom().lcm(self.b.denom());
        let u4 = Rat::from(&u * &u * &u * &u);
        let u6 = Rat::from(&u * &u * &u * &u * &u * &u);
        let big_a = &self.a * &u4;
        let big_b = &self.b * &u6;
        debug_assert!(big_a.denom().is_one() && big_b.denom().is_one());
        (big_a.numer().clone(), big_b.numer().clone(), u)
    }

    /// Canonical integral pair: the integral model reduced by every prime q
    /// with q^4 | a and q^6 | b.  Two curves are the same up to u-scaling iff
    /// their canonical pairs agree.
    pub fn canonical_pair(&self) -> (Int, Int) {
        let (mut a, mut b, _) = self.integral_model();
        let base = if a.is_zero() { b.clone() } else { a.clone() };
        if let Ok(f) = factor(&base) {
            for (q, _) in f.factors() {
                let q4 = q.pow(4);
                let q6 = q.pow(6);
                loop {
                    let ok_a = a.is_zero() || (&a % &q4).is_zero();
                    let ok_b = b.is_zero() || (&b % &q6).is_zero();
                    if ok_a && ok_b && !(a.is_zero() && b.is_zero()) {
                        let na = &a / &q4;
                        let nb = &b / &q6;
                        // only reduce while both stay integral
                        if (&na * &q4) == a && (&nb * &q6) == b {
                            a = na;
                            b = nb;
                            continue;
                        }
                    }
                    break;
                }
            }
        }
        (a, b)
    }

    pub fn neg(&self, p: &EPoint) -> EPoint {
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine(x, y) => EPoint::Affine(x.clone(), -y.clone()),
        }
    }

    /// Chord-tangent sum in exact rational arithmetic.
    pub fn add(&self, p: &EPoint, q: &EPoint) -> Result<EPoint> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointOffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &EPoint, q: &EPoint) -> EPoint {
        let (x1, y1) = match p {
            EPoint::Infinity => return q.clone(),
            EPoint::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            EPoint::Infinity => return p.clone(),
            EPoint::Affine(x, y) => (x, y),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return EPoint::Infinity;
            }
            (Rat::from(Int::from(3)) * x1 * x1 + &self.a) / (Rat::from(Int::from(2)) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1;
        EPoint::Affine(x3, y3)
    }

    pub fn mul(&self, n: u64, p: &EPoint) -> EPoint {
        let mut acc = EPoint::Infinity;
        let mut base = p.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Superset of the primes of bad reduction: 2 together with every prime
    /// dividing the integral model's discriminant.
    pub fn bad_primes(&self) -> Result<BTreeSet<Int>> {
        let (a, b, _) = self.integral_model();
        let disc = Int::from(-16) * (Int::from(4) * &a * &a * &a + Int::from(27) * &b * &b);
        let mut out: BTreeSet<Int> = BTreeSet::new();
        out.insert(Int::from(2));
        for (p, _) in factor(&disc)?.factors() {
            out.insert(p.clone());
        }
        Ok(out)
    }

    /// #E(F_p) by brute force (including the point at infinity); p must be
    /// an odd prime of good reduction.
    pub fn count_points_mod_p(&self, p: &Int) -> Result<u64> {
        if !is_prime(p).is_prime() {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if self.bad_primes()?.contains(p) {
            return Err(Error::BadPrime(p.clone()));
        }
        let (a, b, _) = self.integral_model();
        let pa = a.mod_floor(p);
        let pb = b.mod_floor(p);
        let mut count = 1u64; // infinity
        let mut x = Int::zero();
        while &x < p {
            let v = (&x * &x * &x + &pa * &x + &pb).mod_floor(p);
            count += match kronecker(&v, p) {
                1 => 2,
                0 => 1,
                _ => 0,
            };
            x += 1;
        }
        Ok(count)
    }

    /// The complete torsion subgroup, by the Lutz–Nagell bound on the
    /// integral model (y = 0 or y^2 | 4A^3 + 27B^2) with membership decided
    /// by repeated addition inside the finite candidate set.
    pub fn torsion_subgroup(&self) -> Vec<EPoint> {
        let (big_a, big_b, u) = self.integral_model();
        let integral = EllipticCurveQ {
            a: Rat::from(big_a.clone()),
            b: Rat::from(big_b.clone()),
        };
        let delta = (Int::from(4) * &big_a * &big_a * &big_a + Int::from(27) * &big_b * &big_b).abs();

        let mut y_candidates: Vec<Int> = vec![Int::zero()];
        // divisors y with y^2 | delta
        let mut y = Int::one();
        while &(&y * &y) <= &delta {
            if (&delta % (&y * &y)).is_zero() {
                y_candidates.push(y.clone());
            }
            y += 1;
        }

        let mut candidates: BTreeSet<EPoint> = BTreeSet::new();
        candidates.insert(EPoint::Infinity);
        for y in &y_candidates {
            let y2 = y * y;
            // integer roots of x^3 + A x + B - y^2
            for x in integer_cubic_roots(&big_a, &(&big_b - &y2)) {
                let p = EPoint::Affine(Rat::from(x.clone()), Rat::from(y.clone()));
                debug_assert!(integral.contains(&p));
                candidates.insert(p);
                if !y.is_zero() {
                    candidates.insert(EPoint::Affine(Rat::from(x), Rat::from(-y.clone())));
                }
            }
        }

        // A candidate is torsion iff repeated addition reaches O while every
        // intermediate multiple stays inside the candidate set.
        let bound = candidates.len() + 1;
        let mut torsion: Vec<EPoint> = Vec::new();
        for p in &candidates {
            let mut m = p.clone();
            let mut is_torsion = false;
            for _ in 0..bound {
                if m.is_infinity() {
                    is_torsion = true;
                    break;
                }
                if !candidates.contains(&m) {
                    break;
                }
                m = integral.add_unchecked(&m, p);
            }
            if is_torsion {
                torsion.push(p.clone());
            }
        }

        // map back from the integral model: x -> x / u^2, y -> y / u^3
        let u2 = Rat::from(&u * &u);
        let u3 = Rat::from(&u * &u * &u);
        let mut out: Vec<EPoint> = torsion
            .into_iter()
            .map(|p| match p {
                EPoint::Infinity => EPoint::Infinity,
                EPoint::Affine(x, y) => EPoint::Affine(x / &u2, y / &u3),
            })
            .collect();
        out.sort();
        out
    }
}

impl std::fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^2 = x^3 + ({})*x + ({})", self.a, self.b)
    }
}

/// Integer roots of x^3 + a x + c.
fn integer_cubic_roots(a: &Int, c: &Int) -> Vec<Int> {
    let mut roots = Vec::new();
    if c.is_zero() {
        roots.push(Int::zero());
        // remaining: x^2 + a = 0
        if a.is_negative() {
            let r = (-a).sqrt();
            if &(&r * &r) == &(-a) {
                roots.push(r.clone());
                roots.push(-r);
            }
        }
        return roots;
    }
    // any integer root divides the constant term
    let mut d = Int::one();
    let abs_c = c.abs();
    while &(&d * &d) <= &abs_c {
        if (&abs_c % &d).is_zero() {
            for cand in [d.clone(), &abs_c / &d] {
                for r in [cand.clone(), -cand] {
                    if (&r * &r * &r + a * &r + c).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        d += 1;
    }
    roots
}

/// How the claim "E(Q) is finite" is supported.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum RankZeroStatus {
    /// Entry in the shipped registry of literature-established rank-0 curves.
    Registry,
    /// Caller vouches for rank 0; provenance text records why.
    Asserted,
    /// Only a bounded naive point search was performed; never certifiable.
    SearchOnly { height_bound: u64 },
}

/// Graded evidence that E(Q) is finite, with its complete torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MWEvidence {
    pub curve: EllipticCurveQ,
    /// Complete list of torsion points (always includes O); closed under
    /// the group law and negation.
    pub torsion: Vec<EPoint>,
    pub rank_zero_status: RankZeroStatus,
    pub provenance: String,
}

/// Policy for producing Mordell–Weil evidence.
#[derive(Debug, Clone)]
pub enum EvidencePolicy {
    RegistryLookup,
    Assert { provenance: String },
    Search { height_bound: u64 },
}

/// Torsion is always computed; the rank-zero grade follows the policy.
pub fn mw_evidence(
    curve: &EllipticCurveQ,
    policy: &EvidencePolicy,
    registry: &Registry,
    budget: &mut Budget,
) -> Result<MWEvidence> {
    let torsion = curve.torsion_subgroup();
    match policy {
        EvidencePolicy::RegistryLookup => {
            let entry = registry
                .lookup(curve)
                .ok_or_else(|| Error::RegistryMiss {
                    a: curve.a.clone(),
                    b: curve.b.clone(),
                })?;
            Ok(MWEvidence {
                curve: curve.clone(),
                torsion,
                rank_zero_status: RankZeroStatus::Registry,
                provenance: format!("registry:{}", entry.tag),
            })
        }
        EvidencePolicy::Assert { provenance } => Ok(MWEvidence {
            curve: curve.clone(),
            torsion,
            rank_zero_status: RankZeroStatus::Asserted,
            provenance: provenance.clone(),
        }),
        EvidencePolicy::Search { height_bound } => {
            let found = naive_point_search(curve, *height_bound, &torsion, budget)?;
            let provenance = match &found {
                Some(p) => format!(
                    "search(height {height_bound}): candidate non-torsion point {p}"
                ),
                None => format!("search(height {height_bound}): no non-torsion points found"),
            };
            Ok(MWEvidence {
                curve: curve.clone(),
                torsion,
                rank_zero_status: RankZeroStatus::SearchOnly {
                    height_bound: *height_bound,
                },
                provenance,
            })
        }
    }
}

/// Naive search for affine points with x = m/e^2, |m| <= H, e^2 <= H;
/// returns the first point not in the supplied torsion list.
fn naive_point_search(
    curve: &EllipticCurveQ,
    height_bound: u64,
    torsion: &[EPoint],
    budget: &mut Budget,
) -> Result<Option<EPoint>> {
    let (a, b, u) = curve.integral_model();
    let h = height_bound as i64;
    let e_max = (height_bound as f64).sqrt() as i64 + 1;
    let (ai, bi) = (a.to_i128(), b.to_i128());
    for e in 1..=e_max {
        for m in -h..=h {
            budget.spend(1, "naive point search")?;
            if Int::from(m).gcd(&Int::from(e)) != Int::one() {
                continue;
            }
            // y^2 = (m^3 + A m e^4 + B e^6) / e^6
            let num = match (ai, bi) {
                (Some(ai), Some(bi)) => {
                    let m = m as i128;
                    let e = e as i128;
                    let e2 = e * e;
                    let e4 = e2 * e2;
                    let n = m * m * m + ai * m * e4 + bi * e4 * e2;
                    Int::from(n)
                }
                _ => {
                    let m = Int::from(m);
                    let e = Int::from(e);
                    let e4 = e.pow(4);
                    &m * &m * &m + &a * &m * &e4 + &b * &e4 * &e * &e
                }
            };
            if num.is_negative() {
                continue;
            }
            let y = num.sqrt();
            if &(&y * &y) != &num {
                continue;
            }
            // point on the integral model: (m/e^2, y/e^3); map back by u
            let e2 = Rat::from(Int::from(e * e));
            let e3 = Rat::from(Int::from(e * e * e));
            let u2 = Rat::from(&u * &u);
            let u3 = Rat::from(&u * &u * &u);
            let pt = EPoint::Affine(Rat::from(m as i64 as i64) / e2 / u2, Rat::from(y) / e3 / u3);
            debug_assert!(curve.contains(&pt));
            if !torsion.contains(&pt) {
                return Ok(Some(pt));
            }
        }
    }
    Ok(None)
}

/// An entry of the rank-zero registry.
#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub a: Int,
    pub b: Int,
    pub tag: String,
}

/// Line-oriented registry `a,b,source-tag` of curves y^2 = x^3 + ax + b
/// with rank 0 established in the literature.
#[derive(Debug, Clone)]
pub struct Registry {
    entries: Vec<RegistryEntry>,
}

const BUILTIN_REGISTRY: &str = include_str!("../data/rank_zero_registry.txt");

impl Registry {
    pub fn builtin() -> Self {
        Registry::parse(BUILTIN_REGISTRY).expect("builtin registry parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.splitn(3, ',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!(
                    "registry line {}: expected `a,b,source-tag`",
                    lineno + 1
                )));
            }
            let a = parts[0].trim().parse::<Int>().map_err(|e| {
                Error::Parse(format!("registry line {}: {e}", lineno + 1))
            })?;
            let b = parts[1].trim().parse::<Int>().map_err(|e| {
                Error::Parse(format!("registry line {}: {e}", lineno + 1))
            })?;
            entries.push(RegistryEntry {
                a,
                b,
                tag: parts[2].trim().to_string(),
            });
        }
        Ok(Registry { entries })
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading registry {}: {e}", path.display())))?;
        Registry::parse(&text)
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    /// Match up to u-scaling via canonical pairs.
    pub fn lookup(&self, curve: &EllipticCurveQ) -> Option<&RegistryEntry> {
        let key = curve.canonical_pair();
        self.entries.iter().find(|e| {
            EllipticCurveQ::new(Rat::from(e.a.clone()), Rat::from(e.b.clone()))
                .map(|c| c.canonical_pair() == key)
                .unwrap_or(false)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: i64, b: i64) -> EllipticCurveQ {
        EllipticCurveQ::from_ints(a, b).unwrap()
    }

    #[test]
    fn singular_rejected() {
        assert!(EllipticCurveQ::from_ints(0, 0).is_err());
        assert!(EllipticCurveQ::from_ints(-3, 2).is_err()); // disc = 0
    }

    #[test]
    fn group_law_spec_examples() {
        let e = curve(-1, 0);
        let p = EPoint::affine(0, 0);
        assert_eq!(e.add(&p, &EPoint::Infinity).unwrap(), p);
        let q = EPoint::affine(1, 0);
        assert_eq!(e.add(&p, &q).unwrap(), EPoint::affine(-1, 0));
        assert_eq!(e.add(&p, &e.neg(&p)).unwrap(), EPoint::Infinity);
    }

    #[test]
    fn off_curve_rejected() {
        let e = curve(-1, 0);
        assert!(matches!(
            e.add(&EPoint::affine(2, 2), &EPoint::Infinity),
            Err(Error::PointOffCurve)
        ));
    }

    #[test]
    fn torsion_spec_examples() {
        let t = curve(-1, 0).torsion_subgroup();
        assert_eq!(t.len(), 4);
        assert!(t.contains(&EPoint::Infinity));
        assert!(t.contains(&EPoint::affine(0, 0)));
        assert!(t.contains(&EPoint::affine(1, 0)));
        assert!(t.contains(&EPoint::affine(-1, 0)));

        let t = curve(0, 1).torsion_subgroup();
        assert_eq!(t.len(), 6);
        assert!(t.contains(&EPoint::affine(2, 3)));
        assert!(t.contains(&EPoint::affine(2, -3)));
        assert!(t.contains(&EPoint::affine(0, 1)));
        assert!(t.contains(&EPoint::affine(0, -1)));
        assert!(t.contains(&EPoint::affine(-1, 0)));

        let t = curve(0, -2).torsion_subgroup();
        assert_eq!(t, vec![EPoint::Infinity]);
    }

    #[test]
    fn torsion_closed_under_group_law() {
        for (a, b) in [(-1i64, 0i64), (0, 1), (-4, 0), (1, 0), (0, -432)] {
            let e = curve(a, b);
            let t = e.torsion_subgroup();
            for p in &t {
                assert!(t.contains(&e.neg(p)));
                for q in &t {
                    assert!(t.contains(&e.add(p, q).unwrap()), "({a},{b})");
                }
            }
            // external-knowledge sanity alarm, not a correctness gate
            assert!(t.len() <= 16, "torsion unexpectedly large on ({a},{b})");
        }
    }

    #[test]
    fn bad_primes_spec_examples() {
        let bp = |a: i64, b: i64| -> Vec<i64> {
            curve(a, b)
                .bad_primes()
                .unwrap()
                .iter()
                .map(|p| p.to_i64().unwrap())
                .collect()
        };
        assert_eq!(bp(-1, 0), vec![2]); // disc 64
        assert_eq!(bp(0, 1), vec![2, 3]); // disc -432
        assert_eq!(bp(-4, 0), vec![2]); // disc 4096
    }

    #[test]
    fn point_counts_spec_examples() {
        let five = Int::from(5);
        assert_eq!(curve(-1, 0).count_points_mod_p(&five).unwrap(), 8);
        assert_eq!(curve(0, 1).count_points_mod_p(&five).unwrap(), 6);
        assert!(matches!(
            curve(-1, 0).count_points_mod_p(&Int::from(2)),
            Err(Error::BadPrime(_))
        ));
    }

    #[test]
    fn hasse_window() {
        for (a, b) in [(-1i64, 0i64), (0, 1), (-4, 0), (0, -432)] {
            let e = curve(a, b);
            let bad = e.bad_primes().unwrap();
            for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                let p = Int::from(p);
                if bad.contains(&p) {
                    continue;
                }
                let n = e.count_points_mod_p(&p).unwrap() as i64;
                let pf = p.to_i64().unwrap() as f64;
                assert!(
                    ((n as f64) - pf - 1.0).abs() <= 2.0 * pf.sqrt(),
                    "Hasse fails for ({a},{b}) at {p}"
                );
            }
        }
    }

    #[test]
    fn torsion_injects_into_good_reduction() {
        for (a, b) in [(-1i64, 0i64), (0, 1), (0, -432)] {
            let e = curve(a, b);
            let bad = e.bad_primes().unwrap();
            let t_order = e.torsion_subgroup().len() as u64;
            for p in [5i64, 7, 11, 13] {
                let p = Int::from(p);
                if bad.contains(&p) {
                    continue;
                }
                let n = e.count_points_mod_p(&p).unwrap();
                // all our test curves have torsion of order coprime to p
                assert_eq!(
                    n % t_order,
                    0,
                    "torsion order {t_order} does not divide #E(F_{p}) = {n} for ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn registry_and_evidence_policies() {
        let reg = Registry::builtin();
        let e = curve(-1, 0);
        let mut budget = Budget::new(10_000_000);
        let ev = mw_evidence(&e, &EvidencePolicy::RegistryLookup, &reg, &mut budget).unwrap();
        assert_eq!(ev.rank_zero_status, RankZeroStatus::Registry);
        assert_eq!(ev.torsion.len(), 4);

        // y^2 = x^3 - 2 has the non-torsion point (3, 5): search finds it
        let e2 = curve(0, -2);
        assert!(matches!(
            mw_evidence(&e2, &EvidencePolicy::RegistryLookup, &reg, &mut budget),
            Err(Error::RegistryMiss { .. })
        ));
        let ev2 = mw_evidence(
            &e2,
            &EvidencePolicy::Search { height_bound: 100 },
            &reg,
            &mut Budget::new(10_000_000),
        )
        .unwrap();
        assert_eq!(
            ev2.rank_zero_status,
            RankZeroStatus::SearchOnly { height_bound: 100 }
        );
        assert!(ev2.provenance.contains("candidate non-torsion point"));

        let ev3 = mw_evidence(
            &e,
            &EvidencePolicy::Assert {
                provenance: "descent notes, 2024".into(),
            },
            &reg,
            &mut budget,
        )
        .unwrap();
        assert_eq!(ev3.rank_zero_status, RankZeroStatus::Asserted);
        assert_eq!(ev3.provenance, "descent notes, 2024");
    }

    #[test]
    fn canonical_pair_reduces_scaling() {
        // (u^4 a, u^6 b) for u = 2 against (a, b)
        let e1 = curve(-1, 0);
        let e2 = curve(-16, 0);
        assert_eq!(e1.canonical_pair(), e2.canonical_pair());
        let e3 = EllipticCurveQ::new(
            Rat::new(Int::from(-1), Int::from(16)),
            Rat::zero(),
        )
        .unwrap();
        assert_eq!(e1.canonical_pair(), e3.canonical_pair());
    }
}
