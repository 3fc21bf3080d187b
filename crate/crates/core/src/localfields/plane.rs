//! Smooth plane quartic curves F(X, Y, Z) = 0 and their local solvability.
//!
//! Finite places go through a breadth-first refinement of the primitive
//! solution classes in P^2(Z/p^k): a class with a partial derivative of
//! small enough valuation lifts to Q_p by one-variable Hensel; an empty
//! frontier proves emptiness.  The depth cap is tied to a discriminant-like
//! resultant datum (a Macaulay determinant of the three partials), whose
//! prime divisors are also exactly the candidate primes of bad reduction.

use super::{LocalSolvabilityReport, Method, Place, Witness};
use crate::ntheory;
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::VecDeque;

/// Exponent triples (i, j, k), i + j + k = 4, in the fixed storage order.
pub const QUARTIC_MONOMIALS: [(u8, u8, u8); 15] = [
    (4, 0, 0),
    (3, 1, 0),
    (3, 0, 1),
    (2, 2, 0),
    (2, 1, 1),
    (2, 0, 2),
    (1, 3, 0),
    (1, 2, 1),
    (1, 1, 2),
    (1, 0, 3),
    (0, 4, 0),
    (0, 3, 1),
    (0, 2, 2),
    (0, 1, 3),
    (0, 0, 4),
];

/// Homogeneous degree-4 form with integer coefficients (inputs with
/// denominators are cleared; scaling the equation changes nothing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneQuartic {
    coeffs: [Int; 15],
}

impl PlaneQuartic {
    pub fn new(rational_coeffs: &[Rat; 15]) -> Result<Self> {
        if rational_coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput("zero quartic form".into()));
        }
        let mut lambda = Int::one();
        for c in rational_coeffs.iter() {
            lambda = lambda.lcm(c.denom());
        }
        let mut coeffs: [Int; 15] = std::array::from_fn(|_| Int::zero());
        for (i, c) in rational_coeffs.iter().enumerate() {
            let v = c * Rat::from(lambda.clone());
            coeffs[i] = v.numer().clone();
        }
        let mut g = Int::zero();
        for c in &coeffs {
            g = g.gcd(c);
        }
        for c in coeffs.iter_mut() {
            *c /= &g;
        }
        Ok(PlaneQuartic { coeffs })
    }

    /// a X^4 + b Y^4 + c Z^4
    pub fn diagonal(a: i64, b: i64, c: i64) -> Result<Self> {
        let mut coeffs: [Rat; 15] = std::array::from_fn(|_| Rat::zero());
        coeffs[0] = Rat::from(Int::from(a));
        coeffs[10] = Rat::from(Int::from(b));
        coeffs[14] = Rat::from(Int::from(c));
        PlaneQuartic::new(&coeffs)
    }

    pub fn coeffs(&self) -> &[Int; 15] {
        &self.coeffs
    }

    pub fn diagonal_parts(&self) -> Option<(Int, Int, Int)> {
        for (idx, (i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            let pure = *i == 4 || *j == 4 || *k == 4;
            if !pure && !self.coeffs[idx].is_zero() {
                return None;
            }
        }
        Some((
            self.coeffs[0].clone(),
            self.coeffs[10].clone(),
            self.coeffs[14].clone(),
        ))
    }

    pub fn eval(&self, x: &Int, y: &Int, z: &Int) -> Int {
        let mut acc = Int::zero();
        for (idx, (i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            if self.coeffs[idx].is_zero() {
                continue;
            }
            acc += &self.coeffs[idx] * x.pow(*i as u32) * y.pow(*j as u32) * z.pow(*k as u32);
        }
        acc
    }

    fn eval_f64(&self, x: f64, y: f64, z: f64) -> f64 {
        let mut acc = 0.0;
        for (idx, (i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            if self.coeffs[idx].is_zero() {
                continue;
            }
            acc += self.coeffs[idx].to_f64().unwrap_or(f64::NAN)
                * x.powi(*i as i32)
                * y.powi(*j as i32)
                * z.powi(*k as i32);
        }
        acc
    }

    /// Gradient as three cubic forms, each a vector over the 10 degree-3
    /// monomials in the analogous fixed order.
    fn partials(&self) -> [Vec<Int>; 3] {
        let cubic_monomials = monomials_of_degree(3);
        let mut out = [
            vec![Int::zero(); cubic_monomials.len()],
            vec![Int::zero(); cubic_monomials.len()],
            vec![Int::zero(); cubic_monomials.len()],
        ];
        for (idx, &(i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            let c = &self.coeffs[idx];
            if c.is_zero() {
                continue;
            }
            let drops = [
                (i, (i.wrapping_sub(1), j, k)),
                (j, (i, j.wrapping_sub(1), k)),
                (k, (i, j, k.wrapping_sub(1))),
            ];
            for (var, (e, (a, b, cc))) in drops.into_iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pos = cubic_monomials
                    .iter()
                    .position(|m| *m == (a, b, cc))
                    .unwrap();
                out[var][pos] += c * Int::from(e);
            }
        }
        out
    }

    /// A discriminant-like datum: the Macaulay determinant of the three
    /// partial-derivative cubics (after a shear when it degenerates).
    /// Nonzero; any prime p not dividing it gives smooth reduction mod p.
    pub fn discriminant_datum(&self) -> Result<Int> {
        for t in 0..8i64 {
            let sheared = if t == 0 { self.clone() } else { self.shear(t) };
            let det = sheared.macaulay_det();
            if !det.is_zero() {
                return Ok(det);
            }
        }
        Err(Error::InvalidInput(
            "could not certify smoothness: Macaulay determinant vanished under all shears".into(),
        ))
    }

    /// X -> X + tZ (a unimodular change of coordinates over Z).
    fn shear(&self, t: i64) -> PlaneQuartic {
        let t = Int::from(t);
        let mut coeffs: [Int; 15] = std::array::from_fn(|_| Int::zero());
        for (idx, &(i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            let c = &self.coeffs[idx];
            if c.is_zero() {
                continue;
            }
            // (X + tZ)^i Y^j Z^k
            for r in 0..=i {
                let binom = binomial(i as u64, r as u64);
                let term = c * Int::from(binom) * t.pow((i - r) as u32);
                let target = (r, j, k + (i - r));
                let pos = QUARTIC_MONOMIALS
                    .iter()
                    .position(|m| *m == target)
                    .unwrap();
                coeffs[pos] += term;
            }
        }
        PlaneQuartic { coeffs }
    }

    fn macaulay_det(&self) -> Int {
        let parts = self.partials();
        let deg7 = monomials_of_degree(7);
        let deg4 = monomials_of_degree(4);
        let deg3 = monomials_of_degree(3);
        let n = deg7.len();
        let mut matrix = vec![vec![Int::zero(); n]; n];
        for (row, &(i, j, k)) in deg7.iter().enumerate() {
            // every degree-7 monomial is divisible by X^3, Y^3, or Z^3
            let (form, mult) = if i >= 3 {
                (0usize, (i - 3, j, k))
            } else if j >= 3 {
                (1, (i, j - 3, k))
            } else {
                (2, (i, j, k - 3))
            };
            debug_assert!(deg4.contains(&mult));
            for (ci, &(a, b, c)) in deg3.iter().enumerate() {
                let coeff = &parts[form][ci];
                if coeff.is_zero() {
                    continue;
                }
                let target = (mult.0 + a, mult.1 + b, mult.2 + c);
                let col = deg7.iter().position(|m| *m == target).unwrap();
                matrix[row][col] += coeff;
            }
        }
        bareiss_det(matrix)
    }
}

impl std::fmt::Display for PlaneQuartic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (idx, (i, j, k)) in QUARTIC_MONOMIALS.iter().enumerate() {
            let c = &self.coeffs[idx];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            for (var, e) in [("X", i), ("Y", j), ("Z", k)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
            first = false;
        }
        Ok(())
    }
}

fn monomials_of_degree(d: u8) -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=(d - i)).rev() {
            out.push((i, j, d - i - j));
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Fraction-free Bareiss determinant over Z.
fn bareiss_det(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = t;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Decide solvability of F = 0 in P^2 over the completion at the place.
pub fn local_solvable_plane(q: &PlaneQuartic, place: &Place) -> Result<LocalSolvabilityReport> {
    match place {
        Place::Real => solve_real(q),
        Place::Finite(p) => solve_padic(q, p),
    }
}

fn solve_real(q: &PlaneQuartic) -> Result<LocalSolvabilityReport> {
    // diagonal forms are decided by signs alone
    if let Some((a, b, c)) = q.diagonal_parts() {
        let signs: Vec<i32> = [&a, &b, &c]
            .iter()
            .map(|v| if v.is_positive() { 1 } else { -1 })
            .collect();
        if signs.iter().all(|&s| s == signs[0]) {
            return Ok(LocalSolvabilityReport {
                place: Place::Real,
                solvable: false,
                method: Method::RealInterval,
                witness: None,
                depth_used: 0,
            });
        }
        // pick a mixed pair, e.g. a*t^4 = -c with the third coordinate 0
        let (w, pair) = if (a.is_positive()) != (c.is_positive()) {
            let t = (-c.to_f64().unwrap() / a.to_f64().unwrap()).powf(0.25);
            (Witness::PlaneReal { x: t, y: 0.0, z: 1.0 }, "xz")
        } else if (a.is_positive()) != (b.is_positive()) {
            let t = (-b.to_f64().unwrap() / a.to_f64().unwrap()).powf(0.25);
            (Witness::PlaneReal { x: t, y: 1.0, z: 0.0 }, "xy")
        } else {
            let t = (-c.to_f64().unwrap() / b.to_f64().unwrap()).powf(0.25);
            (Witness::PlaneReal { x: 0.0, y: t, z: 1.0 }, "yz")
        };
        let _ = pair;
        return Ok(LocalSolvabilityReport {
            place: Place::Real,
            solvable: true,
            method: Method::RealInterval,
            witness: Some(w),
            depth_used: 0,
        });
    }
    // general form: look for a sign change on an integer grid, then bisect
    let grid = 8i64;
    let mut pos: Option<(i64, i64, i64)> = None;
    let mut neg: Option<(i64, i64, i64)> = None;
    for x in -grid..=grid {
        for y in -grid..=grid {
            for z in -grid..=grid {
                if x == 0 && y == 0 && z == 0 {
                    continue;
                }
                let v = q.eval(&Int::from(x), &Int::from(y), &Int::from(z));
                if v.is_zero() {
                    return Ok(LocalSolvabilityReport {
                        place: Place::Real,
                        solvable: true,
                        method: Method::RealInterval,
                        witness: Some(Witness::PlaneReal {
                            x: x as f64,
                            y: y as f64,
                            z: z as f64,
                        }),
                        depth_used: 0,
                    });
                }
                if v.is_positive() {
                    pos = Some((x, y, z));
                } else {
                    neg = Some((x, y, z));
                }
                if let (Some(p0), Some(n0)) = (pos, neg) {
                    // bisect the segment between the two samples
                    let (mut lo, mut hi) = (
                        (p0.0 as f64, p0.1 as f64, p0.2 as f64),
                        (n0.0 as f64, n0.1 as f64, n0.2 as f64),
                    );
                    for _ in 0..64 {
                        let mid = (
                            (lo.0 + hi.0) / 2.0,
                            (lo.1 + hi.1) / 2.0,
                            (lo.2 + hi.2) / 2.0,
                        );
                        if q.eval_f64(mid.0, mid.1, mid.2) > 0.0 {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    return Ok(LocalSolvabilityReport {
                        place: Place::Real,
                        solvable: true,
                        method: Method::RealInterval,
                        witness: Some(Witness::PlaneReal {
                            x: lo.0,
                            y: lo.1,
                            z: lo.2,
                        }),
                        depth_used: 0,
                    });
                }
            }
        }
    }
    // no sign change found and no diagonal certificate of definiteness
    Err(Error::Indeterminate {
        place: Place::Real,
        depth: grid as u32,
    })
}

fn solve_padic(q: &PlaneQuartic, p: &Int) -> Result<LocalSolvabilityReport> {
    let place = Place::Finite(p.clone());
    let datum = q.discriminant_datum()?;
    let vp = if (&datum % p).is_zero() {
        ntheory::valuation_int(&datum, p)
    } else {
        0
    };
    let two_extra = if p == &Int::from(2) { 4 } else { 0 };
    let k_cap = 2 * vp + two_extra + 10;

    let parts = q.partials();
    let eval_partial = |idx: usize, x: &Int, y: &Int, z: &Int| -> Int {
        let deg3 = monomials_of_degree(3);
        let mut acc = Int::zero();
        for (ci, &(a, b, c)) in deg3.iter().enumerate() {
            if parts[idx][ci].is_zero() {
                continue;
            }
            acc += &parts[idx][ci] * x.pow(a as u32) * y.pow(b as u32) * z.pow(c as u32);
        }
        acc
    };

    // level-1 representatives of P^2(F_p)
    let mut queue: VecDeque<([Int; 3], u32)> = VecDeque::new();
    let mut seed = |x: Int, y: Int, z: Int| {
        if q.eval(&x, &y, &z).mod_floor(p).is_zero() {
            queue.push_back(([x, y, z], 1));
        }
    };
    let pu = p.to_u64().expect("prime fits u64 for enumeration");
    for y in 0..pu {
        for z in 0..pu {
            seed(Int::one(), Int::from(y), Int::from(z));
        }
    }
    for z in 0..pu {
        seed(Int::zero(), Int::one(), Int::from(z));
    }
    seed(Int::zero(), Int::zero(), Int::one());

    let mut depth_used = 1u32;
    while let Some(([x, y, z], k)) = queue.pop_front() {
        depth_used = depth_used.max(k);
        // Hensel margin: some partial with 2 v_p < k lifts the point
        let mut min_val: Option<u32> = None;
        for idx in 0..3 {
            let d = eval_partial(idx, &x, &y, &z);
            if !d.is_zero() {
                let v = ntheory::valuation_int(&d, p);
                min_val = Some(min_val.map_or(v, |m: u32| m.min(v)));
            }
        }
        if let Some(m) = min_val {
            if k >= 2 * m + 1 {
                return Ok(LocalSolvabilityReport {
                    place,
                    solvable: true,
                    method: if k == 1 {
                        Method::HenselLift
                    } else {
                        Method::CountAndLift
                    },
                    witness: Some(Witness::PlanePadic { x, y, z, k }),
                    depth_used: k,
                });
            }
        }
        if k >= k_cap {
            return Err(Error::Indeterminate { place, depth: k });
        }
        // refine the two non-pivot coordinates mod p^(k+1); the pivot is the
        // first coordinate normalized to exactly 1, which children preserve
        let step = p.pow(k);
        let modulus = p.pow(k + 1);
        let pivot = if x.is_one() {
            0
        } else if y.is_one() {
            1
        } else {
            2
        };
        for i in 0..pu {
            for j in 0..pu {
                let (di, dj) = (Int::from(i) * &step, Int::from(j) * &step);
                let (nx, ny, nz) = match pivot {
                    0 => (x.clone(), &y + &di, &z + &dj),
                    1 => (&x + &di, y.clone(), &z + &dj),
                    _ => (&x + &di, &y + &dj, z.clone()),
                };
                if q.eval(&nx, &ny, &nz).mod_floor(&modulus).is_zero() {
                    queue.push_back(([nx, ny, nz], k + 1));
                }
            }
        }
    }
    Ok(LocalSolvabilityReport {
        place,
        solvable: false,
        method: Method::CountAndLift,
        witness: None,
        depth_used,
    })
}

/// Re-check a plane report's witness.
pub fn verify_plane_witness(q: &PlaneQuartic, report: &LocalSolvabilityReport) -> bool {
    let w = match (&report.witness, report.solvable) {
        (None, false) => return true,
        (None, true) => return report.method == Method::WeilBound,
        (Some(w), _) => w,
    };
    match (w, &report.place) {
        (Witness::PlanePadic { x, y, z, k }, Place::Finite(p)) => {
            let primitive = !((x.mod_floor(p)).is_zero()
                && (y.mod_floor(p)).is_zero()
                && (z.mod_floor(p)).is_zero());
            primitive && q.eval(x, y, z).mod_floor(&p.pow(*k)).is_zero()
        }
        (Witness::PlaneReal { x, y, z }, Place::Real) => {
            let norm = x.abs().max(y.abs()).max(z.abs()).max(1.0);
            let scale: f64 = q
                .coeffs
                .iter()
                .map(|c| c.to_f64().unwrap_or(f64::NAN).abs())
                .sum();
            q.eval_f64(*x, *y, *z).abs() <= 1e-6 * scale * norm.powi(4)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blm() -> PlaneQuartic {
        PlaneQuartic::diagonal(3, 4, -19).unwrap()
    }

    #[test]
    fn real_diagonal_rules() {
        let definite = PlaneQuartic::diagonal(1, 1, 1).unwrap();
        let r = local_solvable_plane(&definite, &Place::Real).unwrap();
        assert!(!r.solvable);
        let neg = PlaneQuartic::diagonal(-1, -1, -1).unwrap();
        assert!(!local_solvable_plane(&neg, &Place::Real).unwrap().solvable);
        let r = local_solvable_plane(&blm(), &Place::Real).unwrap();
        assert!(r.solvable);
        assert!(verify_plane_witness(&blm(), &r));
    }

    #[test]
    fn blm_at_five_lifts_from_witness() {
        let r = local_solvable_plane(&blm(), &Place::finite(5)).unwrap();
        assert!(r.solvable);
        // the mod-5 point (0:1:1) is smooth: dF/dY = 16 != 0 mod 5
        match &r.witness {
            Some(Witness::PlanePadic { k, .. }) => assert_eq!(*k, 1),
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(verify_plane_witness(&blm(), &r));
    }

    #[test]
    fn discriminant_datum_covers_bad_primes() {
        let d = blm().discriminant_datum().unwrap();
        for p in [2i64, 3, 19] {
            assert!(
                (&d % Int::from(p)).is_zero(),
                "datum misses bad prime {p}"
            );
        }
    }

    #[test]
    fn brute_force_oracle_agreement_small_primes() {
        // oracle: search P^2(Z/p^3) exhaustively for a solution with a
        // unit partial derivative; emptiness mod p^3 proves emptiness
        let q = blm();
        for p in [3i64, 7, 11, 13] {
            let got = local_solvable_plane(&q, &Place::finite(p)).unwrap();
            let oracle = plane_oracle(&q, p);
            if let Some(expected) = oracle {
                assert_eq!(got.solvable, expected, "p={p}");
            }
        }
    }

    fn plane_oracle(q: &PlaneQuartic, p: i64) -> Option<bool> {
        let pk = p.pow(3);
        let pi = Int::from(p);
        let mut any = false;
        for x in 0..pk {
            for y in 0..pk {
                for z in 0..pk {
                    if x % p == 0 && y % p == 0 && z % p == 0 {
                        continue;
                    }
                    let (xi, yi, zi) = (Int::from(x), Int::from(y), Int::from(z));
                    if !q.eval(&xi, &yi, &zi).mod_floor(&Int::from(pk)).is_zero() {
                        continue;
                    }
                    any = true;
                    let parts = q.partials();
                    let deg3 = monomials_of_degree(3);
                    for idx in 0..3 {
                        let mut d = Int::zero();
                        for (ci, &(a, b, c)) in deg3.iter().enumerate() {
                            d += &parts[idx][ci]
                                * xi.pow(a as u32)
                                * yi.pow(b as u32)
                                * zi.pow(c as u32);
                        }
                        if !d.mod_floor(&pi).is_zero() {
                            return Some(true); // smooth point mod p lifts
                        }
                    }
                }
            }
        }
        if !any {
            Some(false)
        } else {
            None // solutions exist but none obviously smooth; inconclusive
        }
    }
}
