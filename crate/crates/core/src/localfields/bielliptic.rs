//! Local solvability of the bielliptic double-cover system
//! { y^2 = P3(x), d w^2 = a f(x) } over R and Q_p, x ranging over P^1.
//!
//! The places over x = infinity are handled symbolically: the fiber over
//! the origin of E splits at v iff the leading square class a*d is a square
//! in the completion.  Affine x and the z = 1/x annulus near infinity go
//! through the residue-disk engine with integer-scaled chart polynomials
//! (scaling by squares leaves every square class intact).

use super::disks::{PairProblem, RegionVerdict};
use super::{
    is_square_local, Chart, LocalSolvabilityReport, Method, Place, Witness,
};
use crate::ntheory::qpoly::{eval_int, real_roots, QPoly, RealRoot};
use crate::ntheory::{self};
use crate::twist::BiellipticModel;
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer-scaled chart polynomials of a twisted model.
pub(crate) struct ChartPolys {
    /// lambda_A^2 (x^3 + a x + b)
    pub affine_a: Vec<Int>,
    /// lambda_B^2 * scale * prod (x - x_i)
    pub affine_b: Vec<Int>,
    /// mu_A^2 (z + a z^3 + b z^4)
    pub inf_a: Vec<Int>,
    /// mu_B^2 * scale * z^eps * prod (1 - x_i z), eps = (g-1) mod 2
    pub inf_b: Vec<Int>,
    pub d: Int,
}

pub(crate) fn chart_polys(model: &BiellipticModel) -> ChartPolys {
    let a = model.curve().a().clone();
    let b = model.curve().b().clone();
    let cubic = QPoly::new(vec![b.clone(), a.clone(), Rat::zero(), Rat::one()]);
    let f = QPoly::from_roots(model.branch_x()).scale(model.scale());
    let inf_cubic = QPoly::new(vec![Rat::zero(), Rat::one(), Rat::zero(), a, b]);
    let eps = (model.genus() as usize - 1) % 2;
    let mut inf_f = QPoly::constant(model.scale().clone());
    for xi in model.branch_x() {
        inf_f = inf_f.mul(&QPoly::new(vec![Rat::one(), -xi.clone()]));
    }
    if eps == 1 {
        inf_f = inf_f.mul(&QPoly::new(vec![Rat::zero(), Rat::one()]));
    }
    ChartPolys {
        affine_a: cubic.to_int_square_scaled().0,
        affine_b: f.to_int_square_scaled().0,
        inf_a: inf_cubic.to_int_square_scaled().0,
        inf_b: inf_f.to_int_square_scaled().0,
        d: model.twist().representative().clone(),
    }
}

fn clamp_val(r: &Rat, p: &Int) -> u32 {
    if r.is_zero() {
        return 0;
    }
    ntheory::valuation_rat(r, p).max(0) as u32
}

/// Cap on the plain recursion depth, from the model's discriminant data at
/// p; past it the engine switches to root-resolution on undecided disks.
/// The exact value only affects speed, not correctness.
pub(crate) fn depth_max(model: &BiellipticModel, p: &Int) -> u32 {
    let two_val: u32 = if p == &Int::from(2) { 2 } else { 0 };
    let cubic = QPoly::new(vec![
        model.curve().b().clone(),
        model.curve().a().clone(),
        Rat::zero(),
        Rat::one(),
    ]);
    let f = QPoly::from_roots(model.branch_x());
    let disc = cubic.discriminant();
    let res = cubic.resultant(&f);
    let mut branch_diffs = Rat::one();
    let xs = model.branch_x();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            branch_diffs *= &xs[i] - &xs[j];
        }
    }
    let d_rat = Rat::from(model.twist().representative().clone());
    let mut depth = two_val
        + clamp_val(&disc, p)
        + clamp_val(&res, p)
        + clamp_val(&branch_diffs, p)
        + clamp_val(&d_rat, p)
        + clamp_val(model.scale(), p)
        + 3;
    // denominators in the model data shift the integer-scaled values by an
    // even amount; deepen the cap to match
    for poly in [&cubic, &f] {
        let (_, lambda) = poly.to_int_square_scaled();
        if !lambda.is_one() && (&lambda % p).is_zero() {
            depth += 2 * ntheory::valuation_int(&lambda, p);
        }
    }
    depth
}

fn margin(p: &Int) -> u32 {
    if p == &Int::from(2) {
        3
    } else {
        1
    }
}

/// Depth from which the square classes of both unit factors near z = 0 are
/// frozen, so v_p(z) >= n0 is decided by the leading class a*d alone.
fn infinity_stability_depth(model: &BiellipticModel, p: &Int) -> u32 {
    let m = margin(p) as i64;
    let mut n0 = 1i64;
    let need = |v: i64, mult: i64| -> i64 { (m - v + mult - 1).div_euclid(mult) };
    let a = model.curve().a();
    let b = model.curve().b();
    if !a.is_zero() {
        n0 = n0.max(need(ntheory::valuation_rat(a, p), 2));
    }
    if !b.is_zero() {
        n0 = n0.max(need(ntheory::valuation_rat(b, p), 3));
    }
    for xi in model.branch_x() {
        if !xi.is_zero() {
            n0 = n0.max(need(ntheory::valuation_rat(xi, p), 1));
        }
    }
    n0.max(1) as u32
}

/// Decide solvability of the twisted model at one place.
pub fn local_solvable_bielliptic(
    model: &BiellipticModel,
    place: &Place,
) -> Result<LocalSolvabilityReport> {
    match place {
        Place::Real => Ok(solve_real(model)),
        Place::Finite(p) => solve_padic(model, p),
    }
}

fn solve_padic(model: &BiellipticModel, p: &Int) -> Result<LocalSolvabilityReport> {
    let polys = chart_polys(model);
    let place = Place::Finite(p.clone());
    let leading = model.scale() * Rat::from(polys.d.clone());
    let n0 = infinity_stability_depth(model, p);

    // the fiber over the origin of E (x = infinity) splits at p iff the
    // leading class a*d is a square; that also settles the whole region
    // v_p(z) >= n0
    if is_square_local(&leading, &place) {
        let z0 = p.pow(2 * n0.div_ceil(2));
        let witness = infinity_witness(&polys, p, &z0)?;
        return Ok(LocalSolvabilityReport {
            place,
            solvable: true,
            method: Method::HenselLift,
            witness: Some(witness),
            depth_used: 0,
        });
    }

    let dm = depth_max(model, p);
    let cap = dm + 2 * margin(p) + 10;
    let mut max_depth = 0u32;

    let affine = PairProblem {
        p,
        a: &polys.affine_a,
        b: &polys.affine_b,
        d: &polys.d,
        depth_max: dm,
        hard_cap: cap,
    }
    .decide(vec![(Int::zero(), 0)]);
    match affine {
        RegionVerdict::Solvable { x, y, w, k, depth, .. } => {
            return Ok(LocalSolvabilityReport {
                place,
                solvable: true,
                method: Method::HenselLift,
                witness: Some(Witness::BiellipticPadic {
                    chart: Chart::Affine,
                    x,
                    y,
                    w,
                    k,
                }),
                depth_used: depth,
            });
        }
        RegionVerdict::Empty { depth, .. } => max_depth = max_depth.max(depth),
        RegionVerdict::Indeterminate { depth } => {
            return Err(Error::Indeterminate { place, depth });
        }
    }

    // annulus 1 <= v_p(z) < n0 (empty when the data is p-integral and n0=1)
    if n0 > 1 {
        let mut start = Vec::new();
        let span = p.pow(n0 - 1);
        let mut j = Int::one();
        while j < span {
            start.push((p * &j, n0));
            j += 1;
        }
        let inf = PairProblem {
            p,
            a: &polys.inf_a,
            b: &polys.inf_b,
            d: &polys.d,
            depth_max: dm + n0,
            hard_cap: cap + n0,
        }
        .decide(start);
        match inf {
            RegionVerdict::Solvable { x, y, w, k, depth, .. } => {
                return Ok(LocalSolvabilityReport {
                    place,
                    solvable: true,
                    method: Method::HenselLift,
                    witness: Some(Witness::BiellipticPadic {
                        chart: Chart::InfiniteZ,
                        x,
                        y,
                        w,
                        k,
                    }),
                    depth_used: depth,
                });
            }
            RegionVerdict::Empty { depth, .. } => max_depth = max_depth.max(depth),
            RegionVerdict::Indeterminate { depth } => {
                return Err(Error::Indeterminate { place, depth });
            }
        }
    }

    Ok(LocalSolvabilityReport {
        place,
        solvable: false,
        method: Method::DiskExhaustion,
        witness: None,
        depth_used: max_depth,
    })
}

/// Witness near x = infinity at the exact coordinate z0 = p^(2m): both
/// chart values are nonzero with square class, by choice of z0.
fn infinity_witness(polys: &ChartPolys, p: &Int, z0: &Int) -> Result<Witness> {
    let prob = PairProblem {
        p,
        a: &polys.inf_a,
        b: &polys.inf_b,
        d: &polys.d,
        depth_max: 4,
        hard_cap: 8,
    };
    // probing the single exact point z0 must succeed
    let k0 = 2 * ntheory::valuation_int(z0, p);
    match prob.decide(vec![(z0.clone(), k0 + 8)]) {
        RegionVerdict::Solvable { x, y, w, k, .. } => Ok(Witness::BiellipticPadic {
            chart: Chart::InfiniteZ,
            x,
            y,
            w,
            k,
        }),
        other => Err(Error::InvalidModel(format!(
            "split fiber over the origin yielded no witness at z = {z0} (p = {p}): {other:?}"
        ))),
    }
}

/// Real place: w^2 = a f(x) / d needs sign(a d) f(x) >= 0 alongside
/// P3(x) >= 0.  With a d > 0 the tail x -> +inf always works; otherwise a
/// solution exists iff some branch point has P3 > 0 or some real root of
/// P3 has f < 0 (interval endpoints are roots of one of the two).
fn solve_real(model: &BiellipticModel) -> LocalSolvabilityReport {
    let ad = model.scale() * Rat::from(model.twist().representative().clone());
    let cubic = QPoly::new(vec![
        model.curve().b().clone(),
        model.curve().a().clone(),
        Rat::zero(),
        Rat::one(),
    ]);
    let f = QPoly::from_roots(model.branch_x()).scale(model.scale());
    let d_rat = Rat::from(model.twist().representative().clone());

    let witness_at = |x: &Rat| -> Witness {
        let xf = rat_to_f64(x);
        let py = rat_to_f64(&cubic.eval(x)).max(0.0);
        let pw = rat_to_f64(&(f.eval(x) / &d_rat)).max(0.0);
        Witness::BiellipticReal {
            x: xf,
            y: py.sqrt(),
            w: pw.sqrt(),
        }
    };

    if ad.is_positive() {
        // sample far to the right of every root and branch point
        let mut x0 = Rat::from(Int::from(1));
        for xi in model.branch_x() {
            if *xi >= x0 {
                x0 = xi + Rat::one();
            }
        }
        loop {
            if cubic.eval(&x0).is_positive() && f.eval(&x0).is_positive() {
                break;
            }
            x0 = x0 * Rat::from(Int::from(2)) + Rat::one();
        }
        return LocalSolvabilityReport {
            place: Place::Real,
            solvable: true,
            method: Method::RealInterval,
            witness: Some(witness_at(&x0)),
            depth_used: 0,
        };
    }

    // a d < 0: need f(x) <= 0 and P3(x) >= 0
    for xi in model.branch_x() {
        if cubic.eval(xi).is_positive() {
            return LocalSolvabilityReport {
                place: Place::Real,
                solvable: true,
                method: Method::RealInterval,
                witness: Some(Witness::BiellipticReal {
                    x: rat_to_f64(xi),
                    y: rat_to_f64(&cubic.eval(xi)).sqrt(),
                    w: 0.0,
                }),
                depth_used: 0,
            };
        }
    }
    for root in real_roots(&cubic, model.branch_x()) {
        let solvable = match &root {
            RealRoot::Exact(r) => f.eval(r).is_negative(),
            RealRoot::Isolated(lo, hi) => {
                // no branch point inside, so f keeps one sign there
                let mid = (lo + hi) / Rat::from(Int::from(2));
                f.eval(&mid).is_negative()
            }
        };
        if solvable {
            let x = match &root {
                RealRoot::Exact(r) => r.clone(),
                RealRoot::Isolated(lo, hi) => {
                    let (mut lo, mut hi) = (lo.clone(), hi.clone());
                    for _ in 0..80 {
                        let mid = (&lo + &hi) / Rat::from(Int::from(2));
                        if (cubic.eval(&lo).is_positive()) == (cubic.eval(&mid).is_positive()) {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    lo
                }
            };
            return LocalSolvabilityReport {
                place: Place::Real,
                solvable: true,
                method: Method::RealInterval,
                witness: Some(Witness::BiellipticReal {
                    x: rat_to_f64(&x),
                    y: 0.0,
                    w: rat_to_f64(&(f.eval(&x) / &d_rat)).abs().sqrt(),
                }),
                depth_used: 0,
            };
        }
    }
    LocalSolvabilityReport {
        place: Place::Real,
        solvable: false,
        method: Method::RealInterval,
        witness: None,
        depth_used: 0,
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Re-check a report's witness against the model's congruences (or, at the
/// real place, against the defining equations with a small tolerance).
pub fn verify_bielliptic_witness(model: &BiellipticModel, report: &LocalSolvabilityReport) -> bool {
    let w = match (&report.witness, report.solvable) {
        (None, false) => return true,
        (None, true) => return report.method == Method::WeilBound,
        (Some(w), _) => w,
    };
    match (w, &report.place) {
        (Witness::BiellipticPadic { chart, x, y, w, k }, Place::Finite(p)) => {
            let polys = chart_polys(model);
            let (pa, pb) = match chart {
                Chart::Affine => (&polys.affine_a, &polys.affine_b),
                Chart::InfiniteZ => (&polys.inf_a, &polys.inf_b),
            };
            let m = p.pow(*k);
            let ya = (y * y - eval_int(pa, x)).mod_floor(&m).is_zero();
            let wb = (&polys.d * w * w - eval_int(pb, x)).mod_floor(&m).is_zero();
            ya && wb
        }
        (Witness::BiellipticReal { x, y, w }, Place::Real) => {
            let a = rat_to_f64(model.curve().a());
            let b = rat_to_f64(model.curve().b());
            let scale = rat_to_f64(model.scale());
            let d = model.twist().representative().to_f64().unwrap_or(f64::NAN);
            let p3 = x * x * x + a * x + b;
            let mut fx = scale;
            for xi in model.branch_x() {
                fx *= x - rat_to_f64(xi);
            }
            let tol = 1e-6 * (1.0 + p3.abs().max((fx / d).abs()));
            (y * y - p3).abs() <= tol && (w * w - fx / d).abs() <= tol
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::EllipticCurveQ;
    use crate::twist::BiellipticModel;

    fn model(a: i64, b: i64, branch: &[i64], d: i64) -> BiellipticModel {
        let curve = EllipticCurveQ::from_ints(a, b).unwrap();
        let branch: Vec<Rat> = branch.iter().map(|&x| Rat::from(Int::from(x))).collect();
        BiellipticModel::new(curve, branch, Rat::one(), Int::from(d)).unwrap()
    }

    #[test]
    fn untwisted_model_solvable_via_origin_fiber() {
        let m = model(-1, 0, &[2], 1);
        let r = local_solvable_bielliptic(&m, &Place::finite(7)).unwrap();
        assert!(r.solvable);
        assert!(verify_bielliptic_witness(&m, &r));
    }

    #[test]
    fn real_place_spec_example() {
        let m = model(-1, 0, &[2], 1);
        let r = local_solvable_bielliptic(&m, &Place::Real).unwrap();
        assert!(r.solvable);
        assert_eq!(r.method, Method::RealInterval);
        assert!(verify_bielliptic_witness(&m, &r));
    }

    #[test]
    fn twisted_witnesses_recheck() {
        let m = model(-1, 0, &[2], 5);
        for p in [2i64, 3, 5, 7, 11, 13] {
            let r = local_solvable_bielliptic(&m, &Place::finite(p)).unwrap();
            if r.solvable {
                assert!(verify_bielliptic_witness(&m, &r), "witness fails at {p}");
            }
        }
    }
}
