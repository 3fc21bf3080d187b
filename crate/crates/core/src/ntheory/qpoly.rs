//! Exact univariate polynomials over Q: arithmetic, resultants,
//! discriminants, and Sturm-sequence real root isolation.
//!
//! Degrees here are tiny (cubics, branch polynomials, quartic
//! dehomogenizations), so plain Euclidean recursion over `BigRational`
//! is both exact and fast enough.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with rational coefficients, ascending order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| Rat::from(Int::from(c))).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::new(vec![c])
    }

    /// x - r
    pub fn linear_root(r: &Rat) -> Self {
        QPoly::new(vec![-r.clone(), Rat::one()])
    }

    /// Monic product prod (x - r_i).
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut acc = QPoly::constant(Rat::one());
        for r in roots {
            acc = acc.mul(&QPoly::linear_root(r));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from(Int::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly::new(out)
    }

    /// Euclidean division: self = q * other + r with deg r < deg other.
    pub fn div_rem(&self, other: &QPoly) -> (QPoly, QPoly) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let d = other.degree().unwrap();
        let lead = other.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if !q.is_zero() {
                quot[i - d] = q.clone();
                for j in 0..=d {
                    let t = &other.coeffs[j] * &q;
                    rem[i - d + j] = &rem[i - d + j] - &t;
                }
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, other: &QPoly) -> QPoly {
        self.div_rem(other).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&(Rat::one() / lead))
        }
    }

    /// No repeated roots, i.e. gcd with the derivative is constant.
    /// (Characteristic zero, so the derivative of a nonconstant is nonzero.)
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Resultant Res(self, other) by the Euclidean recursion.
    pub fn resultant(&self, other: &QPoly) -> Rat {
        if self.is_zero() || other.is_zero() {
            return Rat::zero();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = Rat::one();
        let mut sign = 1i32;
        while b.degree().unwrap() > 0 {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let r = a.rem(&b);
            if (da * db) % 2 == 1 {
                sign = -sign;
            }
            if r.is_zero() {
                return Rat::zero();
            }
            let dr = r.degree().unwrap();
            acc *= pow_rat(&b.leading(), (da - dr) as u32);
            a = b;
            b = r;
        }
        // b is a nonzero constant: Res(a, c) = c^deg(a)
        acc *= pow_rat(&b.leading(), a.degree().unwrap() as u32);
        if sign < 0 {
            -acc
        } else {
            acc
        }
    }

    /// Discriminant (-1)^{n(n-1)/2} Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Rat {
        let n = self.degree().expect("discriminant of zero polynomial");
        if n == 0 {
            return Rat::one();
        }
        let res = self.resultant(&self.derivative());
        let s = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let d = res / self.leading();
        if s < 0 {
            -d
        } else {
            d
        }
    }

    /// Clear denominators by the square of their lcm, preserving square
    /// classes of all values: returns integer coefficients of `lambda^2 * f`.
    pub fn to_int_square_scaled(&self) -> (Vec<Int>, Int) {
        let mut lambda = Int::one();
        for c in &self.coeffs {
            lambda = lambda.lcm(c.denom());
        }
        let l2 = Rat::from(&lambda * &lambda);
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &l2;
                debug_assert!(v.denom().is_one());
                v.numer().clone()
            })
            .collect();
        (ints, lambda)
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Evaluate an integer-coefficient polynomial at an integer (Horner).
pub fn eval_int(coeffs: &[Int], x: &Int) -> Int {
    let mut acc = Int::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// One real root location: exact rational, or an open isolating interval
/// with rational endpoints at which the polynomial is nonzero.
#[derive(Debug, Clone)]
pub enum RealRoot {
    Exact(Rat),
    Isolated(Rat, Rat),
}

fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            return seq;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).neg();
        if r.is_zero() {
            return seq;
        }
        seq.push(r);
    }
}

fn sign_variations(seq: &[QPoly], x: &Rat) -> usize {
    let mut last = 0i32;
    let mut v = 0usize;
    for s in seq {
        let val = s.eval(x);
        let sgn = if val.is_zero() {
            0
        } else if val.is_positive() {
            1
        } else {
            -1
        };
        if sgn != 0 {
            if last != 0 && sgn != last {
                v += 1;
            }
            last = sgn;
        }
    }
    v
}

/// Count distinct real roots in the half-open interval (lo, hi].
fn count_roots(seq: &[QPoly], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(seq, lo) - sign_variations(seq, hi)
}

/// Cauchy bound: all real roots lie in (-B, B).
fn root_bound(f: &QPoly) -> Rat {
    let lead = f.leading().abs();
    let mut m = Rat::zero();
    for c in &f.coeffs[..f.coeffs.len() - 1] {
        let t = c.abs() / &lead;
        if t > m {
            m = t;
        }
    }
    m + Rat::from(Int::from(2))
}

/// Rational roots of f (exact), found from the integer-cleared coefficients.
pub fn rational_roots(f: &QPoly) -> Vec<Rat> {
    let mut roots = Vec::new();
    if f.is_zero() {
        return roots;
    }
    let (ints, _) = f.to_int_square_scaled();
    // strip x^k: zero is a root when the constant term vanishes
    let mut low = 0usize;
    while low < ints.len() && ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
    }
    if low >= ints.len() - 1 {
        return roots;
    }
    let c0 = ints[low].clone();
    let cn = ints.last().unwrap().clone();
    let ps = divisors(&c0);
    let qs = divisors(&cn);
    for p in &ps {
        for q in &qs {
            for cand in [Rat::new(p.clone(), q.clone()), Rat::new(-p.clone(), q.clone())] {
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    let mut ds = Vec::new();
    let mut d = Int::one();
    while &(&d * &d) <= &n {
        if (&n % &d).is_zero() {
            ds.push(d.clone());
            ds.push(&n / &d);
        }
        d += 1;
    }
    ds.sort();
    ds.dedup();
    ds
}

/// Locate all real roots of a nonzero polynomial exactly.
///
/// Rational roots come back as `Exact`; irrational ones as open isolating
/// intervals, refined until no point of `avoid` lies inside.  Points of
/// `avoid` must not themselves be roots.
pub fn real_roots(f: &QPoly, avoid: &[Rat]) -> Vec<RealRoot> {
    assert!(!f.is_zero());
    if f.degree() == Some(0) {
        return vec![];
    }
    // separate the rational roots, then isolate the rest on a squarefree part
    let rational = rational_roots(f);
    let mut g = f.clone();
    let sqfree = {
        let d = g.gcd(&g.derivative());
        if d.degree().map_or(false, |k| k > 0) {
            g = g.div_rem(&d).0;
        }
        for r in &rational {
            g = g.div_rem(&QPoly::linear_root(r)).0;
        }
        g
    };
    let mut out: Vec<RealRoot> = rational.iter().cloned().map(RealRoot::Exact).collect();
    if sqfree.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let seq = sturm_sequence(&sqfree);
    let b = root_bound(&sqfree);
    let mut stack = vec![(-b.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        let mid = (&lo + &hi) / Rat::from(Int::from(2));
        if n == 1 {
            // refine until the interval avoids all listed points
            let (mut lo, mut hi) = (lo, hi);
            loop {
                let blocked = avoid.iter().any(|t| *t > lo && *t <= hi);
                if !blocked {
                    break;
                }
                let mid = (&lo + &hi) / Rat::from(Int::from(2));
                if count_roots(&seq, &lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push(RealRoot::Isolated(lo, hi));
            continue;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| {
        let ka = match a {
            RealRoot::Exact(r) => r.clone(),
            RealRoot::Isolated(lo, _) => lo.clone(),
        };
        let kb = match b {
            RealRoot::Exact(r) => r.clone(),
            RealRoot::Isolated(lo, _) => lo.clone(),
        };
        ka.cmp(&kb)
    });
    out
}
