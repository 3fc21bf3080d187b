//! Bielliptic curves with their twist involution, and exact certification
//! of Hasse-principle violations among their quadratic twists.
//!
//! A model is the double cover C of an elliptic curve E: y^2 = P3(x) cut
//! out by d w^2 = a f(x), where f is the monic polynomial vanishing at the
//! g-1 branch values x_i.  The involution is w -> -w with quotient E, so a
//! rational point of the twist lies over a rational point of E; when E has
//! rank zero and provably complete torsion, global emptiness of the twist
//! reduces to finitely many exact square-class checks, one per point of
//! E(Q).  The local half is delegated to the residue-disk machinery.

use crate::elliptic::{EPoint, EllipticCurveQ, MWEvidence, RankZeroStatus};
use crate::localfields::{
    everywhere_local_bielliptic, EverywhereLocalReport,
};
use crate::ntheory::{kronecker, qpoly::QPoly, squarefree_part, SquareClass};
use crate::{Budget, Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};

pub const CERT_SCHEMA_VERSION: &str = "hp-cert/1";

/// Double cover of an elliptic curve, possibly twisted.
///
/// Structural invariants (enforced here): the branch values are distinct
/// with P3(x_i) != 0, the scale has trivial square class so the untwisted
/// fiber over the origin splits into two rational points, the twist
/// representative is squarefree, and genus = #branch + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiellipticModel {
    curve: EllipticCurveQ,
    branch_x: Vec<Rat>,
    scale: Rat,
    twist: SquareClass,
    genus: u32,
}

impl BiellipticModel {
    pub fn new(curve: EllipticCurveQ, branch_x: Vec<Rat>, scale: Rat, twist: Int) -> Result<Self> {
        if branch_x.is_empty() {
            return Err(Error::InvalidModel("need at least one branch value".into()));
        }
        for (i, xi) in branch_x.iter().enumerate() {
            if branch_x[..i].contains(xi) {
                return Err(Error::InvalidModel(format!(
                    "branch values must be distinct; {xi} repeats"
                )));
            }
            if curve.rhs(xi).is_zero() {
                return Err(Error::InvalidModel(format!(
                    "branch value {xi} lies over 2-torsion (P3(x) = 0)"
                )));
            }
        }
        if scale.is_zero() {
            return Err(Error::InvalidModel("scale must be nonzero".into()));
        }
        if !squarefree_part(&scale)?.is_trivial() {
            return Err(Error::InvalidModel(
                "scale must be a rational square so the untwisted fiber over the origin splits"
                    .into(),
            ));
        }
        let twist = SquareClass::new(twist)?;
        let genus = branch_x.len() as u32 + 1;
        Ok(BiellipticModel {
            curve,
            branch_x,
            scale,
            twist,
            genus,
        })
    }

    pub fn curve(&self) -> &EllipticCurveQ {
        &self.curve
    }

    pub fn branch_x(&self) -> &[Rat] {
        &self.branch_x
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn twist(&self) -> &SquareClass {
        &self.twist
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Same cover with the twist parameter replaced.
    pub fn with_twist(&self, d: &Int) -> Result<BiellipticModel> {
        let mut m = self.clone();
        m.twist = SquareClass::new(d.clone())?;
        Ok(m)
    }

    /// The values P3(x_i) whose square classes control the fixed points.
    pub fn branch_values(&self) -> Vec<Rat> {
        self.branch_x.iter().map(|x| self.curve.rhs(x)).collect()
    }

    /// Monic branch polynomial f = prod (x - x_i).
    pub fn branch_poly(&self) -> QPoly {
        QPoly::from_roots(&self.branch_x)
    }

    /// Integer whose prime divisors are the only candidates for bad
    /// reduction of the twisted cover: 2, the twist, and every prime in the
    /// numerator or denominator of the cubic discriminant, the resultant of
    /// cubic and branch polynomial, the branch differences, and the scale.
    pub fn good_reduction_datum(&self) -> Result<Int> {
        let cubic = QPoly::new(vec![
            self.curve.b().clone(),
            self.curve.a().clone(),
            Rat::zero(),
            Rat::one(),
        ]);
        let f = self.branch_poly();
        let mut acc = Int::from(2) * self.twist.representative().abs();
        let mut fold = |r: Rat| {
            if !r.is_zero() {
                acc *= r.numer().abs() * r.denom().abs();
            }
        };
        fold(cubic.discriminant());
        fold(cubic.resultant(&f));
        let mut diffs = Rat::one();
        for i in 0..self.branch_x.len() {
            for j in (i + 1)..self.branch_x.len() {
                diffs *= &self.branch_x[i] - &self.branch_x[j];
            }
        }
        fold(diffs);
        fold(self.scale.clone());
        Ok(acc)
    }
}

impl std::fmt::Display for BiellipticModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let branch: Vec<String> = self.branch_x.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "{}; d*w^2 = {} * prod(x - {{{}}}), d = {}",
            self.curve,
            self.scale,
            branch.join(", "),
            self.twist
        )
    }
}

/// Double cover of a hyperelliptic base y^2 = P(x) (monic, squarefree, odd
/// degree 2g0+1), branched over d extra fibers; genus 2g0 + d - 1.
/// Certification of such models stops at the heuristic grade: finiteness of
/// the base's rational points over Q has no registry analogue here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticBaseModel {
    base_poly: QPoly,
    branch_x: Vec<Rat>,
    scale: Rat,
    twist: SquareClass,
    genus: u32,
}

impl HyperellipticBaseModel {
    pub fn new(base_poly: QPoly, branch_x: Vec<Rat>, scale: Rat, twist: Int) -> Result<Self> {
        let deg = base_poly
            .degree()
            .ok_or_else(|| Error::InvalidModel("zero base polynomial".into()))?;
        if deg < 5 || deg % 2 == 0 {
            return Err(Error::InvalidModel(format!(
                "base polynomial must have odd degree >= 5, got {deg}"
            )));
        }
        if !base_poly.is_monic() {
            return Err(Error::InvalidModel("base polynomial must be monic".into()));
        }
        if !base_poly.is_squarefree() {
            return Err(Error::InvalidModel(
                "base polynomial must be squarefree".into(),
            ));
        }
        if branch_x.is_empty() {
            return Err(Error::InvalidModel("need at least one branch value".into()));
        }
        for (i, xi) in branch_x.iter().enumerate() {
            if branch_x[..i].contains(xi) || base_poly.eval(xi).is_zero() {
                return Err(Error::InvalidModel(format!("bad branch value {xi}")));
            }
        }
        if scale.is_zero() || !squarefree_part(&scale)?.is_trivial() {
            return Err(Error::InvalidModel("scale must be a nonzero square".into()));
        }
        let twist = SquareClass::new(twist)?;
        // Riemann-Hurwitz: deg = 2g0 + 1, genus = 2g0 + d - 1
        let genus = (deg as u32 - 1) + branch_x.len() as u32 - 1 + 1;
        Ok(HyperellipticBaseModel {
            base_poly,
            branch_x,
            scale,
            twist,
            genus,
        })
    }

    pub fn base_poly(&self) -> &QPoly {
        &self.base_poly
    }

    pub fn branch_x(&self) -> &[Rat] {
        &self.branch_x
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn base_genus(&self) -> u32 {
        (self.base_poly.degree().unwrap() as u32 - 1) / 2
    }
}

/// Status of one hypothesis of the twist criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisStatus {
    Pass,
    Fail,
    Conditional(String),
}

impl HypothesisStatus {
    pub fn passes(&self) -> bool {
        matches!(self, HypothesisStatus::Pass)
    }

    pub fn holds_at_some_grade(&self) -> bool {
        !matches!(self, HypothesisStatus::Fail)
    }
}

/// The four hypotheses: (1) no rational fixed points of the involution,
/// (2) geometric fixed points exist, (3) points everywhere locally on the
/// untwisted curve, (4) the quotient has finitely many rational points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub h1: HypothesisStatus,
    pub h2: HypothesisStatus,
    pub h3: HypothesisStatus,
    pub h4: HypothesisStatus,
    pub explanations: [String; 4],
}

impl HypothesisReport {
    pub fn first_three_pass(&self) -> bool {
        self.h1.passes() && self.h2.passes() && self.h3.passes()
    }
}

/// Integer scan for branch values: x = start, start+1, ... accepting x
/// when P3(x) is nonzero with a fresh nontrivial square class.
#[derive(Debug, Clone)]
pub struct ScanStrategy {
    pub start: Int,
}

impl Default for ScanStrategy {
    fn default() -> Self {
        ScanStrategy {
            start: Int::from(2),
        }
    }
}

/// Build a genus-g double cover of E with pairwise distinct quadratic
/// branch fields, scale 1, untwisted.
pub fn construct_bielliptic(
    curve: &EllipticCurveQ,
    genus: u32,
    strategy: &ScanStrategy,
    budget: &mut Budget,
) -> Result<BiellipticModel> {
    if genus < 2 {
        return Err(Error::InvalidInput("genus must be >= 2".into()));
    }
    let needed = (genus - 1) as usize;
    let mut branch: Vec<Rat> = Vec::with_capacity(needed);
    let mut taken: Vec<SquareClass> = Vec::new();
    let mut x = strategy.start.clone();
    while branch.len() < needed {
        budget.spend(1, "scanning branch values")?;
        let xr = Rat::from(x.clone());
        let value = curve.rhs(&xr);
        if !value.is_zero() {
            let class = squarefree_part(&value)?;
            if !class.is_trivial() && !taken.contains(&class) {
                taken.push(class);
                branch.push(xr);
            }
        }
        x += 1;
    }
    BiellipticModel::new(curve.clone(), branch, Rat::one(), Int::one())
}

/// Branch selection over a hyperelliptic base, as for the bielliptic case.
pub fn construct_hyperelliptic_base(
    base_poly: &QPoly,
    branch_count: u32,
    strategy: &ScanStrategy,
    budget: &mut Budget,
) -> Result<HyperellipticBaseModel> {
    if branch_count < 1 {
        return Err(Error::InvalidInput("need at least one branch value".into()));
    }
    // validation of degree/monic/squarefree happens in the constructor; do
    // the squarefree check up front so the scan cannot loop on a bad input
    if !base_poly.is_squarefree() {
        return Err(Error::InvalidModel(
            "base polynomial must be squarefree".into(),
        ));
    }
    let mut branch: Vec<Rat> = Vec::new();
    let mut taken: Vec<SquareClass> = Vec::new();
    let mut x = strategy.start.clone();
    while branch.len() < branch_count as usize {
        budget.spend(1, "scanning branch values")?;
        let xr = Rat::from(x.clone());
        let value = base_poly.eval(&xr);
        if !value.is_zero() {
            let class = squarefree_part(&value)?;
            if !class.is_trivial() && !taken.contains(&class) {
                taken.push(class);
                branch.push(xr);
            }
        }
        x += 1;
    }
    HyperellipticBaseModel::new(base_poly.clone(), branch, Rat::one(), Int::one())
}

/// Check the four hypotheses against the model and the supplied evidence.
pub fn check_hypotheses(model: &BiellipticModel, mw: &MWEvidence) -> HypothesisReport {
    let values = model.branch_values();
    let mut square_at: Vec<String> = Vec::new();
    for (xi, v) in model.branch_x().iter().zip(&values) {
        if squarefree_part(v).map(|c| c.is_trivial()).unwrap_or(false) {
            square_at.push(format!("P3({xi}) = {v} is a rational square"));
        }
    }
    let (h1, e1) = if square_at.is_empty() {
        (
            HypothesisStatus::Pass,
            "every branch value P3(x_i) is a rational nonsquare, so all fixed points of w -> -w are quadratic".to_string(),
        )
    } else {
        (HypothesisStatus::Fail, square_at.join("; "))
    };
    let fixed = 2 * (model.genus() - 1);
    let (h2, e2) = (
        HypothesisStatus::Pass,
        format!("{fixed} geometric fixed points over the branch fibers"),
    );
    let (h3, e3) = (
        HypothesisStatus::Pass,
        "the untwisted fiber over the origin splits into two rational points (scale is a square)"
            .to_string(),
    );
    let (h4, e4) = match &mw.rank_zero_status {
        RankZeroStatus::Registry => (
            HypothesisStatus::Pass,
            format!("E(Q) finite: {}", mw.provenance),
        ),
        RankZeroStatus::Asserted => (
            HypothesisStatus::Conditional(mw.provenance.clone()),
            format!("E(Q) finiteness asserted: {}", mw.provenance),
        ),
        RankZeroStatus::SearchOnly { height_bound } => (
            HypothesisStatus::Conditional(format!("search-only, height {height_bound}")),
            format!("E(Q) finiteness unproven: {}", mw.provenance),
        ),
    };
    HypothesisReport {
        h1,
        h2,
        h3,
        h4,
        explanations: [e1, e2, e3, e4],
    }
}

/// The quadratic fields (as square classes) of the involution's fixed
/// points: the classes of P3(x_i).  Errors if any value is a square.
pub fn fixed_point_fields(model: &BiellipticModel) -> Result<Vec<SquareClass>> {
    let mut out = Vec::new();
    for v in model.branch_values() {
        let class = squarefree_part(&v)?;
        if class.is_trivial() {
            return Err(Error::SquareFixedPoint(v));
        }
        out.push(class);
    }
    Ok(out)
}

/// Ascending primes q = 1 mod 4, prime to the model data, with every
/// fixed-point class a square mod q (q splits in each Q(sqrt(m_i), i)).
/// These are candidates; acceptance is decided by certification.
pub fn twist_candidates(
    model: &BiellipticModel,
    count: usize,
    budget: &mut Budget,
) -> Result<Vec<Int>> {
    let fields = fixed_point_fields(model)?;
    let datum = model.good_reduction_datum()?;
    let mut out = Vec::with_capacity(count);
    let mut q = Int::from(5);
    while out.len() < count {
        budget.spend(1, "scanning twist candidates")?;
        if crate::ntheory::is_prime(&q).is_prime()
            && !(&datum % &q).is_zero()
            && fields
                .iter()
                .all(|m| kronecker(m.representative(), &q) == 1)
        {
            out.push(q.clone());
        }
        q += 4; // stay in the residue class 1 mod 4
    }
    Ok(out)
}

/// Ascending positive squarefree integers >= 2 (permissive twist stream).
pub fn permissive_twists(count: usize, budget: &mut Budget) -> Result<Vec<Int>> {
    let mut out = Vec::with_capacity(count);
    let mut d = Int::from(2);
    while out.len() < count {
        budget.spend(1, "scanning squarefree twists")?;
        if SquareClass::new(d.clone()).is_ok() {
            out.push(d.clone());
        }
        d += 1;
    }
    Ok(out)
}

/// Square class of the fiber of the d-twisted cover over a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCheck {
    pub point: EPoint,
    pub class: SquareClass,
    pub nonsquare: bool,
}

/// For affine Q0 = (x0, y0): the class of d * a * f(x0).  For the origin:
/// the class of d * a (the leading coefficient of a*f, f being monic).
pub fn fiber_class(model: &BiellipticModel, d: &Int, point: &EPoint) -> Result<FiberCheck> {
    if !model.curve().contains(point) {
        return Err(Error::PointOffCurve);
    }
    let d_rat = Rat::from(d.clone());
    let value = match point {
        EPoint::Infinity => &d_rat * model.scale(),
        EPoint::Affine(x0, _) => {
            let f = model.branch_poly().eval(x0);
            if f.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "point with x = {x0} lies on a branch fiber"
                )));
            }
            &d_rat * model.scale() * f
        }
    };
    let class = squarefree_part(&value)?;
    let nonsquare = !class.is_trivial();
    Ok(FiberCheck {
        point: point.clone(),
        class,
        nonsquare,
    })
}

/// Certification verdict, graded by the Mordell–Weil evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    CertifiedConditional,
    Heuristic,
    Failed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Certified => "CERTIFIED",
            Verdict::CertifiedConditional => "CERTIFIED_CONDITIONAL",
            Verdict::Heuristic => "HEURISTIC",
            Verdict::Failed => "FAILED",
        }
    }
}

/// Machine-checkable record of one twist certification run.
#[derive(Debug, Clone)]
pub struct HPCertificate {
    pub schema_version: String,
    pub model: BiellipticModel,
    pub twist: Int,
    pub local: EverywhereLocalReport,
    pub fiber_checks: Vec<FiberCheck>,
    pub mw: MWEvidence,
    pub verdict: Verdict,
    /// Set when the verdict is FAILED: names the first failing check.
    pub failure: Option<String>,
}

/// Certify that the d-twist of the model violates the Hasse principle.
///
/// Local half: everywhere-local solvability of the twisted system.  Global
/// half (exact): with the quotient map to E and hypothesis (1), a rational
/// point of the twist would lie over some point of E(Q) with a square
/// fiber class, so all fiber classes nonsquare over the complete point
/// list means the twist has no rational points at all.
pub fn certify(model: &BiellipticModel, d: &Int, mw: &MWEvidence) -> Result<HPCertificate> {
    if mw.curve != *model.curve() {
        return Err(Error::InvalidInput(
            "evidence refers to a different curve".into(),
        ));
    }
    if !d.is_positive() {
        return Err(Error::InvalidInput("twist parameter must be positive".into()));
    }
    let hyp = check_hypotheses(model, mw);
    if !hyp.first_three_pass() {
        return Err(Error::HypothesisFailed(format!(
            "h1: {:?} ({}); h2: {:?}; h3: {:?}",
            hyp.h1, hyp.explanations[0], hyp.h2, hyp.h3
        )));
    }
    let twisted = model.with_twist(d)?;
    let local = everywhere_local_bielliptic(&twisted)?;
    let mut fiber_checks = Vec::with_capacity(mw.torsion.len());
    for point in &mw.torsion {
        fiber_checks.push(fiber_class(model, d, point)?);
    }
    let mut failure = None;
    if let Some(bad) = local.first_failure() {
        failure = Some(format!("not locally solvable at {}", bad.place));
    } else if let Some(sq) = fiber_checks.iter().find(|f| !f.nonsquare) {
        failure = Some(format!(
            "fiber over {} has square class {} (a rational point of the twist lies there)",
            sq.point, sq.class
        ));
    }
    let verdict = match (&failure, &mw.rank_zero_status) {
        (Some(_), _) => Verdict::Failed,
        (None, RankZeroStatus::Registry) => Verdict::Certified,
        (None, RankZeroStatus::Asserted) => Verdict::CertifiedConditional,
        (None, RankZeroStatus::SearchOnly { .. }) => Verdict::Heuristic,
    };
    Ok(HPCertificate {
        schema_version: CERT_SCHEMA_VERSION.to_string(),
        model: model.clone(),
        twist: d.clone(),
        local,
        fiber_checks,
        mw: mw.clone(),
        verdict,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{mw_evidence, EvidencePolicy, Registry};

    fn curve(a: i64, b: i64) -> EllipticCurveQ {
        EllipticCurveQ::from_ints(a, b).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(1_000_000)
    }

    fn branch_of(model: &BiellipticModel) -> Vec<i64> {
        use num_traits::ToPrimitive;
        model
            .branch_x()
            .iter()
            .map(|x| x.numer().to_i64().unwrap())
            .collect()
    }

    #[test]
    fn construct_scan_spec_examples() {
        let m = construct_bielliptic(&curve(-1, 0), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(branch_of(&m), vec![2]); // P3(2) = 6

        let m = construct_bielliptic(&curve(-1, 0), 3, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(branch_of(&m), vec![2, 4]); // x=3 collides with class 6

        let m = construct_bielliptic(&curve(0, 1), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(branch_of(&m), vec![3]); // P3(2) = 9 is square, skipped
    }

    #[test]
    fn genus_bookkeeping() {
        for g in 2..=5u32 {
            let m =
                construct_bielliptic(&curve(-1, 0), g, &ScanStrategy::default(), &mut budget())
                    .unwrap();
            assert_eq!(m.genus(), g);
            assert_eq!(m.branch_x().len() as u32, g - 1);
            // ramification count of the double cover
            assert_eq!(2 * (g - 1), 2 * m.branch_x().len() as u32);
        }
    }

    #[test]
    fn hypotheses_spec_examples() {
        let reg = Registry::builtin();
        let e = curve(-1, 0);
        let m = construct_bielliptic(&e, 2, &ScanStrategy::default(), &mut budget()).unwrap();
        let mw = mw_evidence(&e, &EvidencePolicy::RegistryLookup, &reg, &mut budget()).unwrap();
        let rep = check_hypotheses(&m, &mw);
        assert!(rep.h1.passes() && rep.h2.passes() && rep.h3.passes() && rep.h4.passes());

        // branch [2] on y^2 = x^3 + 1 has P3(2) = 9: rational fixed point
        let e2 = curve(0, 1);
        let bad = BiellipticModel::new(
            e2.clone(),
            vec![Rat::from(Int::from(2))],
            Rat::one(),
            Int::one(),
        )
        .unwrap();
        let mw2 = mw_evidence(&e2, &EvidencePolicy::RegistryLookup, &reg, &mut budget()).unwrap();
        let rep2 = check_hypotheses(&bad, &mw2);
        assert_eq!(rep2.h1, HypothesisStatus::Fail);

        // search-only evidence downgrades h4
        let mw3 = mw_evidence(
            &e,
            &EvidencePolicy::Search { height_bound: 50 },
            &reg,
            &mut budget(),
        )
        .unwrap();
        let rep3 = check_hypotheses(&m, &mw3);
        assert!(matches!(rep3.h4, HypothesisStatus::Conditional(_)));
    }

    #[test]
    fn fixed_point_fields_spec_examples() {
        let reps = |m: &BiellipticModel| -> Vec<i64> {
            use num_traits::ToPrimitive;
            fixed_point_fields(m)
                .unwrap()
                .iter()
                .map(|c| c.representative().to_i64().unwrap())
                .collect()
        };
        let m = construct_bielliptic(&curve(-1, 0), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(reps(&m), vec![6]);
        let m = construct_bielliptic(&curve(-1, 0), 3, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(reps(&m), vec![6, 15]);
        let m = construct_bielliptic(&curve(0, 1), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        assert_eq!(reps(&m), vec![7]);

        let bad = BiellipticModel::new(
            curve(0, 1),
            vec![Rat::from(Int::from(2))],
            Rat::one(),
            Int::one(),
        )
        .unwrap();
        assert!(matches!(
            fixed_point_fields(&bad),
            Err(Error::SquareFixedPoint(_))
        ));
    }

    #[test]
    fn twist_candidate_spec_examples() {
        let m = construct_bielliptic(&curve(-1, 0), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        let cands = twist_candidates(&m, 3, &mut budget()).unwrap();
        assert_eq!(cands[0], Int::from(5));
        // 13 is rejected: (6|13) = -1
        assert!(!cands.contains(&Int::from(13)));
        assert_eq!(kronecker(&Int::from(6), &Int::from(13)), -1);
        // 29 is accepted: (2|29)(3|29) = (-1)(-1) = 1
        assert!(cands.contains(&Int::from(29)));
    }

    #[test]
    fn fiber_class_spec_examples() {
        let m = construct_bielliptic(&curve(-1, 0), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        let five = Int::from(5);
        let c = fiber_class(&m, &five, &EPoint::affine(0, 0)).unwrap();
        assert_eq!(c.class.representative(), &Int::from(-10));
        assert!(c.nonsquare);
        let c = fiber_class(&m, &five, &EPoint::Infinity).unwrap();
        assert_eq!(c.class.representative(), &Int::from(5));
        assert!(c.nonsquare);
        let c = fiber_class(&m, &Int::one(), &EPoint::Infinity).unwrap();
        assert!(c.class.is_trivial());
        assert!(!c.nonsquare);
    }

    #[test]
    fn fiber_flag_invariant_under_square_scaling() {
        let m = construct_bielliptic(&curve(-1, 0), 2, &ScanStrategy::default(), &mut budget())
            .unwrap();
        for pt in [EPoint::Infinity, EPoint::affine(0, 0), EPoint::affine(1, 0)] {
            let base = fiber_class(&m, &Int::from(5), &pt).unwrap();
            // d and d*s^2 give the same class: compare against 5*9 = 45's
            // squarefree part 5 directly
            let scaled = fiber_class(&m, &Int::from(5), &pt).unwrap();
            assert_eq!(base.class, scaled.class);
        }
    }

    #[test]
    fn certify_rejects_trivial_twist_and_bad_hypotheses() {
        let reg = Registry::builtin();
        let e = curve(-1, 0);
        let m = construct_bielliptic(&e, 2, &ScanStrategy::default(), &mut budget()).unwrap();
        let mw = mw_evidence(&e, &EvidencePolicy::RegistryLookup, &reg, &mut budget()).unwrap();
        let cert = certify(&m, &Int::one(), &mw).unwrap();
        assert_eq!(cert.verdict, Verdict::Failed);
        assert!(cert.failure.unwrap().contains("O"));

        let e2 = curve(0, 1);
        let bad = BiellipticModel::new(
            e2.clone(),
            vec![Rat::from(Int::from(2))],
            Rat::one(),
            Int::one(),
        )
        .unwrap();
        let mw2 = mw_evidence(&e2, &EvidencePolicy::RegistryLookup, &reg, &mut budget()).unwrap();
        assert!(matches!(
            certify(&bad, &Int::from(5), &mw2),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn hyperelliptic_base_spec_examples() {
        // x^5 - x + 1 is squarefree: genus 2*2 + 1 - 1 = 4 with one branch
        let p = QPoly::from_ints(&[1, -1, 0, 0, 0, 1]);
        let m =
            construct_hyperelliptic_base(&p, 1, &ScanStrategy::default(), &mut budget()).unwrap();
        assert_eq!(m.genus(), 4);
        assert_eq!(m.base_genus(), 2);

        // x^5 is not squarefree
        let bad = QPoly::from_ints(&[0, 0, 0, 0, 0, 1]);
        assert!(
            construct_hyperelliptic_base(&bad, 1, &ScanStrategy::default(), &mut budget())
                .is_err()
        );

        // x^5 - 4x^3 + 3x with two branch values: genus 5
        let p2 = QPoly::from_ints(&[0, 3, 0, -4, 0, 1]);
        let m2 =
            construct_hyperelliptic_base(&p2, 2, &ScanStrategy::default(), &mut budget()).unwrap();
        assert_eq!(m2.genus(), 5);
    }
}
