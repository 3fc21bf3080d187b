//! Everywhere-local drivers: test the real place and the finitely many
//! small/bad places explicitly, and certify the cofinite remainder by the
//! Weil bound on smooth reductions.

use super::{
    local_solvable_bielliptic, local_solvable_plane, weil_threshold, LocalSolvabilityReport,
    Place, PlaneQuartic, WeilThreshold,
};
use crate::ntheory::factor;
use crate::twist::BiellipticModel;
use crate::{Int, Result};
use std::collections::BTreeSet;

/// The cofinite part of an everywhere-local verdict: every finite place not
/// dividing `checked_datum` and of residue size at least `threshold.m1` has
/// good reduction, hence a smooth point over its residue field by the Weil
/// bound, which lifts by Hensel's lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilArgument {
    pub threshold: WeilThreshold,
    /// Integer whose prime divisors, together with all primes below m1,
    /// form the explicitly tested place list.
    pub checked_datum: Int,
    pub statement: String,
}

/// Reports at the explicit places plus the Weil argument for the rest.
#[derive(Debug, Clone)]
pub struct EverywhereLocalReport {
    pub reports: Vec<LocalSolvabilityReport>,
    pub weil: WeilArgument,
    pub all_solvable: bool,
}

impl EverywhereLocalReport {
    pub fn first_failure(&self) -> Option<&LocalSolvabilityReport> {
        self.reports.iter().find(|r| !r.solvable)
    }
}

/// Real place, all primes below m1, and all prime divisors of the datum.
pub fn explicit_places(m1: &Int, datum: &Int) -> Result<Vec<Place>> {
    let mut primes: BTreeSet<Int> = BTreeSet::new();
    for &p in crate::ntheory::small_primes() {
        let p = Int::from(p);
        if &p >= m1 {
            break;
        }
        primes.insert(p);
    }
    for (p, _) in factor(datum)?.factors() {
        primes.insert(p.clone());
    }
    let mut places = vec![Place::Real];
    places.extend(primes.into_iter().map(Place::Finite));
    Ok(places)
}

fn weil_statement(genus: u32, m1: &Int, datum: &Int) -> String {
    format!(
        "every finite place p >= {m1} with p not dividing {datum} has good reduction; \
         a smooth genus-{genus} curve over F_p then has at least p + 1 - 2*{genus}*sqrt(p) > 0 \
         points, and a smooth point lifts to Q_p by Hensel's lemma"
    )
}

/// Everywhere-local verdict for a (possibly twisted) bielliptic model.
pub fn everywhere_local_bielliptic(model: &BiellipticModel) -> Result<EverywhereLocalReport> {
    let threshold = weil_threshold(model.genus())?;
    let datum = model.good_reduction_datum()?;
    let places = explicit_places(&threshold.m1, &datum)?;
    let mut reports = Vec::with_capacity(places.len());
    for place in &places {
        reports.push(local_solvable_bielliptic(model, place)?);
    }
    let all_solvable = reports.iter().all(|r| r.solvable);
    let statement = weil_statement(model.genus(), &threshold.m1, &datum);
    Ok(EverywhereLocalReport {
        reports,
        weil: WeilArgument {
            threshold,
            checked_datum: datum,
            statement,
        },
        all_solvable,
    })
}

/// Everywhere-local verdict for a smooth plane quartic (genus 3).
pub fn everywhere_local_plane(q: &PlaneQuartic) -> Result<EverywhereLocalReport> {
    let genus = 3;
    let threshold = weil_threshold(genus)?;
    let datum = Int::from(2) * q.discriminant_datum()?;
    let places = explicit_places(&threshold.m1, &datum)?;
    let mut reports = Vec::with_capacity(places.len());
    for place in &places {
        reports.push(local_solvable_plane(q, place)?);
    }
    let all_solvable = reports.iter().all(|r| r.solvable);
    let statement = weil_statement(genus, &threshold.m1, &datum);
    Ok(EverywhereLocalReport {
        reports,
        weil: WeilArgument {
            threshold,
            checked_datum: datum,
            statement,
        },
        all_solvable,
    })
}
