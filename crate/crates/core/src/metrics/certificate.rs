//! Lower bounds on `d_0` from a single probe level.
//!
//! If `sup|t − id| ≤ ε` then `t⁻¹(α*)` lies within `ε` of `α*`, and
//! `[t∘v]_{α*} = [v]_{t⁻¹(α*)}`. So if every cut of `v` at a level in that
//! window is farther than `ε` from `[u]_{α*}`, no `t` within `ε` of the
//! identity brings `d_∞(u, t∘v)` down to `ε`, and `d_0(u, v) ≥ ε`.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fuzzy::StepFuzzySet;
use crate::interval::IntervalUnion;
use crate::rational::{self, Rational};

use super::hausdorff::hausdorff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandComparison {
    pub v_band: usize,
    pub v_cut: IntervalUnion,
    pub hausdorff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub probe_level: Rational,
    pub epsilon: Rational,
    pub u_band: usize,
    pub u_cut: IntervalUnion,
    /// Levels `t⁻¹(α*)` can reach: `[lo, hi]`, excluding `0`.
    pub window: (Rational, Rational),
    /// Every band of `v` meeting the window.
    pub bands: Vec<BandComparison>,
    /// Least Hausdorff distance over `bands`; exceeds `epsilon`.
    pub floor: Rational,
}

impl LowerBoundCertificate {
    /// Re-derives the certificate from `u` and `v` and checks it.
    pub fn verify(&self, u: &StepFuzzySet, v: &StepFuzzySet) -> bool {
        match probe(u, v, &self.probe_level, &self.epsilon) {
            Ok(again) => again == *self && self.floor > self.epsilon,
            Err(_) => false,
        }
    }
}

impl Serialize for LowerBoundCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Band<'a> {
            v_band: usize,
            v_cut: &'a IntervalUnion,
            hausdorff: String,
        }
        let mut st = s.serialize_struct("LowerBoundCertificate", 7)?;
        st.serialize_field("probe_level", &rational::format(&self.probe_level))?;
        st.serialize_field("epsilon", &rational::format(&self.epsilon))?;
        st.serialize_field("u_band", &self.u_band)?;
        st.serialize_field("u_cut", &self.u_cut)?;
        st.serialize_field(
            "window",
            &[
                rational::format(&self.window.0),
                rational::format(&self.window.1),
            ],
        )?;
        let bands: Vec<Band> = self
            .bands
            .iter()
            .map(|b| Band {
                v_band: b.v_band,
                v_cut: &b.v_cut,
                hausdorff: rational::format(&b.hausdorff),
            })
            .collect();
        st.serialize_field("bands", &bands)?;
        st.serialize_field("floor", &rational::format(&self.floor))?;
        st.end()
    }
}

/// Evaluates probe level `alpha` at `epsilon`, valid or not.
fn probe(
    u: &StepFuzzySet,
    v: &StepFuzzySet,
    alpha: &Rational,
    epsilon: &Rational,
) -> Result<LowerBoundCertificate> {
    let zero = Rational::zero();
    let one = Rational::one();
    if *alpha <= zero || *alpha > one {
        return Err(Error::LevelOutOfRange(rational::format(alpha)));
    }
    // t fixes 1, so the top level has nowhere to move.
    let (lo, hi) = if *alpha == one {
        (one.clone(), one.clone())
    } else {
        (
            rational::max_of(&(alpha - epsilon), &zero).clone(),
            rational::min_of(&(alpha + epsilon), &one).clone(),
        )
    };
    let u_band = u.band_of(alpha);
    let u_cut = u.levels()[u_band].cut.clone();

    // Band (β_{j-1}, β_j] meets [lo, hi] \ {0} iff β_{j-1} < hi and β_j ≥ lo.
    let mut bands = Vec::new();
    let mut floor: Option<Rational> = None;
    let mut below = zero.clone();
    for (j, level) in v.levels().iter().enumerate() {
        if below < hi && level.alpha >= lo && level.alpha > zero {
            let d = hausdorff(&u_cut, &level.cut)?;
            if floor.as_ref().is_none_or(|f| d < *f) {
                floor = Some(d.clone());
            }
            bands.push(BandComparison {
                v_band: j,
                v_cut: level.cut.clone(),
                hausdorff: d,
            });
        }
        below = level.alpha.clone();
    }
    Ok(LowerBoundCertificate {
        probe_level: alpha.clone(),
        epsilon: epsilon.clone(),
        u_band,
        u_cut,
        window: (lo, hi),
        bands,
        floor: floor.expect("the window meets at least one band"),
    })
}

/// Searches the level breakpoints of `u` for a probe proving
/// `d_0(u, v) ≥ epsilon`. Picks the probe with the largest floor, lowest
/// level on ties. `None` is inconclusive, not a disproof.
pub fn d0_lower_bound_certificate(
    u: &StepFuzzySet,
    v: &StepFuzzySet,
    epsilon: &Rational,
) -> Result<Option<LowerBoundCertificate>> {
    if *epsilon <= Rational::zero() {
        return Err(Error::NonPositive { what: "epsilon" });
    }
    let mut best: Option<LowerBoundCertificate> = None;
    for alpha in u.breakpoints() {
        let cert = probe(u, v, alpha, epsilon)?;
        if cert.floor > *epsilon && best.as_ref().is_none_or(|b| cert.floor > b.floor) {
            best = Some(cert);
        }
    }
    Ok(best)
}
