//! Skorokhod distance `d_0` between step fuzzy sets.
//!
//! `d_0(u, v) = inf_t max(sup|t − id|, d_∞(u, t∘v))` over increasing
//! homeomorphisms `t` of `[0, 1]`. For step fuzzy sets `t∘v` depends on `t`
//! only through the images `γ_j = t(β_j)` of the level breakpoints of `v`,
//! and the piecewise-linear interpolant through those images has the least
//! sup-deviation among all homeomorphisms sharing them, namely
//! `max_j |γ_j − β_j|`.
//!
//! A placement `γ` interleaves the bands `(γ_{j-1}, γ_j]` of `t∘v` with the
//! bands `(α_{i-1}, α_i]` of `u`. The pairs of overlapping bands form a
//! monotone staircase through the `(i, j)` lattice: a step in `i` alone when
//! a band of `u` ends first, in `j` alone when `γ_j` falls strictly inside
//! band `i`, and diagonally when `γ_j = α_i`. Conversely every staircase is
//! realised by placements with `γ_j` in the open band (or on the shared
//! breakpoint) its exit step dictates, and the infimum of the deviation over
//! those placements is the distance from `β_j` to the closed band. The
//! infimum over all `t` is thus a bottleneck shortest path on the lattice.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fuzzy::StepFuzzySet;
use crate::rational::{self, Rational};

use super::certificate::{d0_lower_bound_certificate, LowerBoundCertificate};
use super::hausdorff::hausdorff;
use super::level::level_metric_dinf;
use super::reparam::{apply_reparam, Reparam};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactDp,
    Bruteforce,
    BoundOnly,
}

/// A distance together with the evidence behind it.
///
/// `lower ≤ upper`. For [`Method::ExactDp`] `lower` is the exact infimum
/// and `upper` is the objective of the witness, equal to `lower` when the
/// infimum is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub lower: Rational,
    pub upper: Rational,
    pub witness: Option<Reparam>,
    pub certificate: Option<LowerBoundCertificate>,
    pub method: Method,
    pub attained: bool,
}

impl DistanceReport {
    /// The exact value, when known.
    pub fn value(&self) -> Option<&Rational> {
        match self.method {
            Method::ExactDp => Some(&self.lower),
            _ if self.lower == self.upper => Some(&self.lower),
            _ => None,
        }
    }
}

impl Serialize for DistanceReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DistanceReport", 7)?;
        st.serialize_field("value", &self.value().map(rational::format))?;
        st.serialize_field("lower", &rational::format(&self.lower))?;
        st.serialize_field("upper", &rational::format(&self.upper))?;
        st.serialize_field("attained", &self.attained)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("certificate", &self.certificate)?;
        st.end()
    }
}

#[derive(Clone, Debug)]
pub struct D0Options {
    /// Extra sup-deviation the witness may spend when the infimum is not
    /// attained. Must be positive.
    pub witness_slack: Rational,
    /// When set, attach a lower-bound certificate searched at this epsilon.
    pub certificate_epsilon: Option<Rational>,
}

impl Default for D0Options {
    fn default() -> Self {
        Self {
            witness_slack: rational::dyadic(10),
            certificate_epsilon: None,
        }
    }
}

/// Where the transition out of band `j` of `v` lands.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Exit {
    /// `γ_j` strictly inside `(lo, hi)`.
    Open { lo: Rational, hi: Rational },
    /// `γ_j` equal to a breakpoint of `u`.
    Exact(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Diagonal,
    AdvanceV,
    AdvanceU,
}

/// Lattice costs shared by both passes.
struct Lattice<'a> {
    alphas: Vec<&'a Rational>,
    betas: Vec<&'a Rational>,
    cell: Vec<Vec<Rational>>,
}

impl<'a> Lattice<'a> {
    fn new(u: &'a StepFuzzySet, v: &'a StepFuzzySet) -> Result<Self> {
        let cell = u
            .levels()
            .iter()
            .map(|lu| {
                v.levels()
                    .iter()
                    .map(|lv| hausdorff(&lu.cut, &lv.cut))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphas: u.breakpoints().collect(),
            betas: v.breakpoints().collect(),
            cell,
        })
    }

    fn band_floor(&self, i: usize) -> Rational {
        if i == 0 {
            Rational::zero()
        } else {
            self.alphas[i - 1].clone()
        }
    }

    /// Cost and breakpoint displacement of entering `(i, j)` by `step`.
    fn transition(&self, i: usize, j: usize, step: Step) -> (Rational, Rational) {
        let cell = &self.cell[i][j];
        let displacement = match step {
            Step::AdvanceU => Rational::zero(),
            Step::AdvanceV => {
                let beta = self.betas[j - 1];
                let (lo, hi) = (self.band_floor(i), self.alphas[i]);
                if *beta < lo {
                    lo - beta
                } else if beta > hi {
                    beta - hi
                } else {
                    Rational::zero()
                }
            }
            Step::Diagonal => rational::abs_diff(self.alphas[i - 1], self.betas[j - 1]),
        };
        let cost = rational::max_of(cell, &displacement).clone();
        (cost, displacement)
    }

    fn predecessors(i: usize, j: usize) -> impl Iterator<Item = (usize, usize, Step)> {
        // Order fixes tie-breaking.
        [
            (i > 0 && j > 0).then(|| (i - 1, j - 1, Step::Diagonal)),
            (j > 0).then(|| (i, j.wrapping_sub(1), Step::AdvanceV)),
            (i > 0).then(|| (i.wrapping_sub(1), j, Step::AdvanceU)),
        ]
        .into_iter()
        .flatten()
    }

    fn bottleneck(&self) -> Rational {
        let (m, n) = (self.alphas.len(), self.betas.len());
        let mut best: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; m];
        best[0][0] = Some(self.cell[0][0].clone());
        for i in 0..m {
            for j in 0..n {
                if i == 0 && j == 0 {
                    continue;
                }
                let mut acc: Option<Rational> = None;
                for (pi, pj, step) in Self::predecessors(i, j) {
                    let Some(prev) = &best[pi][pj] else { continue };
                    let (cost, _) = self.transition(i, j, step);
                    let cand = rational::max_of(prev, &cost).clone();
                    if acc.as_ref().is_none_or(|a| cand < *a) {
                        acc = Some(cand);
                    }
                }
                best[i][j] = acc;
            }
        }
        best[m - 1][n - 1].clone().expect("lattice is connected")
    }

    /// Among staircases whose every transition costs at most `threshold`,
    /// the one with least total breakpoint displacement. Returns the exit of
    /// each band of `v` except the last.
    fn least_displacement_path(&self, threshold: &Rational) -> Vec<Exit> {
        let (m, n) = (self.alphas.len(), self.betas.len());
        let mut total: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; m];
        let mut from: Vec<Vec<Option<(usize, usize, Step)>>> = vec![vec![None; n]; m];
        if self.cell[0][0] <= *threshold {
            total[0][0] = Some(Rational::zero());
        }
        for i in 0..m {
            for j in 0..n {
                if i == 0 && j == 0 {
                    continue;
                }
                for (pi, pj, step) in Self::predecessors(i, j) {
                    let Some(prev) = &total[pi][pj] else { continue };
                    let (cost, displacement) = self.transition(i, j, step);
                    if cost > *threshold {
                        continue;
                    }
                    let cand = prev + displacement;
                    if total[i][j].as_ref().is_none_or(|t| cand < *t) {
                        total[i][j] = Some(cand);
                        from[i][j] = Some((pi, pj, step));
                    }
                }
            }
        }

        let mut exits = vec![None; n - 1];
        let (mut i, mut j) = (m - 1, n - 1);
        while let Some((pi, pj, step)) = from[i][j] {
            match step {
                Step::AdvanceU => {}
                Step::AdvanceV => {
                    exits[j - 1] = Some(Exit::Open {
                        lo: self.band_floor(i),
                        hi: self.alphas[i].clone(),
                    })
                }
                Step::Diagonal => exits[j - 1] = Some(Exit::Exact(self.alphas[i - 1].clone())),
            }
            (i, j) = (pi, pj);
        }
        debug_assert_eq!((i, j), (0, 0));
        exits
            .into_iter()
            .map(|e| e.expect("every band of v is left once"))
            .collect()
    }
}

/// Places each `γ_j` as close to `β_j` as its exit allows. Returns the
/// placement and whether it is a genuine (strictly increasing, strictly
/// inside open bands) one. When it is not, spreads each run of placements
/// sharing an open band towards evenly spaced interior points by `slack`.
fn place(betas: &[&Rational], exits: &[Exit], slack: &Rational) -> (Vec<Rational>, bool) {
    let targets: Vec<Rational> = exits
        .iter()
        .zip(betas)
        .map(|(exit, beta)| match exit {
            Exit::Exact(a) => a.clone(),
            Exit::Open { lo, hi } => {
                if *beta < lo {
                    lo.clone()
                } else if *beta > hi {
                    hi.clone()
                } else {
                    (*beta).clone()
                }
            }
        })
        .collect();

    let interior = exits.iter().zip(&targets).all(|(exit, g)| match exit {
        Exit::Exact(_) => true,
        Exit::Open { lo, hi } => lo < g && g < hi,
    });
    let increasing = targets.windows(2).all(|w| w[0] < w[1]);
    if interior && increasing {
        return (targets, true);
    }

    let s = rational::min_of(slack, &Rational::one()).clone();
    let mut placed = targets.clone();
    let mut k = 0;
    while k < exits.len() {
        let Exit::Open { lo, hi } = &exits[k] else {
            k += 1;
            continue;
        };
        let mut end = k + 1;
        while end < exits.len() && exits[end] == exits[k] {
            end += 1;
        }
        let count = Rational::from_integer(((end - k + 1) as i64).into());
        for (rank, slot) in (k..end).enumerate() {
            let spread =
                lo + (hi - lo) * Rational::from_integer(((rank + 1) as i64).into()) / &count;
            placed[slot] = &targets[slot] + &s * (spread - &targets[slot]);
        }
        k = end;
    }
    (placed, false)
}

/// Objective of a concrete reparameterization: `max(sup|t − id|, d_∞(u, t∘v))`.
pub fn reparam_objective(u: &StepFuzzySet, v: &StepFuzzySet, t: &Reparam) -> Result<Rational> {
    let dinf = level_metric_dinf(u, &apply_reparam(t, v))?;
    let dev = t.sup_deviation();
    Ok(if dev > dinf { dev } else { dinf })
}

/// Exact `d_0(u, v)` with a witness reparameterization.
pub fn skorokhod_d0(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<DistanceReport> {
    skorokhod_d0_with(u, v, &D0Options::default())
}

pub fn skorokhod_d0_with(
    u: &StepFuzzySet,
    v: &StepFuzzySet,
    options: &D0Options,
) -> Result<DistanceReport> {
    if options.witness_slack <= Rational::zero() {
        return Err(Error::NonPositive {
            what: "witness slack",
        });
    }
    let lattice = Lattice::new(u, v)?;
    let supports = hausdorff(u.support(), v.support())?;
    let value = rational::max_of(&supports, &lattice.bottleneck()).clone();

    let exits = lattice.least_displacement_path(&value);
    let build = |slack: &Rational| -> Result<(Reparam, Rational)> {
        let (gammas, _) = place(&lattice.betas, &exits, slack);
        let witness = Reparam::through(
            lattice
                .betas
                .iter()
                .zip(gammas)
                .map(|(b, g)| ((*b).clone(), g)),
        )?;
        let upper = reparam_objective(u, v, &witness)?;
        Ok((witness, upper))
    };
    // Spreading a run of placements off a band end may cost deviation; a
    // smaller spread often keeps the objective at the infimum.
    let mut slack = options.witness_slack.clone();
    let (mut witness, mut upper) = build(&slack)?;
    for _ in 0..16 {
        if upper == value {
            break;
        }
        slack /= Rational::from_integer(2.into());
        let (w, up) = build(&slack)?;
        if up < upper {
            (witness, upper) = (w, up);
        }
    }
    debug_assert!(upper >= value);
    debug_assert!(upper <= &value + &options.witness_slack);

    let certificate = match &options.certificate_epsilon {
        Some(eps) => d0_lower_bound_certificate(u, v, eps)?,
        None => None,
    };
    Ok(DistanceReport {
        attained: upper == value,
        lower: value,
        upper,
        witness: Some(witness),
        certificate,
        method: Method::ExactDp,
    })
}

/// A reparameterization whose objective is at most `epsilon`, for any
/// `epsilon` above `d_0(u, v)`; also for `epsilon = d_0` when attained.
pub fn epsilon_witness(u: &StepFuzzySet, v: &StepFuzzySet, epsilon: &Rational) -> Result<Reparam> {
    let base = skorokhod_d0(u, v)?;
    if base.upper <= *epsilon {
        return Ok(base.witness.expect("exact-dp always has a witness"));
    }
    if *epsilon <= base.lower {
        return Err(Error::Precondition(format!(
            "epsilon {} does not exceed d_0 = {}",
            rational::format(epsilon),
            rational::format(&base.lower)
        )));
    }
    let options = D0Options {
        witness_slack: epsilon - &base.lower,
        certificate_epsilon: None,
    };
    Ok(skorokhod_d0_with(u, v, &options)?.witness.expect("witness"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Level;
    use crate::interval::IntervalUnion;
    use crate::rational::{int, q};

    fn tail(lo: Rational) -> IntervalUnion {
        IntervalUnion::interval(lo, int(1)).unwrap()
    }

    fn depth_two_pair() -> (StepFuzzySet, StepFuzzySet) {
        // Depth-2 truncation of the construction with a = 3/8.
        let u = StepFuzzySet::from_levels(vec![
            Level {
                alpha: q(3, 8),
                cut: tail(q(3, 8)),
            },
            Level {
                alpha: q(11, 16),
                cut: tail(q(7, 8)),
            },
            Level {
                alpha: q(27, 32),
                cut: tail(q(15, 16)),
            },
            Level {
                alpha: int(1),
                cut: tail(q(31, 32)),
            },
        ])
        .unwrap();
        let v = StepFuzzySet::from_levels(vec![
            Level {
                alpha: q(1, 8),
                cut: tail(q(1, 8)),
            },
            Level {
                alpha: q(5, 8),
                cut: tail(q(7, 8)),
            },
            Level {
                alpha: q(11, 16),
                cut: tail(q(15, 16)),
            },
            Level {
                alpha: q(27, 32),
                cut: tail(q(31, 32)),
            },
            Level {
                alpha: int(1),
                cut: tail(q(63, 64)),
            },
        ])
        .unwrap();
        (u, v)
    }

    #[test]
    fn self_distance_is_zero_with_identity() {
        let (u, _) = depth_two_pair();
        let r = skorokhod_d0(&u, &u).unwrap();
        assert_eq!(r.lower, int(0));
        assert_eq!(r.upper, int(0));
        assert!(r.witness.unwrap().knots().iter().all(|(x, y)| x == y));
    }

    #[test]
    fn depth_two_pair_is_a_quarter() {
        let (u, v) = depth_two_pair();
        let r = skorokhod_d0(&u, &v).unwrap();
        assert_eq!(r.lower, q(1, 4));
        assert!(r.attained);
        assert_eq!(
            reparam_objective(&u, &v, r.witness.as_ref().unwrap()).unwrap(),
            q(1, 4)
        );
        assert_eq!(skorokhod_d0(&v, &u).unwrap().lower, q(1, 4));
    }

    #[test]
    fn boundary_runs_get_spread_witnesses() {
        // v's switch at 1/4 must move onto u's switch at 1/2, and v's
        // redundant breakpoint at 1/2 must then sit strictly above it.
        let u = StepFuzzySet::from_levels(vec![
            Level {
                alpha: q(1, 2),
                cut: tail(int(0)),
            },
            Level {
                alpha: int(1),
                cut: tail(q(1, 2)),
            },
        ])
        .unwrap();
        let v = StepFuzzySet::from_levels(vec![
            Level {
                alpha: q(1, 4),
                cut: tail(int(0)),
            },
            Level {
                alpha: q(1, 2),
                cut: tail(q(1, 2)),
            },
            Level {
                alpha: int(1),
                cut: tail(q(1, 2)),
            },
        ])
        .unwrap();
        let r = skorokhod_d0(&u, &v).unwrap();
        assert_eq!(r.lower, q(1, 4));
        assert!(r.upper >= r.lower);
        assert!(r.upper <= &r.lower + rational::dyadic(10));
        let w = epsilon_witness(&u, &v, &(q(1, 4) + q(1, 1000))).unwrap();
        assert!(reparam_objective(&u, &v, &w).unwrap() <= q(1, 4) + q(1, 1000));
        assert!(epsilon_witness(&u, &v, &q(1, 5)).is_err());
    }

    #[test]
    fn collapsing_a_band_is_not_allowed() {
        // v's middle band carries a far-away cut. Squeezing it to zero width
        // would remove it, but every homeomorphism keeps it non-degenerate,
        // so it must be matched against some band of u.
        let u = StepFuzzySet::from_levels(vec![Level {
            alpha: int(1),
            cut: tail(int(0)),
        }])
        .unwrap();
        let v = StepFuzzySet::from_levels(vec![
            Level {
                alpha: q(1, 2),
                cut: tail(int(0)),
            },
            Level {
                alpha: q(1, 2) + q(1, 100),
                cut: IntervalUnion::point(int(1)),
            },
            Level {
                alpha: int(1),
                cut: IntervalUnion::point(int(1)),
            },
        ])
        .unwrap();
        let r = skorokhod_d0(&u, &v).unwrap();
        assert_eq!(r.lower, int(1));
        assert_eq!(r.lower, level_metric_dinf(&u, &v).unwrap());
    }

    #[test]
    fn rejects_non_positive_slack() {
        let (u, v) = depth_two_pair();
        let bad = D0Options {
            witness_slack: int(0),
            certificate_epsilon: None,
        };
        assert!(skorokhod_d0_with(&u, &v, &bad).is_err());
    }
}
