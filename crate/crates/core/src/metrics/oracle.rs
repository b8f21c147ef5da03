//! Grid search for `d_0`, independent of the lattice program.
//!
//! Places the breakpoints of `v` on the grid `{h, 2h, …} ∩ (0, 1)` merged
//! with the breakpoints of `u`, strictly increasing, and minimises the
//! objective of the resulting piecewise-linear reparameterization evaluated
//! band by band. Every candidate is a genuine homeomorphism, so the minimum
//! is an upper bound on `d_0`; snapping an optimal placement to the grid
//! moves it by at most one cell, so `upper − h` bounds it from below.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fuzzy::StepFuzzySet;
use crate::rational::{self, Rational};

use super::hausdorff::hausdorff;
use super::reparam::Reparam;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBracket {
    pub lower: Rational,
    pub upper: Rational,
    /// Images of `v`'s breakpoints (all but the last, which stays at 1)
    /// realising `upper`.
    pub placement: Vec<Rational>,
}

impl OracleBracket {
    /// The reparameterization realising `upper`.
    pub fn reparam(&self, v: &StepFuzzySet) -> Result<Reparam> {
        Reparam::through(v.breakpoints().cloned().zip(self.placement.iter().cloned()))
    }
}

pub fn d0_bruteforce(
    u: &StepFuzzySet,
    v: &StepFuzzySet,
    resolution: &Rational,
) -> Result<OracleBracket> {
    let zero = Rational::zero();
    let one = Rational::one();
    if *resolution <= zero {
        return Err(Error::NonPositive { what: "resolution" });
    }

    let alphas: Vec<&Rational> = u.breakpoints().collect();
    let betas: Vec<&Rational> = v.breakpoints().collect();

    let mut grid: Vec<Rational> = Vec::new();
    let mut x = resolution.clone();
    while x < one {
        grid.push(x.clone());
        x += resolution;
    }
    grid.extend(alphas.iter().filter(|a| ***a < one).map(|a| (*a).clone()));
    grid.sort();
    grid.dedup();

    // Band of u holding (g, g + δ] for small δ, and the band holding g.
    let right_of = |g: &Rational| alphas.partition_point(|a| *a <= g);
    let holding = |g: &Rational| alphas.partition_point(|a| *a < g);

    let mismatch: Vec<Vec<Rational>> = u
        .levels()
        .iter()
        .map(|lu| {
            v.levels()
                .iter()
                .map(|lv| hausdorff(&lu.cut, &lv.cut))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    // Chain over v's bands: state is the position of γ_j.
    let mut positions: Vec<Rational> = vec![zero.clone()];
    let mut cost: Vec<Option<Rational>> = vec![Some(zero.clone())];
    let mut back: Vec<Vec<usize>> = Vec::new();

    for (j, beta) in betas.iter().enumerate() {
        let last = j + 1 == betas.len();
        let targets: Vec<Rational> = if last {
            vec![one.clone()]
        } else {
            grid.clone()
        };

        // Best predecessor cost per starting band, restricted to positions
        // strictly left of the current target; swept in increasing order.
        let mut best_from: Vec<Option<(Rational, usize)>> = vec![None; alphas.len()];
        let mut next_prev = 0;
        let mut new_cost = Vec::with_capacity(targets.len());
        let mut new_back = Vec::with_capacity(targets.len());

        for g in &targets {
            while next_prev < positions.len() && positions[next_prev] < *g {
                if let Some(c) = &cost[next_prev] {
                    let band = right_of(&positions[next_prev]);
                    if best_from[band].as_ref().is_none_or(|(b, _)| c < b) {
                        best_from[band] = Some((c.clone(), next_prev));
                    }
                }
                next_prev += 1;
            }
            let top = holding(g);
            let mut band_max: Option<Rational> = None;
            let mut acc: Option<(Rational, usize)> = None;
            for start in (0..=top).rev() {
                let m = &mismatch[start][j];
                if band_max.as_ref().is_none_or(|b| m > b) {
                    band_max = Some(m.clone());
                }
                if let Some((c, idx)) = &best_from[start] {
                    let cand = rational::max_of(c, band_max.as_ref().unwrap()).clone();
                    if acc.as_ref().is_none_or(|(a, _)| cand < *a) {
                        acc = Some((cand, *idx));
                    }
                }
            }
            match acc {
                Some((c, idx)) => {
                    let dev = rational::abs_diff(g, beta);
                    new_cost.push(Some(rational::max_of(&c, &dev).clone()));
                    new_back.push(idx);
                }
                None => {
                    new_cost.push(None);
                    new_back.push(usize::MAX);
                }
            }
        }
        positions = targets;
        cost = new_cost;
        back.push(new_back);
    }

    let chain = cost[0]
        .clone()
        .ok_or_else(|| Error::GridTooCoarse(rational::format(resolution)))?;
    let supports = hausdorff(u.support(), v.support())?;
    let upper = rational::max_of(&chain, &supports).clone();
    let lower = rational::max_of(&(&upper - resolution), &zero).clone();

    // Walk the back pointers to recover the placement.
    let mut placement = Vec::with_capacity(betas.len().saturating_sub(1));
    let mut idx = back.last().map(|b| b[0]).unwrap_or(0);
    for j in (0..betas.len().saturating_sub(1)).rev() {
        placement.push(grid[idx].clone());
        idx = back[j][idx];
    }
    placement.reverse();

    Ok(OracleBracket {
        lower,
        upper,
        placement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Level;
    use crate::interval::IntervalUnion;
    use crate::metrics::skorokhod::reparam_objective;
    use crate::rational::{int, q};

    fn tail(lo: Rational) -> IntervalUnion {
        IntervalUnion::interval(lo, int(1)).unwrap()
    }

    fn pair() -> (StepFuzzySet, StepFuzzySet) {
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
                alpha: int(1),
                cut: tail(q(15, 16)),
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
                alpha: int(1),
                cut: tail(q(31, 32)),
            },
        ])
        .unwrap();
        (u, v)
    }

    #[test]
    fn self_distance() {
        let (u, _) = pair();
        let b = d0_bruteforce(&u, &u, &q(1, 16)).unwrap();
        assert_eq!((b.lower, b.upper), (int(0), int(0)));
    }

    #[test]
    fn brackets_a_quarter_and_placement_reproduces_upper() {
        let (u, v) = pair();
        let b = d0_bruteforce(&u, &v, &q(1, 64)).unwrap();
        assert_eq!(b.upper, q(1, 4));
        assert_eq!(b.lower, q(1, 4) - q(1, 64));
        let t = b.reparam(&v).unwrap();
        assert_eq!(reparam_objective(&u, &v, &t).unwrap(), b.upper);
    }

    #[test]
    fn too_coarse_grid() {
        let (u, v) = pair();
        // u's only interior breakpoints are 3/8 and 11/16, and h = 1 adds
        // nothing; v needs three interior images.
        assert!(matches!(
            d0_bruteforce(&u, &v, &int(1)),
            Err(Error::GridTooCoarse(_))
        ));
        assert!(d0_bruteforce(&u, &v, &int(0)).is_err());
    }
}
