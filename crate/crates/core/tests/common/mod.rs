#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use zadeh_core::dynamics::PlMap;
use zadeh_core::rational::{int, q};
use zadeh_core::{IntervalUnion, Level, Rational, StepFuzzySet};

/// Cut endpoints live on multiples of `1/CUT_DEN`.
pub const CUT_DEN: i64 = 32;
/// Level breakpoints live on multiples of `1/LEVEL_DEN`.
pub const LEVEL_DEN: i64 = 8;

pub fn random_union<R: Rng>(rng: &mut R, pieces: usize) -> IntervalUnion {
    let pairs = (0..pieces.max(1)).map(|_| {
        let a = rng.gen_range(0..=CUT_DEN);
        let b = if rng.gen_bool(0.2) {
            a
        } else {
            rng.gen_range(0..=CUT_DEN)
        };
        (q(a.min(b), CUT_DEN), q(a.max(b), CUT_DEN))
    });
    IntervalUnion::canonicalize(pairs).unwrap()
}

/// Widens each piece of `cut` by a few grid steps and maybe adds a piece.
fn grow<R: Rng>(rng: &mut R, cut: &IntervalUnion) -> IntervalUnion {
    let step = q(1, CUT_DEN);
    let mut pairs: Vec<(Rational, Rational)> = cut
        .intervals()
        .iter()
        .map(|(lo, hi)| {
            let dl = int(rng.gen_range(0..=3)) * &step;
            let dh = int(rng.gen_range(0..=3)) * &step;
            let lo = (lo - dl).max(int(0));
            let hi = (hi + dh).min(int(1));
            (lo, hi)
        })
        .collect();
    if rng.gen_bool(0.3) {
        pairs.extend(random_union(rng, 1).intervals().iter().cloned());
    }
    IntervalUnion::canonicalize(pairs).unwrap()
}

/// A genuine step fuzzy set (support equal to the lowest cut) with at most
/// `max_levels` levels on the `1/LEVEL_DEN` grid.
pub fn random_fuzzy<R: Rng>(rng: &mut R, max_levels: usize) -> StepFuzzySet {
    let m = rng.gen_range(1..=max_levels.min(LEVEL_DEN as usize));
    let mut interior: Vec<i64> = (1..LEVEL_DEN).collect();
    interior.shuffle(rng);
    let mut alphas: Vec<Rational> = interior[..m - 1].iter().map(|k| q(*k, LEVEL_DEN)).collect();
    alphas.sort();
    alphas.push(int(1));

    let pieces = rng.gen_range(1..=2);
    let mut cut = random_union(rng, pieces);
    let mut cuts = vec![cut.clone()];
    for _ in 1..m {
        cut = grow(rng, &cut);
        cuts.push(cut.clone());
    }
    cuts.reverse();
    let levels = alphas
        .into_iter()
        .zip(cuts)
        .map(|(alpha, cut)| Level { alpha, cut })
        .collect();
    StepFuzzySet::from_levels(levels).unwrap()
}

/// A PL map with Lipschitz constant at most `lambda`.
pub fn random_contraction<R: Rng>(rng: &mut R, lambda: &Rational) -> PlMap {
    let pieces = rng.gen_range(1..=4);
    let mut xs: Vec<i64> = (1..16).collect();
    xs.shuffle(rng);
    let mut xs: Vec<Rational> = xs[..pieces - 1].iter().map(|k| q(*k, 16)).collect();
    xs.sort();
    xs.insert(0, int(0));
    xs.push(int(1));

    let y0 = q(rng.gen_range(0..=16), 16);
    let mut knots = vec![(int(0), y0)];
    for w in xs.windows(2) {
        let dx = &w[1] - &w[0];
        let frac = q(rng.gen_range(-8..=8), 8);
        let mut y = &knots.last().unwrap().1 + lambda * &frac * &dx;
        if y < int(0) || y > int(1) {
            y = &knots.last().unwrap().1 - lambda * &frac * &dx;
        }
        knots.push((w[1].clone(), y.max(int(0)).min(int(1))));
    }
    PlMap::new(knots).unwrap()
}

pub fn random_lambda<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(1..=7), 8)
}
