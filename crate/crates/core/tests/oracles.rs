//! Values worked out by hand, and an exhaustive search over reparameterizations
//! as a third route to `d_0`.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zadeh_core::counterexample::build_instance;
use zadeh_core::metrics::{
    d0_bruteforce, hausdorff, level_metric_dinf, reparam_objective, skorokhod_d0, Reparam,
};
use zadeh_core::rational::{int, q};
use zadeh_core::{IntervalUnion, Level, Rational, StepFuzzySet};

fn iv(lo: Rational, hi: Rational) -> IntervalUnion {
    IntervalUnion::interval(lo, hi).unwrap()
}

fn set(levels: Vec<(Rational, IntervalUnion)>) -> StepFuzzySet {
    StepFuzzySet::from_levels(
        levels
            .into_iter()
            .map(|(alpha, cut)| Level { alpha, cut })
            .collect(),
    )
    .unwrap()
}

#[test]
fn hausdorff_hand_values() {
    let points = IntervalUnion::canonicalize([(int(0), int(0)), (int(1), int(1))]).unwrap();
    assert_eq!(hausdorff(&iv(int(0), int(1)), &points).unwrap(), q(1, 2));
    let ends = IntervalUnion::canonicalize([(int(0), q(1, 4)), (q(3, 4), int(1))]).unwrap();
    assert_eq!(hausdorff(&ends, &iv(int(0), int(1))).unwrap(), q(1, 4));
    assert_eq!(
        hausdorff(&iv(q(3, 8), int(1)), &iv(q(7, 8), int(1))).unwrap(),
        q(1, 2)
    );
    assert_eq!(
        hausdorff(&iv(q(1, 8), int(1)), &iv(q(3, 8), int(1))).unwrap(),
        q(1, 4)
    );
}

#[test]
fn crisp_sets() {
    let u = set(vec![(int(1), iv(int(0), q(1, 4)))]);
    let v = set(vec![(int(1), iv(q(1, 2), q(3, 4)))]);
    assert_eq!(level_metric_dinf(&u, &v).unwrap(), q(1, 2));
    assert_eq!(skorokhod_d0(&u, &v).unwrap().lower, q(1, 2));
}

#[test]
fn shifted_level_costs_the_shift() {
    // Only moving 1/4 onto 1/2 avoids comparing [0, 1] with {1/2}.
    let u = set(vec![
        (q(1, 2), iv(int(0), int(1))),
        (int(1), iv(q(1, 2), q(1, 2))),
    ]);
    let v = set(vec![
        (q(1, 4), iv(int(0), int(1))),
        (int(1), iv(q(1, 2), q(1, 2))),
    ]);
    assert_eq!(level_metric_dinf(&u, &v).unwrap(), q(1, 2));
    let r = skorokhod_d0(&u, &v).unwrap();
    assert_eq!(r.lower, q(1, 4));
    assert!(r.attained);
}

#[test]
fn two_breakpoints_move_apart() {
    let u = set(vec![
        (q(1, 4), iv(int(0), int(1))),
        (q(3, 4), iv(int(0), q(1, 2))),
        (int(1), iv(int(0), int(0))),
    ]);
    let v = set(vec![
        (q(1, 2), iv(int(0), int(1))),
        (q(5, 8), iv(int(0), q(1, 2))),
        (int(1), iv(int(0), int(0))),
    ]);
    assert_eq!(level_metric_dinf(&u, &v).unwrap(), q(1, 2));
    assert_eq!(skorokhod_d0(&u, &v).unwrap().lower, q(1, 4));
}

#[test]
fn depth_two_construction_levels() {
    let tail = |lo| iv(lo, int(1));
    let inst = build_instance(2).unwrap();
    let u = set(vec![
        (q(3, 8), tail(q(3, 8))),
        (q(11, 16), tail(q(7, 8))),
        (q(27, 32), tail(q(15, 16))),
        (int(1), tail(q(31, 32))),
    ]);
    let v = set(vec![
        (q(1, 8), tail(q(1, 8))),
        (q(5, 8), tail(q(7, 8))),
        (q(11, 16), tail(q(15, 16))),
        (q(27, 32), tail(q(31, 32))),
        (int(1), tail(q(63, 64))),
    ]);
    assert_eq!(inst.u, u);
    assert_eq!(inst.v, v);
    // Worst band is (1/8, 3/8]: [3/8, 1] against [7/8, 1].
    assert_eq!(level_metric_dinf(&u, &v).unwrap(), q(1, 2));
}

/// Least objective over all strictly increasing placements of `v`'s interior
/// breakpoints on `{k/den} ∪ breakpoints(u)`.
fn exhaustive_d0(u: &StepFuzzySet, v: &StepFuzzySet, den: i64) -> Rational {
    let mut grid: Vec<Rational> = (1..den).map(|k| q(k, den)).collect();
    grid.extend(u.breakpoints().filter(|a| **a < int(1)).cloned());
    grid.sort();
    grid.dedup();
    let betas: Vec<Rational> = v.breakpoints().filter(|b| **b < int(1)).cloned().collect();

    fn go(
        u: &StepFuzzySet,
        v: &StepFuzzySet,
        grid: &[Rational],
        betas: &[Rational],
        from: usize,
        chosen: &mut Vec<Rational>,
        best: &mut Option<Rational>,
    ) {
        if chosen.len() == betas.len() {
            let t = Reparam::through(betas.iter().cloned().zip(chosen.iter().cloned())).unwrap();
            let obj = reparam_objective(u, v, &t).unwrap();
            if best.as_ref().is_none_or(|b| obj < *b) {
                *best = Some(obj);
            }
            return;
        }
        for k in from..grid.len() {
            chosen.push(grid[k].clone());
            go(u, v, grid, betas, k + 1, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    go(u, v, &grid, &betas, 0, &mut Vec::new(), &mut best);
    best.unwrap()
}

/// Up to three levels on the 1/6 grid, cut endpoints on the 1/12 grid.
fn small_set<R: Rng>(rng: &mut R) -> StepFuzzySet {
    let m = rng.gen_range(1..=3);
    let mut inner: Vec<i64> = (1..6).collect();
    inner.shuffle(rng);
    let mut alphas: Vec<Rational> = inner[..m - 1].iter().map(|k| q(*k, 6)).collect();
    alphas.sort();
    alphas.push(int(1));
    let mut lo = rng.gen_range(3..=9);
    let mut hi = lo + rng.gen_range(0..=2);
    let mut cuts = Vec::new();
    for _ in 0..m {
        cuts.push(iv(q(lo, 12), q(hi.min(12), 12)));
        lo = (lo - rng.gen_range(0..=3)).max(0);
        hi += rng.gen_range(0..=3);
    }
    cuts.reverse();
    set(alphas.into_iter().zip(cuts).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn exhaustive_search_agrees_with_lattice(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (small_set(&mut rng), small_set(&mut rng));
        let den = 48;
        let dp = skorokhod_d0(&u, &v).unwrap().lower;
        let searched = exhaustive_d0(&u, &v, den);
        prop_assert!(dp <= searched);
        prop_assert!(&searched - &dp <= q(1, den));

        let h = q(1, 48);
        let o = d0_bruteforce(&u, &v, &h).unwrap();
        prop_assert!(o.lower <= dp && dp <= o.upper);
        prop_assert_eq!(o.upper, searched);
    }
}
