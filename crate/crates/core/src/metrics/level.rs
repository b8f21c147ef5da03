use num_traits::Zero;

use crate::error::Result;
use crate::fuzzy::StepFuzzySet;
use crate::rational::Rational;

use super::hausdorff::hausdorff;

/// Hausdorff distance of the cuts on every band of the merged level
/// partition of `(0, 1]`, in increasing order of the band's upper end.
pub fn band_distances(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Vec<(Rational, Rational)>> {
    let (lu, lv) = (u.levels(), v.levels());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(lu.len() + lv.len());
    // Both level lists end at alpha = 1, so the walk ends on (last, last).
    loop {
        let top = if lu[i].alpha <= lv[j].alpha {
            &lu[i].alpha
        } else {
            &lv[j].alpha
        };
        out.push((top.clone(), hausdorff(&lu[i].cut, &lv[j].cut)?));
        if i + 1 == lu.len() && j + 1 == lv.len() {
            break;
        }
        let (ai, bj) = (&lu[i].alpha, &lv[j].alpha);
        if ai <= bj {
            i += 1;
        }
        if bj <= ai {
            j += 1;
        }
    }
    Ok(out)
}

/// `sup { d_H([u]_α, [v]_α) : α ∈ (0, 1] }`.
pub fn level_metric_open(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
    Ok(band_distances(u, v)?
        .into_iter()
        .map(|(_, d)| d)
        .max()
        .unwrap_or_else(Rational::zero))
}

/// The level-wise metric `d_∞(u, v) = sup { d_H([u]_α, [v]_α) : α ∈ [0, 1] }`,
/// including the comparison of supports at `α = 0`.
pub fn level_metric_dinf(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<Rational> {
    let open = level_metric_open(u, v)?;
    let supports = hausdorff(u.support(), v.support())?;
    Ok(if supports > open { supports } else { open })
}

/// Both routes to `d_∞`: over the open range `(0, 1]` and over `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DinfRoutes {
    pub over_positive_levels: Rational,
    pub with_support: Rational,
}

impl DinfRoutes {
    /// Supports add nothing to the supremum. Holds whenever each support is
    /// the closure of the union of the cuts.
    pub fn agree(&self) -> bool {
        self.over_positive_levels == self.with_support
    }
}

pub fn level_metric_checked(u: &StepFuzzySet, v: &StepFuzzySet) -> Result<DinfRoutes> {
    Ok(DinfRoutes {
        over_positive_levels: level_metric_open(u, v)?,
        with_support: level_metric_dinf(u, v)?,
    })
}
