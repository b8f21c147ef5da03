use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::rational::Rational;

/// `max_{x ∈ from} dist(x, to)`.
///
/// `dist(·, to)` is piecewise linear: increasing away from `to`, and a tent
/// over each gap of `to` peaking at the gap midpoint. Its maximum over an
/// interval is therefore attained at an endpoint or at a gap midpoint inside
/// the interval.
pub fn directed_hausdorff(from: &IntervalUnion, to: &IntervalUnion) -> Result<Rational> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let mids: Vec<Rational> = to.gap_midpoints().collect();
    let mut best = Rational::from_integer(0.into());
    for (lo, hi) in from.intervals() {
        let inside = mids.iter().filter(|m| lo <= *m && *m <= hi);
        for x in [lo, hi].into_iter().chain(inside) {
            let d = to.distance_to(x)?;
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// Exact Hausdorff distance between two non-empty interval unions.
pub fn hausdorff(a: &IntervalUnion, b: &IntervalUnion) -> Result<Rational> {
    let ab = directed_hausdorff(a, b)?;
    let ba = directed_hausdorff(b, a)?;
    Ok(if ab > ba { ab } else { ba })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn iu(pairs: &[(Rational, Rational)]) -> IntervalUnion {
        IntervalUnion::canonicalize(pairs.iter().cloned()).unwrap()
    }

    #[test]
    fn nested_tails() {
        let a = iu(&[(q(3, 8), int(1))]);
        let b = iu(&[(q(7, 8), int(1))]);
        assert_eq!(hausdorff(&a, &b).unwrap(), q(1, 2));
        assert_eq!(directed_hausdorff(&b, &a).unwrap(), int(0));
    }

    #[test]
    fn interval_against_split_union() {
        let a = iu(&[(q(3, 16), q(3, 4))]);
        let b = iu(&[(q(7, 16), q(1, 2)), (q(21, 32), q(3, 4))]);
        assert_eq!(hausdorff(&a, &b).unwrap(), q(1, 4));
    }

    #[test]
    fn gap_midpoint_dominates() {
        // Point 1/2 sits in the middle of a wide gap of `b`.
        let a = iu(&[(int(0), int(1))]);
        let b = iu(&[(int(0), int(0)), (int(1), int(1))]);
        assert_eq!(hausdorff(&a, &b).unwrap(), q(1, 2));
    }

    #[test]
    fn identity_and_empty() {
        let a = iu(&[(int(0), q(1, 3)), (q(2, 3), int(1))]);
        assert_eq!(hausdorff(&a, &a).unwrap(), int(0));
        assert!(hausdorff(&a, &IntervalUnion::empty()).is_err());
    }
}
