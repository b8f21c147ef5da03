//! Finite unions of closed rational intervals.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A finite union of closed intervals `[lo, hi]`, kept sorted, disjoint and
/// with a strictly positive gap between neighbours. Points (`lo == hi`) are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalUnion {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalUnion {
    /// Merges overlapping or touching intervals and sorts the result.
    pub fn canonicalize(pairs: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        if pairs.is_empty() {
            return Err(Error::EmptyUnion);
        }
        if let Some((lo, hi)) = pairs.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::ReversedInterval {
                lo: rational::format(lo),
                hi: rational::format(hi),
            });
        }
        pairs.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        Ok(Self { intervals: merged })
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        Self::canonicalize([(lo, hi)])
    }

    pub fn point(x: Rational) -> Self {
        Self {
            intervals: vec![(x.clone(), x)],
        }
    }

    /// The empty union. Rejected by every operation that needs a cut.
    pub fn empty() -> Self {
        Self {
            intervals: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Whether `pairs` is already in canonical form.
    pub fn is_canonical(pairs: &[(Rational, Rational)]) -> bool {
        pairs.iter().all(|(lo, hi)| lo <= hi) && pairs.windows(2).all(|w| w[0].1 < w[1].0)
    }

    pub fn min(&self) -> Option<&Rational> {
        self.intervals.first().map(|p| &p.0)
    }

    pub fn max(&self) -> Option<&Rational> {
        self.intervals.last().map(|p| &p.1)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|(lo, hi)| lo <= x && x <= hi)
    }

    /// `self ⊆ other`. Each interval must sit inside a single interval of
    /// `other`, since `other` has gaps between its pieces.
    pub fn is_subset(&self, other: &IntervalUnion) -> bool {
        self.intervals
            .iter()
            .all(|(lo, hi)| other.intervals.iter().any(|(a, b)| a <= lo && hi <= b))
    }

    pub fn intersects(&self, other: &IntervalUnion) -> bool {
        self.intervals
            .iter()
            .any(|(lo, hi)| other.intervals.iter().any(|(a, b)| lo <= b && a <= hi))
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        if self.is_empty() {
            return other.clone();
        }
        let pairs = self.intervals.iter().chain(&other.intervals).cloned();
        Self::canonicalize(pairs).expect("non-empty canonical inputs")
    }

    /// Distance from `x` to the nearest point of the union.
    pub fn distance_to(&self, x: &Rational) -> Result<Rational> {
        let mut best: Option<Rational> = None;
        for (lo, hi) in &self.intervals {
            let d = if x < lo {
                lo - x
            } else if x > hi {
                x - hi
            } else {
                return Ok(Rational::from_integer(0.into()));
            };
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
        best.ok_or(Error::EmptyUnion)
    }

    /// Midpoints of the gaps between consecutive intervals.
    pub fn gap_midpoints(&self) -> impl Iterator<Item = Rational> + '_ {
        self.intervals
            .windows(2)
            .map(|w| (&w[0].1 + &w[1].0) / Rational::from_integer(2.into()))
    }

    pub fn within_unit_interval(&self) -> bool {
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        self.intervals
            .iter()
            .all(|(lo, hi)| *lo >= zero && *hi <= one)
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for (k, (lo, hi)) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∪ ")?;
            }
            if lo == hi {
                write!(f, "{{{}}}", rational::format(lo))?;
            } else {
                write!(f, "[{}, {}]", rational::format(lo), rational::format(hi))?;
            }
        }
        Ok(())
    }
}

impl Serialize for IntervalUnion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_pairs::serialize(&self.intervals, s)
    }
}

impl<'de> Deserialize<'de> for IntervalUnion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = rational::serde_pairs::deserialize(d)?;
        Self::canonicalize(pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn iu(pairs: &[(Rational, Rational)]) -> IntervalUnion {
        IntervalUnion::canonicalize(pairs.iter().cloned()).unwrap()
    }

    #[test]
    fn merges_overlapping_intervals() {
        let u = iu(&[(int(0), q(1, 2)), (q(1, 4), int(1))]);
        assert_eq!(u.intervals(), &[(int(0), int(1))]);
    }

    #[test]
    fn keeps_canonical_input() {
        let u = iu(&[(q(3, 8), int(1))]);
        assert_eq!(u.intervals(), &[(q(3, 8), int(1))]);
        let w = iu(&[(q(21, 32), q(3, 4)), (q(7, 16), q(1, 2))]);
        assert_eq!(w.intervals(), &[(q(7, 16), q(1, 2)), (q(21, 32), q(3, 4))]);
    }

    #[test]
    fn merges_touching_and_nested_intervals() {
        let u = iu(&[(q(1, 2), int(1)), (int(0), q(1, 2)), (q(1, 8), q(1, 4))]);
        assert_eq!(u.intervals(), &[(int(0), int(1))]);
        let p = iu(&[(int(1), int(1)), (int(1), int(1))]);
        assert_eq!(p, IntervalUnion::point(int(1)));
    }

    #[test]
    fn rejects_reversed_and_empty() {
        assert!(matches!(
            IntervalUnion::canonicalize([(int(1), int(0))]),
            Err(Error::ReversedInterval { .. })
        ));
        assert!(matches!(
            IntervalUnion::canonicalize(Vec::new()),
            Err(Error::EmptyUnion)
        ));
    }

    #[test]
    fn subset_respects_gaps() {
        let a = iu(&[(int(0), q(1, 4)), (q(1, 2), int(1))]);
        assert!(iu(&[(q(1, 2), q(3, 4))]).is_subset(&a));
        assert!(!iu(&[(q(1, 8), q(3, 4))]).is_subset(&a));
        assert!(a.is_subset(&iu(&[(int(0), int(1))])));
    }

    #[test]
    fn distance_and_midpoints() {
        let a = iu(&[(int(0), q(1, 4)), (q(3, 4), int(1))]);
        assert_eq!(a.distance_to(&q(1, 2)).unwrap(), q(1, 4));
        assert_eq!(a.distance_to(&q(9, 10)).unwrap(), int(0));
        assert_eq!(a.gap_midpoints().collect::<Vec<_>>(), vec![q(1, 2)]);
        assert!(IntervalUnion::empty().distance_to(&int(0)).is_err());
    }

    #[test]
    fn display() {
        let a = iu(&[(q(7, 16), q(1, 2)), (int(1), int(1))]);
        assert_eq!(a.to_string(), "[7/16, 1/2] ∪ {1}");
    }
}
