use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fuzzy::{Level, StepFuzzySet};
use crate::rational::{self, Rational};

/// A strictly increasing piecewise-linear homeomorphism of `[0, 1]`,
/// given by its knots. The first knot is `(0, 0)` and the last `(1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reparam {
    knots: Vec<(Rational, Rational)>,
}

impl Reparam {
    pub fn new(knots: Vec<(Rational, Rational)>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        match (knots.first(), knots.last()) {
            (Some(first), Some(last))
                if *first == (zero.clone(), zero) && *last == (one.clone(), one) => {}
            _ => {
                return Err(Error::InvalidReparam(
                    "knots must start at (0, 0) and end at (1, 1)".into(),
                ))
            }
        }
        if let Some(w) = knots
            .windows(2)
            .find(|w| w[0].0 >= w[1].0 || w[0].1 >= w[1].1)
        {
            return Err(Error::InvalidReparam(format!(
                "knots ({}, {}) and ({}, {}) are not strictly increasing",
                rational::format(&w[0].0),
                rational::format(&w[0].1),
                rational::format(&w[1].0),
                rational::format(&w[1].1)
            )));
        }
        Ok(Self { knots })
    }

    pub fn identity() -> Self {
        Self {
            knots: vec![
                (Rational::zero(), Rational::zero()),
                (Rational::one(), Rational::one()),
            ],
        }
    }

    /// Interpolant through `(0,0)`, the given interior knots, and `(1,1)`.
    pub fn through(interior: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let mut knots = vec![(Rational::zero(), Rational::zero())];
        knots.extend(interior);
        knots.push((Rational::one(), Rational::one()));
        Self::new(knots)
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    /// `t(x)` for `x ∈ [0, 1]`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        interpolate(self.knots.iter().map(|(a, b)| (a, b)), x)
    }

    /// `t⁻¹(y)` for `y ∈ [0, 1]`.
    pub fn eval_inverse(&self, y: &Rational) -> Result<Rational> {
        interpolate(self.knots.iter().map(|(a, b)| (b, a)), y)
    }

    pub fn inverse(&self) -> Reparam {
        Reparam {
            knots: self
                .knots
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    /// `sup { |t(x) − x| : x ∈ [0, 1] }`. `t − id` is linear between knots,
    /// so the supremum sits on a knot.
    pub fn sup_deviation(&self) -> Rational {
        self.knots
            .iter()
            .map(|(x, y)| rational::abs_diff(x, y))
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn interpolate<'a>(
    mut knots: impl Iterator<Item = (&'a Rational, &'a Rational)>,
    x: &Rational,
) -> Result<Rational> {
    if *x < Rational::zero() || *x > Rational::one() {
        return Err(Error::LevelOutOfRange(rational::format(x)));
    }
    let mut prev = knots.next().expect("at least two knots");
    for next in knots {
        if x <= next.0 {
            if x == next.0 {
                return Ok(next.1.clone());
            }
            let slope = (next.1 - prev.1) / (next.0 - prev.0);
            return Ok(prev.1 + slope * (x - prev.0));
        }
        prev = next;
    }
    Ok(prev.1.clone())
}

/// `sup { |t(x) − x| : x ∈ [0, 1] }`.
pub fn reparam_sup_deviation(t: &Reparam) -> Rational {
    t.sup_deviation()
}

/// The fuzzy set `t ∘ v`. Its cut at level `α` is `[v]_{t⁻¹(α)}`, so level
/// breakpoints move to their images under `t` while cuts stay put.
pub fn apply_reparam(t: &Reparam, v: &StepFuzzySet) -> StepFuzzySet {
    let levels = v
        .levels()
        .iter()
        .map(|l| Level {
            alpha: t.eval(&l.alpha).expect("levels lie in (0, 1]"),
            cut: l.cut.clone(),
        })
        .collect();
    StepFuzzySet::with_parts_unchecked(levels, v.support().clone())
}

impl Serialize for Reparam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            #[serde(with = "rational::serde_pairs")]
            knots: &'a Vec<(Rational, Rational)>,
        }
        Wire { knots: &self.knots }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Reparam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            #[serde(with = "rational::serde_pairs")]
            knots: Vec<(Rational, Rational)>,
        }
        let w = Wire::deserialize(d)?;
        Reparam::new(w.knots).map_err(serde::de::Error::custom)
    }
}
