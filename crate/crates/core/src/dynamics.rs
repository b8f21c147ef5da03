//! Piecewise-linear self-maps of `[0, 1]` and their lifts to fuzzy sets.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fuzzy::{Level, StepFuzzySet};
use crate::interval::IntervalUnion;
use crate::metrics::{level_metric_dinf, skorokhod_d0, Reparam};
use crate::rational::{self, Rational};

/// A continuous piecewise-linear map `[0, 1] → [0, 1]` given by its knots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlMap {
    knots: Vec<(Rational, Rational)>,
}

impl PlMap {
    pub fn new(knots: Vec<(Rational, Rational)>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        if knots.len() < 2 {
            return Err(Error::InvalidMap("need at least two knots".into()));
        }
        if knots[0].0 != zero || knots[knots.len() - 1].0 != one {
            return Err(Error::InvalidMap("knots must span x = 0 to x = 1".into()));
        }
        if knots.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidMap(
                "knot abscissae must strictly increase".into(),
            ));
        }
        if let Some((_, y)) = knots.iter().find(|(_, y)| *y < zero || *y > one) {
            return Err(Error::InvalidMap(format!(
                "value {} leaves [0, 1]",
                rational::format(y)
            )));
        }
        Ok(Self { knots })
    }

    /// `x ↦ λx`.
    pub fn scaling(lambda: Rational) -> Result<Self> {
        Self::new(vec![
            (Rational::zero(), Rational::zero()),
            (Rational::one(), lambda),
        ])
    }

    pub fn identity() -> Self {
        Self::scaling(Rational::one()).expect("identity is valid")
    }

    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(vec![(Rational::zero(), c.clone()), (Rational::one(), c)])
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(Error::OutsideUnitInterval);
        }
        let k = self.knots.partition_point(|(kx, _)| kx < x);
        let (x1, y1) = &self.knots[k];
        if x1 == x {
            return Ok(y1.clone());
        }
        let (x0, y0) = &self.knots[k - 1];
        Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    fn slopes(&self) -> impl Iterator<Item = Rational> + '_ {
        self.knots
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
    }

    /// Preimage `f⁻¹(y)` as an interval union, possibly empty.
    pub fn preimage(&self, y: &Rational) -> IntervalUnion {
        let mut pieces = Vec::new();
        for w in self.knots.windows(2) {
            let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
            if y0 == y1 {
                if y0 == y {
                    pieces.push((x0.clone(), x1.clone()));
                }
            } else if rational::min_of(y0, y1) <= y && y <= rational::max_of(y0, y1) {
                let x = x0 + (x1 - x0) * (y - y0) / (y1 - y0);
                pieces.push((x.clone(), x));
            }
        }
        if pieces.is_empty() {
            IntervalUnion::empty()
        } else {
            IntervalUnion::canonicalize(pieces).expect("well-formed pieces")
        }
    }
}

impl From<&Reparam> for PlMap {
    fn from(t: &Reparam) -> Self {
        PlMap {
            knots: t.knots().to_vec(),
        }
    }
}

impl Serialize for PlMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            #[serde(with = "rational::serde_pairs")]
            knots: &'a Vec<(Rational, Rational)>,
        }
        Wire { knots: &self.knots }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            #[serde(with = "rational::serde_pairs")]
            knots: Vec<(Rational, Rational)>,
        }
        let w = Wire::deserialize(d)?;
        PlMap::new(w.knots).map_err(serde::de::Error::custom)
    }
}

/// Exact image `f(A)`. The image of each interval is `[min, max]` of `f`
/// over its endpoints and the knots inside it.
pub fn pl_image(f: &PlMap, a: &IntervalUnion) -> Result<IntervalUnion> {
    if a.is_empty() {
        return Err(Error::EmptyUnion);
    }
    if !a.within_unit_interval() {
        return Err(Error::OutsideUnitInterval);
    }
    let mut pieces = Vec::with_capacity(a.len());
    for (lo, hi) in a.intervals() {
        let inner = f
            .knots
            .iter()
            .filter(|(x, _)| lo < x && x < hi)
            .map(|(_, y)| y.clone());
        let values: Vec<Rational> = [f.eval(lo)?, f.eval(hi)?]
            .into_iter()
            .chain(inner)
            .collect();
        let min = values.iter().min().expect("non-empty").clone();
        let max = values.iter().max().expect("non-empty").clone();
        pieces.push((min, max));
    }
    IntervalUnion::canonicalize(pieces)
}

/// Zadeh's extension `f̃(u)`, computed cut by cut: `[f̃(u)]_α = f([u]_α)`.
pub fn zadeh_extend(f: &PlMap, u: &StepFuzzySet) -> Result<StepFuzzySet> {
    let levels = u
        .levels()
        .iter()
        .map(|l| {
            Ok(Level {
                alpha: l.alpha.clone(),
                cut: pl_image(f, &l.cut)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    StepFuzzySet::new(levels, pl_image(f, u.support())?)
}

/// Zadeh's extension evaluated from its pointwise definition:
/// `sup { u(z) : f(z) = x }`, or `0` when `x` has no preimage.
pub fn zadeh_pointwise(f: &PlMap, u: &StepFuzzySet, x: &Rational) -> Rational {
    let pre = f.preimage(x);
    if pre.is_empty() {
        return Rational::zero();
    }
    // u is upper semicontinuous and the preimage compact, so the sup is the
    // highest level whose cut meets the preimage.
    u.levels()
        .iter()
        .rev()
        .find(|l| l.cut.intersects(&pre))
        .map(|l| l.alpha.clone())
        .unwrap_or_else(Rational::zero)
}

/// The union lift `F(u)` with `[F(u)]_α = ⋃_k f_k([u]_α)`.
pub fn union_extension(fs: &[PlMap], u: &StepFuzzySet) -> Result<StepFuzzySet> {
    let (first, rest) = fs.split_first().ok_or(Error::NoMaps)?;
    let mut acc = zadeh_extend(first, u)?;
    for f in rest {
        let next = zadeh_extend(f, u)?;
        let levels = acc
            .levels()
            .iter()
            .zip(next.levels())
            .map(|(a, b)| Level {
                alpha: a.alpha.clone(),
                cut: a.cut.union(&b.cut),
            })
            .collect();
        acc = StepFuzzySet::new(levels, acc.support().union(next.support()))?;
    }
    Ok(acc)
}

/// Largest absolute slope over the pieces of `f`.
pub fn lipschitz_constant(f: &PlMap) -> Rational {
    f.slopes()
        .map(|s| s.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RatioMetric {
    Dinf,
    D0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRatio {
    pub index: usize,
    pub before: Rational,
    pub after: Rational,
    /// `after / before`; `None` when `before = 0` (pair skipped).
    pub ratio: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    pub metric: RatioMetric,
    pub lipschitz: Vec<Rational>,
    pub pairs: Vec<PairRatio>,
    pub max_ratio: Option<Rational>,
    pub witness_pair: Option<usize>,
    pub skipped: Vec<usize>,
}

impl ContractionReport {
    /// Some pair keeps its distance or grows, so no factor below 1 works.
    pub fn refutes_contraction(&self) -> bool {
        self.max_ratio
            .as_ref()
            .is_some_and(|r| *r >= Rational::one())
    }
}

impl Serialize for ContractionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Pair {
            index: usize,
            before: String,
            after: String,
            ratio: Option<String>,
        }
        let mut st = s.serialize_struct("ContractionReport", 7)?;
        st.serialize_field("metric", &self.metric)?;
        st.serialize_field(
            "lipschitz",
            &self
                .lipschitz
                .iter()
                .map(rational::format)
                .collect::<Vec<_>>(),
        )?;
        st.serialize_field(
            "pairs",
            &self
                .pairs
                .iter()
                .map(|p| Pair {
                    index: p.index,
                    before: rational::format(&p.before),
                    after: rational::format(&p.after),
                    ratio: p.ratio.as_ref().map(rational::format),
                })
                .collect::<Vec<_>>(),
        )?;
        st.serialize_field("max_ratio", &self.max_ratio.as_ref().map(rational::format))?;
        st.serialize_field("witness_pair", &self.witness_pair)?;
        st.serialize_field("skipped", &self.skipped)?;
        st.serialize_field("refutes_contraction", &self.refutes_contraction())?;
        st.end()
    }
}

/// Ratios `distance(F u, F v) / distance(u, v)` for the lift of `fs`
/// (Zadeh's extension for one map, the union lift for several).
pub fn contraction_ratio_report(
    fs: &[PlMap],
    pairs: &[(StepFuzzySet, StepFuzzySet)],
    metric: RatioMetric,
) -> Result<ContractionReport> {
    if fs.is_empty() {
        return Err(Error::NoMaps);
    }
    let lipschitz: Vec<Rational> = fs.iter().map(lipschitz_constant).collect();
    if let Some((index, l)) = lipschitz
        .iter()
        .enumerate()
        .find(|(_, l)| **l >= Rational::one())
    {
        return Err(Error::NotAContraction {
            index,
            constant: rational::format(l),
        });
    }
    let distance = |a: &StepFuzzySet, b: &StepFuzzySet| -> Result<Rational> {
        match metric {
            RatioMetric::Dinf => level_metric_dinf(a, b),
            RatioMetric::D0 => Ok(skorokhod_d0(a, b)?.lower),
        }
    };

    let mut report = ContractionReport {
        metric,
        lipschitz,
        pairs: Vec::with_capacity(pairs.len()),
        max_ratio: None,
        witness_pair: None,
        skipped: Vec::new(),
    };
    for (index, (u, v)) in pairs.iter().enumerate() {
        let before = distance(u, v)?;
        let after = distance(&union_extension(fs, u)?, &union_extension(fs, v)?)?;
        let ratio = if before.is_zero() {
            report.skipped.push(index);
            None
        } else {
            Some(&after / &before)
        };
        if let Some(r) = &ratio {
            if report.max_ratio.as_ref().is_none_or(|m| r > m) {
                report.max_ratio = Some(r.clone());
                report.witness_pair = Some(index);
            }
        }
        report.pairs.push(PairRatio {
            index,
            before,
            after,
            ratio,
        });
    }
    Ok(report)
}
