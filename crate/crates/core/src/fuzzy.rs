//! Step fuzzy sets: upper semicontinuous fuzzy sets on the real line with
//! finitely many membership values, stored as a descending chain of cuts.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::rational::{self, Rational};

/// One band of a step fuzzy set: the cut for every level in
/// `(previous alpha, alpha]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Level {
    pub alpha: Rational,
    pub cut: IntervalUnion,
}

/// A fuzzy set with finitely many membership values.
///
/// Levels are strictly increasing in `alpha`, the last one is `alpha = 1`,
/// cuts are non-empty and nested (`cut[k+1] ⊆ cut[k]`), and the support
/// contains the first cut. The cut map is left-continuous in `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepFuzzySet {
    levels: Vec<Level>,
    support: IntervalUnion,
}

/// Wire form of a step fuzzy set; cuts may be non-canonical here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFuzzySet {
    #[serde(with = "rational::serde_pairs")]
    pub support: Vec<(Rational, Rational)>,
    pub levels: Vec<RawLevel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawLevel {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "rational::serde_pairs")]
    pub cut: Vec<(Rational, Rational)>,
}

/// One violated invariant. Level indices are 0-based positions in `levels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    NoLevels,
    ReversedInterval { level: Option<usize>, index: usize },
    EmptyCut { level: usize },
    NonCanonicalCut { level: usize },
    EmptySupport,
    NonCanonicalSupport,
    AlphaOutOfRange { level: usize },
    AlphaNotIncreasing { level: usize },
    MissingTopLevel,
    NotNested { level: usize },
    SupportMissesFirstCut,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        use Diagnostic::*;
        match self {
            NoLevels => write!(f, "no levels"),
            ReversedInterval {
                level: Some(k),
                index,
            } => {
                write!(f, "level {k}: interval {index} has lo > hi")
            }
            ReversedInterval { level: None, index } => {
                write!(f, "support: interval {index} has lo > hi")
            }
            EmptyCut { level } => write!(f, "level {level}: empty cut"),
            NonCanonicalCut { level } => write!(f, "level {level}: cut is not canonical"),
            EmptySupport => write!(f, "empty support"),
            NonCanonicalSupport => write!(f, "support is not canonical"),
            AlphaOutOfRange { level } => write!(f, "level {level}: alpha outside (0, 1]"),
            AlphaNotIncreasing { level } => {
                write!(f, "level {level}: alpha not strictly above previous level")
            }
            MissingTopLevel => write!(f, "last level is not alpha = 1"),
            NotNested { level } => {
                write!(
                    f,
                    "level {level}: cut is not contained in the cut of level {}",
                    level - 1
                )
            }
            SupportMissesFirstCut => write!(f, "support does not contain the first cut"),
        }
    }
}

/// Reports every violated invariant of `raw`. Empty iff valid.
pub fn validate(raw: &RawFuzzySet) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let zero = Rational::zero();
    let one = Rational::one();

    let support = check_pairs(&raw.support, None, &mut out);
    match &support {
        None => {}
        Some(s) if s.is_empty() => out.push(Diagnostic::EmptySupport),
        Some(_) if !IntervalUnion::is_canonical(&raw.support) => {
            out.push(Diagnostic::NonCanonicalSupport)
        }
        _ => {}
    }

    if raw.levels.is_empty() {
        out.push(Diagnostic::NoLevels);
        return out;
    }

    let mut cuts = Vec::with_capacity(raw.levels.len());
    for (k, level) in raw.levels.iter().enumerate() {
        if level.alpha <= zero || level.alpha > one {
            out.push(Diagnostic::AlphaOutOfRange { level: k });
        }
        if k > 0 && level.alpha <= raw.levels[k - 1].alpha {
            out.push(Diagnostic::AlphaNotIncreasing { level: k });
        }
        let cut = check_pairs(&level.cut, Some(k), &mut out);
        match &cut {
            Some(c) if c.is_empty() => out.push(Diagnostic::EmptyCut { level: k }),
            Some(_) if !IntervalUnion::is_canonical(&level.cut) => {
                out.push(Diagnostic::NonCanonicalCut { level: k })
            }
            _ => {}
        }
        cuts.push(cut);
    }
    if raw.levels.last().map(|l| &l.alpha) != Some(&one) {
        out.push(Diagnostic::MissingTopLevel);
    }
    for k in 1..cuts.len() {
        if let (Some(outer), Some(inner)) = (&cuts[k - 1], &cuts[k]) {
            if !inner.is_empty() && !outer.is_empty() && !inner.is_subset(outer) {
                out.push(Diagnostic::NotNested { level: k });
            }
        }
    }
    if let (Some(s), Some(Some(first))) = (&support, cuts.first()) {
        if !s.is_empty() && !first.is_empty() && !first.is_subset(s) {
            out.push(Diagnostic::SupportMissesFirstCut);
        }
    }
    out
}

fn check_pairs(
    pairs: &[(Rational, Rational)],
    level: Option<usize>,
    out: &mut Vec<Diagnostic>,
) -> Option<IntervalUnion> {
    let mut ok = true;
    for (index, (lo, hi)) in pairs.iter().enumerate() {
        if lo > hi {
            out.push(Diagnostic::ReversedInterval { level, index });
            ok = false;
        }
    }
    if !ok {
        return None;
    }
    Some(
        IntervalUnion::canonicalize(pairs.iter().cloned())
            .unwrap_or_else(|_| IntervalUnion::empty()),
    )
}

impl StepFuzzySet {
    /// Builds and validates. Cuts and support are already canonical.
    pub fn new(levels: Vec<Level>, support: IntervalUnion) -> Result<Self> {
        let raw = RawFuzzySet {
            support: support.intervals().to_vec(),
            levels: levels
                .iter()
                .map(|l| RawLevel {
                    alpha: l.alpha.clone(),
                    cut: l.cut.intervals().to_vec(),
                })
                .collect(),
        };
        let diagnostics = validate(&raw);
        if !diagnostics.is_empty() {
            return Err(Error::InvalidFuzzySet(diagnostics));
        }
        Ok(Self { levels, support })
    }

    /// Builds with the support set to the first cut, which is the closure
    /// of the union of all cuts.
    pub fn from_levels(levels: Vec<Level>) -> Result<Self> {
        let support = levels
            .first()
            .map(|l| l.cut.clone())
            .unwrap_or_else(IntervalUnion::empty);
        Self::new(levels, support)
    }

    /// Canonicalizes every cut, then validates.
    pub fn from_raw(raw: &RawFuzzySet) -> Result<Self> {
        let canon = |pairs: &[(Rational, Rational)]| -> Result<IntervalUnion> {
            if pairs.is_empty() {
                Ok(IntervalUnion::empty())
            } else {
                IntervalUnion::canonicalize(pairs.iter().cloned())
            }
        };
        let tidy = RawFuzzySet {
            support: canon(&raw.support)
                .map(|u| u.intervals().to_vec())
                .unwrap_or_else(|_| raw.support.clone()),
            levels: raw
                .levels
                .iter()
                .map(|l| RawLevel {
                    alpha: l.alpha.clone(),
                    cut: canon(&l.cut)
                        .map(|u| u.intervals().to_vec())
                        .unwrap_or_else(|_| l.cut.clone()),
                })
                .collect(),
        };
        let diagnostics = validate(&tidy);
        if !diagnostics.is_empty() {
            return Err(Error::InvalidFuzzySet(diagnostics));
        }
        let levels = tidy
            .levels
            .into_iter()
            .map(|l| {
                Ok(Level {
                    alpha: l.alpha,
                    cut: IntervalUnion::canonicalize(l.cut)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            levels,
            support: IntervalUnion::canonicalize(tidy.support)?,
        })
    }

    pub fn to_raw(&self) -> RawFuzzySet {
        RawFuzzySet {
            support: self.support.intervals().to_vec(),
            levels: self
                .levels
                .iter()
                .map(|l| RawLevel {
                    alpha: l.alpha.clone(),
                    cut: l.cut.intervals().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawFuzzySet = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_raw(&raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("serializable")
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn support(&self) -> &IntervalUnion {
        &self.support
    }

    /// Level breakpoints `alpha_1 < … < alpha_m = 1`.
    pub fn breakpoints(&self) -> impl Iterator<Item = &Rational> {
        self.levels.iter().map(|l| &l.alpha)
    }

    /// Index of the band `(alpha_{k-1}, alpha_k]` containing `alpha > 0`.
    pub fn band_of(&self, alpha: &Rational) -> usize {
        self.levels.partition_point(|l| l.alpha < *alpha)
    }

    /// The cut `{x : u(x) >= alpha}`; `alpha = 0` yields the support.
    pub fn alpha_cut(&self, alpha: &Rational) -> Result<&IntervalUnion> {
        if *alpha < Rational::zero() || *alpha > Rational::one() {
            return Err(Error::LevelOutOfRange(rational::format(alpha)));
        }
        if alpha.is_zero() {
            return Ok(&self.support);
        }
        Ok(&self.levels[self.band_of(alpha)].cut)
    }

    /// Membership degree of `x`: the highest level whose cut contains it.
    pub fn membership(&self, x: &Rational) -> Rational {
        self.levels
            .iter()
            .rev()
            .find(|l| l.cut.contains(x))
            .map(|l| l.alpha.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Whether the stored support is exactly the closure of the positive
    /// set (the first cut), rather than a strict superset of it.
    pub fn has_tight_support(&self) -> bool {
        self.support == self.levels[0].cut
    }

    /// Same fuzzy set with consecutive duplicate cuts merged into one band.
    pub fn compacted(&self) -> StepFuzzySet {
        // Each merged band ends at the highest alpha carrying its cut.
        let mut levels: Vec<Level> = Vec::with_capacity(self.levels.len());
        for (k, level) in self.levels.iter().enumerate() {
            let next_same = self.levels.get(k + 1).is_some_and(|n| n.cut == level.cut);
            if !next_same {
                levels.push(level.clone());
            }
        }
        StepFuzzySet {
            levels,
            support: self.support.clone(),
        }
    }

    pub(crate) fn with_parts_unchecked(levels: Vec<Level>, support: IntervalUnion) -> Self {
        debug_assert!(StepFuzzySet::new(levels.clone(), support.clone()).is_ok());
        Self { levels, support }
    }
}

impl fmt::Display for StepFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        writeln!(f, "support: {}", self.support)?;
        for l in &self.levels {
            writeln!(f, "  alpha ≤ {}: {}", rational::format(&l.alpha), l.cut)?;
        }
        Ok(())
    }
}
