//! Exact distances between step fuzzy sets on `[0, 1]` and the Zadeh
//! extension of piecewise-linear maps.
//!
//! All arithmetic is over arbitrary-precision rationals. A step fuzzy set is
//! stored as finitely many levels `0 < α_1 < … < α_m = 1` with the
//! `α`-cut constant on each band `(α_{k−1}, α_k]`, plus its support.

pub mod counterexample;
pub mod dynamics;
pub mod error;
pub mod fuzzy;
pub mod interval;
pub mod metrics;
pub mod rational;

pub use error::{Error, Result};
pub use fuzzy::{Diagnostic, Level, RawFuzzySet, StepFuzzySet};
pub use interval::IntervalUnion;
pub use rational::Rational;
