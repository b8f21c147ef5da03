use thiserror::Error;

use crate::fuzzy::Diagnostic;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("interval [{lo}, {hi}] has lo > hi")]
    ReversedInterval { lo: String, hi: String },

    #[error("empty interval union where a non-empty set is required")]
    EmptyUnion,

    #[error("level {0} is outside [0, 1]")]
    LevelOutOfRange(String),

    #[error("invalid fuzzy set: {}", join(.0))]
    InvalidFuzzySet(Vec<Diagnostic>),

    #[error("invalid reparameterization: {0}")]
    InvalidReparam(String),

    #[error("invalid piecewise-linear map: {0}")]
    InvalidMap(String),

    #[error("set is not contained in [0, 1]")]
    OutsideUnitInterval,

    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("no strictly increasing grid placement exists at resolution {0}")]
    GridTooCoarse(String),

    #[error("map {index} has Lipschitz constant {constant}, not a contraction")]
    NotAContraction { index: usize, constant: String },

    #[error("at least one map is required")]
    NoMaps,

    #[error("{0}")]
    Precondition(String),
}

fn join(d: &[Diagnostic]) -> String {
    d.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
