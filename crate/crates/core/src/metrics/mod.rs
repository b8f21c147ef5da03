//! Hausdorff, level-wise and Skorokhod distances.

pub mod certificate;
pub mod hausdorff;
pub mod level;
pub mod oracle;
pub mod reparam;
pub mod skorokhod;

pub use certificate::{d0_lower_bound_certificate, BandComparison, LowerBoundCertificate};
pub use hausdorff::{directed_hausdorff, hausdorff};
pub use level::{
    band_distances, level_metric_checked, level_metric_dinf, level_metric_open, DinfRoutes,
};
pub use oracle::{d0_bruteforce, OracleBracket};
pub use reparam::{apply_reparam, reparam_sup_deviation, Reparam};
pub use skorokhod::{
    epsilon_witness, reparam_objective, skorokhod_d0, skorokhod_d0_with, D0Options, DistanceReport,
    Method,
};
