//! Evaluation of continuous-score binary classifiers through the exact
//! correspondence between empirical ROC and Kolmogorov-Smirnov curves.
//!
//! Both curves are built from one ranking of the sample and are images
//! of each other under a unit-determinant linear map parameterized by
//! class prevalence, so their areas satisfy `auc_roc = 0.5 + auc_ks`
//! exactly. The crate leans on that throughout:
//!
//! - [`curves`] turns a scored, labeled sample into tie-aware ROC and KS
//!   polylines whose vertices carry exact integer provenance.
//! - [`transform`] holds the KS-to-ROC map, its inverse, determinant,
//!   and rotation / scaling / shear decomposition.
//! - [`metrics`] computes exact trapezoid areas, the identity residual,
//!   the signed KS maximum with its ROC twins, the Gini coefficient, and
//!   a brute-force pairwise AUC used as an independent cross-check.
//! - [`averaging`] averages fold KS curves at fixed quantiles with
//!   vertical error bars and projects mean and bars into ROC space.
//! - [`segopt`] reorders monotone segments of a variable's KS curve to
//!   maximize its KS statistic, emitting a replayable mapping table.
//! - [`synth`] generates deterministic ideal, shuffled, and two-Gaussian
//!   samples for tests and experiments.

pub mod averaging;
pub mod curves;
pub mod error;
pub mod metrics;
pub mod segopt;
pub mod synth;
pub mod transform;

pub use averaging::{
    average_ks_curves, project_average_to_roc, vertical_average_roc, AveragedKsCurve,
    AveragedRocCurve, ProjectedRocBand,
};
pub use curves::{
    build_ks, build_roc, rank_and_group, tally_classes, ClassCounts, ClassLabel, KsCurve,
    KsVertex, LabeledSample, RocCurve, RocVertex, TieGroup,
};
pub use error::{EvalError, Result};
pub use metrics::{
    auc_ks, auc_pairwise_oracle, auc_roc, gini, max_ks2, max_ks2_projection, mvd,
    verify_identity, AreaReport, PointMetric,
};
pub use segopt::{
    find_monotone_segments, reorder_for_max_ks, MonotoneSegment, SegmentDirection,
    SegmentReordering, ValueBand,
};
pub use synth::{gen_binormal, gen_ideal, gen_random, BinormalSpec};
pub use transform::{
    apply_to_point, decompose, determinant, invert_point, make_transform, KsRocTransform,
    TransformDecomposition,
};
