//! Serializable evaluation report.
//!
//! JSON numbers are emitted in shortest round-trip form, so every value
//! carries full f64 precision and residuals near 1e-8 stay observable.

use serde::Serialize;

use kroc::{
    auc_ks, auc_roc, build_ks, build_roc, gini, max_ks2, max_ks2_projection, mvd, ClassCounts,
    KsCurve, LabeledSample, PointMetric, Result, RocCurve,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct CountsOut {
    pub n: u64,
    pub n_target: u64,
    pub n_complement: u64,
}

#[derive(Serialize)]
pub struct PointOut {
    pub value: f64,
    pub rank: u64,
    pub x: f64,
}

#[derive(Serialize)]
pub struct RocPointOut {
    pub u: f64,
    pub v: f64,
    pub rank: u64,
}

#[derive(Serialize)]
pub struct KsPointOut {
    pub x: f64,
    pub y: f64,
    pub rank: u64,
}

/// Full evaluation of one sample: counts, areas, point metrics, and both
/// curve polylines.
#[derive(Serialize)]
pub struct EvalReport {
    pub schema: u32,
    pub counts: CountsOut,
    pub auc_roc: f64,
    pub auc_ks: f64,
    pub gini: f64,
    pub identity_residual: f64,
    pub max_ks2: PointOut,
    pub mvd: PointOut,
    pub max_ks2_projection: PointOut,
    pub roc_curve: Vec<RocPointOut>,
    pub ks_curve: Vec<KsPointOut>,
}

impl From<PointMetric> for PointOut {
    fn from(m: PointMetric) -> Self {
        PointOut {
            value: m.value,
            rank: m.rank,
            x: m.x,
        }
    }
}

impl From<ClassCounts> for CountsOut {
    fn from(c: ClassCounts) -> Self {
        CountsOut {
            n: c.n,
            n_target: c.n_target,
            n_complement: c.n_complement,
        }
    }
}

pub struct Evaluation {
    pub report: EvalReport,
    pub roc: RocCurve,
    pub ks: KsCurve,
}

pub fn evaluate(sample: &LabeledSample) -> Result<Evaluation> {
    let roc = build_roc(sample)?;
    let ks = build_ks(sample)?;
    let area_roc = auc_roc(&roc);
    let area_ks = auc_ks(&ks);
    let report = EvalReport {
        schema: SCHEMA_VERSION,
        counts: roc.counts().into(),
        auc_roc: area_roc,
        auc_ks: area_ks,
        gini: gini(area_roc),
        identity_residual: area_roc - 0.5 - area_ks,
        max_ks2: max_ks2(&ks).into(),
        mvd: mvd(&roc).into(),
        max_ks2_projection: max_ks2_projection(&roc).into(),
        roc_curve: roc
            .vertices()
            .iter()
            .map(|vtx| RocPointOut {
                u: vtx.u,
                v: vtx.v,
                rank: vtx.rank,
            })
            .collect(),
        ks_curve: ks
            .vertices()
            .iter()
            .map(|vtx| KsPointOut {
                x: vtx.x,
                y: vtx.y,
                rank: vtx.rank,
            })
            .collect(),
    };
    Ok(Evaluation { report, roc, ks })
}
