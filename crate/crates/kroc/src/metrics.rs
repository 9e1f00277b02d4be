//! Area-based and single-point performance metrics over the curves.
//!
//! Both curves are polylines, so the trapezoid rule gives their true
//! areas, not an approximation. Areas are accumulated as exact integer
//! numerators over a fixed denominator and divided once at the end,
//! which keeps the identity `auc_roc = 0.5 + auc_ks` good to the last
//! bit instead of drifting with the sample size.
//!
//! `max_ks2` is the signed maximum of y, not of |y|; a classifier that
//! ranks worse than chance everywhere reports a non-positive value.
//! Plateau maxima resolve to the smallest rank.

use std::f64::consts::SQRT_2;

use crate::curves::{
    build_ks, build_roc, exact_ratio, tally_classes, y_numerator, ClassLabel, KsCurve,
    LabeledSample, RocCurve,
};
use crate::error::Result;

/// A metric value bound to the rank and population fraction where it
/// occurs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMetric {
    pub value: f64,
    /// Cumulative example count of the vertex attaining the value.
    pub rank: u64,
    /// Population fraction `rank / n` at that vertex.
    pub x: f64,
}

/// Both areas, the Gini coefficient, and the residual of the identity
/// `auc_roc - 0.5 - auc_ks`.
///
/// The residual is reported, never asserted, so callers can surface it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub auc_roc: f64,
    pub auc_ks: f64,
    pub gini: f64,
    pub identity_residual: f64,
}

/// Integer numerator of the ROC area over `2 * n_target * n_complement`.
fn roc_area_numerator(curve: &RocCurve) -> i128 {
    let mut num = 0i128;
    for pair in curve.vertices().windows(2) {
        let du = pair[1].cum_complement as i128 - pair[0].cum_complement as i128;
        let vsum = pair[0].cum_target as i128 + pair[1].cum_target as i128;
        num += du * vsum;
    }
    num
}

/// Integer numerator of the KS area over `2 * n * n_target * n_complement`.
fn ks_area_numerator(curve: &KsCurve) -> i128 {
    let counts = curve.counts();
    let mut num = 0i128;
    for pair in curve.vertices().windows(2) {
        let dx = pair[1].rank as i128 - pair[0].rank as i128;
        let ysum = y_numerator(pair[0].cum_target, pair[0].cum_complement, counts)
            + y_numerator(pair[1].cum_target, pair[1].cum_complement, counts);
        num += dx * ysum;
    }
    num
}

/// Exact area under the ROC polyline, in [0, 1].
pub fn auc_roc(curve: &RocCurve) -> f64 {
    let counts = curve.counts();
    let den = 2 * counts.n_target as i128 * counts.n_complement as i128;
    exact_ratio(roc_area_numerator(curve), den)
}

/// Exact signed area under the KS polyline, in [-0.5, 0.5].
pub fn auc_ks(curve: &KsCurve) -> f64 {
    let counts = curve.counts();
    let den = 2 * counts.n as i128 * counts.n_target as i128 * counts.n_complement as i128;
    exact_ratio(ks_area_numerator(curve), den)
}

/// Build both curves from one sample and report both areas plus the
/// residual of `auc_roc = 0.5 + auc_ks`.
pub fn verify_identity(sample: &LabeledSample) -> Result<AreaReport> {
    let roc = build_roc(sample)?;
    let ks = build_ks(sample)?;
    let auc_roc = auc_roc(&roc);
    let auc_ks = auc_ks(&ks);
    Ok(AreaReport {
        auc_roc,
        auc_ks,
        gini: gini(auc_roc),
        identity_residual: auc_roc - 0.5 - auc_ks,
    })
}

/// Signed maximum of y over the KS curve, ties broken by smallest rank.
///
/// This is the two-sample Kolmogorov-Smirnov distance between the class
/// score CDFs when the classifier ranks better than chance somewhere.
pub fn max_ks2(curve: &KsCurve) -> PointMetric {
    let counts = curve.counts();
    let den = counts.n_target as i128 * counts.n_complement as i128;
    let mut best = &curve.vertices()[0];
    let mut best_num = y_numerator(best.cum_target, best.cum_complement, counts);
    for vtx in &curve.vertices()[1..] {
        let num = y_numerator(vtx.cum_target, vtx.cum_complement, counts);
        if num > best_num {
            best = vtx;
            best_num = num;
        }
    }
    PointMetric {
        value: exact_ratio(best_num, den),
        rank: best.rank,
        x: best.x,
    }
}

/// Maximum vertical distance `v - u` from the ROC curve to the chance
/// diagonal, ties broken by smallest rank.
///
/// Matches [`max_ks2`] of the same sample's KS curve in value and rank.
pub fn mvd(curve: &RocCurve) -> PointMetric {
    let counts = curve.counts();
    let den = counts.n_target as i128 * counts.n_complement as i128;
    let mut best = &curve.vertices()[0];
    let mut best_num = y_numerator(best.cum_target, best.cum_complement, counts);
    for vtx in &curve.vertices()[1..] {
        let num = y_numerator(vtx.cum_target, vtx.cum_complement, counts);
        if num > best_num {
            best = vtx;
            best_num = num;
        }
    }
    PointMetric {
        value: exact_ratio(best_num, den),
        rank: best.rank,
        x: exact_ratio(best.rank as i128, counts.n as i128),
    }
}

/// Maximum perpendicular distance from ROC vertices to the diagonal
/// `u = v`, which is `mvd / sqrt(2)` at the same rank.
pub fn max_ks2_projection(curve: &RocCurve) -> PointMetric {
    let m = mvd(curve);
    PointMetric {
        value: m.value / SQRT_2,
        rank: m.rank,
        x: m.x,
    }
}

/// Gini coefficient `2 * auc_roc - 1`.
pub fn gini(auc_roc: f64) -> f64 {
    2.0 * auc_roc - 1.0
}

/// Brute-force AUC: the fraction of (target, complement) score pairs the
/// target wins, counting ties as one half.
///
/// Runs in O(n_target * n_complement) on purpose; it is the independent
/// check for the trapezoid route, not a fast path.
pub fn auc_pairwise_oracle(sample: &LabeledSample) -> Result<f64> {
    let counts = tally_classes(sample)?;
    let mut targets = Vec::with_capacity(counts.n_target as usize);
    let mut complements = Vec::with_capacity(counts.n_complement as usize);
    for &(score, label) in sample.entries() {
        match label {
            ClassLabel::Target => targets.push(score),
            ClassLabel::Complement => complements.push(score),
        }
    }
    // Count in half units so ties stay exact integers.
    let mut half_units = 0i128;
    for &t in &targets {
        for &c in &complements {
            if t > c {
                half_units += 2;
            } else if t == c {
                half_units += 1;
            }
        }
    }
    let den = 2 * counts.n_target as i128 * counts.n_complement as i128;
    Ok(exact_ratio(half_units, den))
}
