//! Averaging KS curves across folds or ensemble members.
//!
//! The KS curve has the score rank explicit on the abscissa, so folds can
//! be averaged by sampling every fold at a fixed quantile grid and taking
//! the per-quantile mean. Error bars live on the vertical axis only; the
//! linear KS-to-ROC map then carries both the mean polyline and the bars
//! into ROC coordinates in one step. For a vertical bar of half-height
//! `e` the projected components are `(du, dv) = (-p*e, (1-p)*e)`.
//!
//! Folds may have different prevalences; the projection uses the pooled
//! prevalence `sum(n_target) / sum(n)`. Error bars are standard errors of
//! the mean (sample standard deviation over sqrt(k)).
//!
//! [`vertical_average_roc`] averages the ROC curves directly at a fixed
//! false-positive-rate grid. It exists as the baseline to compare the KS
//! route against, nothing in this crate builds on it.

use crate::curves::{ClassCounts, KsCurve, RocCurve};
use crate::error::{EvalError, Result};
use crate::transform::{apply_to_point, make_transform};

/// Per-quantile mean and standard error of k KS curves.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedKsCurve {
    /// Strictly increasing abscissa quantiles, from 0 to 1 inclusive.
    pub grid: Vec<f64>,
    /// Mean of the fold curves at each quantile.
    pub mean_y: Vec<f64>,
    /// Standard error of the mean at each quantile.
    pub stderr_y: Vec<f64>,
    /// Number of folds averaged.
    pub fold_count: usize,
    /// Class counts summed over the folds.
    pub pooled_counts: ClassCounts,
}

impl AveragedKsCurve {
    /// Trapezoid area under the mean polyline.
    pub fn mean_area(&self) -> f64 {
        let mut area = 0.0;
        for j in 1..self.grid.len() {
            area += (self.grid[j] - self.grid[j - 1]) * (self.mean_y[j] + self.mean_y[j - 1])
                / 2.0;
        }
        area
    }
}

/// The averaged curve and its error bars expressed in ROC coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedRocBand {
    /// The KS abscissa quantiles the band is parameterized by.
    pub grid: Vec<f64>,
    /// Mean point abscissas (false-positive rate).
    pub u: Vec<f64>,
    /// Mean point ordinates (true-positive rate).
    pub v: Vec<f64>,
    /// Horizontal error component `-p * e` per quantile.
    pub du: Vec<f64>,
    /// Vertical error component `(1 - p) * e` per quantile.
    pub dv: Vec<f64>,
    /// Pooled prevalence the projection used.
    pub prevalence: f64,
}

/// Mean of k ROC curves at a fixed false-positive-rate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedRocCurve {
    /// False-positive-rate grid, from 0 to 1 inclusive.
    pub grid: Vec<f64>,
    pub mean_v: Vec<f64>,
    pub stderr_y: Vec<f64>,
    pub fold_count: usize,
}

/// Equally spaced quantiles including both endpoints.
fn quantile_grid(grid_size: usize) -> Result<Vec<f64>> {
    if grid_size < 2 {
        return Err(EvalError::InvalidParameter(format!(
            "grid size must be at least 2, got {grid_size}"
        )));
    }
    let last = (grid_size - 1) as f64;
    Ok((0..grid_size).map(|j| j as f64 / last).collect())
}

/// Mean and standard error of the mean. The mean is computed relative to
/// the first value, so identical inputs yield an exactly zero spread.
fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let k = values.len();
    let shift = values[0];
    let mean = shift + values.iter().map(|y| y - shift).sum::<f64>() / k as f64;
    let ss: f64 = values.iter().map(|y| (y - mean) * (y - mean)).sum();
    let variance = ss / (k - 1) as f64;
    (mean, (variance / k as f64).sqrt())
}

/// Linear interpolation of a KS polyline at abscissa `q` in [0, 1].
fn interpolate_ks(curve: &KsCurve, q: f64) -> f64 {
    let vertices = curve.vertices();
    // x is strictly increasing; find the first vertex at or beyond q.
    let idx = vertices.partition_point(|vtx| vtx.x < q);
    if idx == 0 {
        return vertices[0].y;
    }
    if idx == vertices.len() {
        return vertices[vertices.len() - 1].y;
    }
    let (a, b) = (&vertices[idx - 1], &vertices[idx]);
    if b.x == q {
        return b.y;
    }
    a.y + (b.y - a.y) * (q - a.x) / (b.x - a.x)
}

/// Interpolation of a ROC polyline as a function of u. At a vertical run
/// (several vertices sharing one u) the topmost vertex wins.
fn interpolate_roc_upper(curve: &RocCurve, q: f64) -> f64 {
    let vertices = curve.vertices();
    // Index of the first vertex with u strictly beyond q.
    let idx = vertices.partition_point(|vtx| vtx.u <= q);
    if idx == 0 {
        return vertices[0].v;
    }
    if idx == vertices.len() {
        return vertices[vertices.len() - 1].v;
    }
    let (a, b) = (&vertices[idx - 1], &vertices[idx]);
    if a.u == q {
        return a.v;
    }
    a.v + (b.v - a.v) * (q - a.u) / (b.u - a.u)
}

/// Average k KS curves at `grid_size` equally spaced quantiles.
pub fn average_ks_curves(curves: &[KsCurve], grid_size: usize) -> Result<AveragedKsCurve> {
    if curves.len() < 2 {
        return Err(EvalError::InsufficientFolds(curves.len()));
    }
    let grid = quantile_grid(grid_size)?;
    let mut mean_y = Vec::with_capacity(grid.len());
    let mut stderr_y = Vec::with_capacity(grid.len());
    let mut fold_values = vec![0.0; curves.len()];
    for &q in &grid {
        for (slot, curve) in fold_values.iter_mut().zip(curves) {
            *slot = interpolate_ks(curve, q);
        }
        let (mean, stderr) = mean_and_stderr(&fold_values);
        mean_y.push(mean);
        stderr_y.push(stderr);
    }
    let mut pooled = ClassCounts {
        n: 0,
        n_target: 0,
        n_complement: 0,
    };
    for curve in curves {
        let c = curve.counts();
        pooled.n += c.n;
        pooled.n_target += c.n_target;
        pooled.n_complement += c.n_complement;
    }
    Ok(AveragedKsCurve {
        grid,
        mean_y,
        stderr_y,
        fold_count: curves.len(),
        pooled_counts: pooled,
    })
}

/// Carry an averaged KS curve and its error bars into ROC coordinates
/// with the pooled-prevalence transform.
pub fn project_average_to_roc(avg: &AveragedKsCurve) -> Result<ProjectedRocBand> {
    let t = make_transform(avg.pooled_counts)?;
    let p = t.prevalence();
    let len = avg.grid.len();
    let mut band = ProjectedRocBand {
        grid: avg.grid.clone(),
        u: Vec::with_capacity(len),
        v: Vec::with_capacity(len),
        du: Vec::with_capacity(len),
        dv: Vec::with_capacity(len),
        prevalence: p,
    };
    for j in 0..len {
        let (u, v) = apply_to_point(&t, (avg.grid[j], avg.mean_y[j]));
        let e = avg.stderr_y[j];
        band.u.push(u);
        band.v.push(v);
        // The added zero turns -0.0 into +0.0 for zero-width bars.
        band.du.push(-p * e + 0.0);
        band.dv.push((1.0 - p) * e);
    }
    Ok(band)
}

/// Average k ROC curves at `grid_size` equally spaced false-positive
/// rates. Baseline for comparison against the KS route.
pub fn vertical_average_roc(curves: &[RocCurve], grid_size: usize) -> Result<AveragedRocCurve> {
    if curves.len() < 2 {
        return Err(EvalError::InsufficientFolds(curves.len()));
    }
    let grid = quantile_grid(grid_size)?;
    let mut mean_v = Vec::with_capacity(grid.len());
    let mut stderr_y = Vec::with_capacity(grid.len());
    let mut fold_values = vec![0.0; curves.len()];
    for &q in &grid {
        for (slot, curve) in fold_values.iter_mut().zip(curves) {
            *slot = interpolate_roc_upper(curve, q);
        }
        let (mean, stderr) = mean_and_stderr(&fold_values);
        mean_v.push(mean);
        stderr_y.push(stderr);
    }
    Ok(AveragedRocCurve {
        grid,
        mean_v,
        stderr_y,
        fold_count: curves.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{build_ks, build_roc, LabeledSample};
    use crate::metrics::auc_ks;

    fn reference_ks() -> KsCurve {
        let scores: Vec<f64> = (1..=9).rev().map(|i| i as f64 / 10.0).collect();
        let sample =
            LabeledSample::from_binary_labels(&scores, &[1, 0, 0, 1, 0, 1, 0, 0, 0]).unwrap();
        build_ks(&sample).unwrap()
    }

    fn sample_from_labels(labels: &[u8]) -> LabeledSample {
        let scores: Vec<f64> = (0..labels.len()).map(|i| (labels.len() - i) as f64).collect();
        LabeledSample::from_binary_labels(&scores, labels).unwrap()
    }

    #[test]
    fn identical_folds_collapse_to_the_fold_curve() {
        let curve = reference_ks();
        for k in [2, 3, 5] {
            let folds = vec![curve.clone(); k];
            let avg = average_ks_curves(&folds, 10).unwrap();
            for (j, &q) in avg.grid.iter().enumerate() {
                assert_eq!(avg.mean_y[j], interpolate_ks(&curve, q));
                assert_eq!(avg.stderr_y[j], 0.0, "k = {k}, quantile {q}");
            }
        }
    }

    #[test]
    fn opposite_ideal_folds_cancel() {
        // Ideal triangle with apex (1/3, 1) and its reflection with apex
        // (1/3, -1); at x = 1/3 the fold values are {1, -1}.
        let ideal = build_ks(&sample_from_labels(&[1, 1, 1, 0, 0, 0, 0, 0, 0])).unwrap();
        let mirrored = build_ks(&sample_from_labels(&[0, 0, 0, 1, 1, 1, 1, 1, 1])).unwrap();
        let avg = average_ks_curves(&[ideal, mirrored], 4).unwrap();
        assert_eq!(avg.grid[1], 1.0 / 3.0);
        assert_eq!(avg.mean_y[1], 0.0);
        assert_eq!(avg.stderr_y[1], 1.0);
        // Pinned endpoints.
        assert_eq!((avg.mean_y[0], avg.stderr_y[0]), (0.0, 0.0));
        assert_eq!((avg.mean_y[3], avg.stderr_y[3]), (0.0, 0.0));
    }

    #[test]
    fn single_fold_is_rejected() {
        let err = average_ks_curves(&[reference_ks()], 10);
        assert_eq!(err, Err(EvalError::InsufficientFolds(1)));
        let roc = build_roc(&sample_from_labels(&[1, 0])).unwrap();
        assert_eq!(
            vertical_average_roc(&[roc], 10),
            Err(EvalError::InsufficientFolds(1))
        );
    }

    #[test]
    fn undersized_grid_is_rejected() {
        let folds = vec![reference_ks(), reference_ks()];
        assert!(average_ks_curves(&folds, 1).is_err());
    }

    #[test]
    fn projection_of_reference_quantile() {
        // Pooled prevalence stays 1/3 for two copies; the quantile
        // (2/3, 1/2) must land on the ROC vertex (1/2, 1) with zero bars.
        let folds = vec![reference_ks(), reference_ks()];
        let avg = average_ks_curves(&folds, 4).unwrap();
        let band = project_average_to_roc(&avg).unwrap();
        assert_eq!(band.grid[2], 2.0 / 3.0);
        assert!((band.u[2] - 0.5).abs() < 1e-12);
        assert!((band.v[2] - 1.0).abs() < 1e-12);
        assert_eq!((band.du[2], band.dv[2]), (0.0, 0.0));
    }

    #[test]
    fn zero_error_band_degenerates_to_the_mean_polyline() {
        let folds = vec![reference_ks(), reference_ks()];
        let avg = average_ks_curves(&folds, 11).unwrap();
        let band = project_average_to_roc(&avg).unwrap();
        for j in 0..band.grid.len() {
            assert_eq!(band.du[j], 0.0);
            assert_eq!(band.dv[j], 0.0);
        }
        // Band endpoints pin to (0,0) and (1,1).
        assert_eq!((band.u[0], band.v[0]), (0.0, 0.0));
        assert_eq!((band.u[10], band.v[10]), (1.0, 1.0));
    }

    #[test]
    fn projected_bar_components() {
        // Balanced pooled classes and a hand-set error of 0.1.
        let ideal = build_ks(&sample_from_labels(&[1, 1, 1, 0, 0, 0])).unwrap();
        let mirrored = build_ks(&sample_from_labels(&[0, 0, 0, 1, 1, 1])).unwrap();
        let mut avg = average_ks_curves(&[ideal, mirrored], 5).unwrap();
        assert_eq!(avg.pooled_counts.n_target, 6);
        assert_eq!(avg.pooled_counts.n_complement, 6);
        avg.stderr_y = vec![0.1; avg.grid.len()];
        let band = project_average_to_roc(&avg).unwrap();
        for j in 0..band.grid.len() {
            assert!((band.du[j] + 0.05).abs() < 1e-15);
            assert!((band.dv[j] - 0.05).abs() < 1e-15);
            // The vertical KS bar re-expressed in ROC coordinates.
            assert!((band.dv[j] - band.du[j] - 0.1).abs() < 1e-12);
        }
    }

    #[test]
    fn averaged_area_equals_mean_fold_area_on_shared_abscissas() {
        // Equal-size folds have vertices on multiples of 1/n, so a grid of
        // n + 1 points samples every chord exactly.
        let folds = [
            build_ks(&sample_from_labels(&[1, 0, 0, 1, 0, 1, 0, 0, 0])).unwrap(),
            build_ks(&sample_from_labels(&[0, 1, 1, 0, 0, 0, 1, 0, 0])).unwrap(),
            build_ks(&sample_from_labels(&[1, 1, 0, 0, 1, 0, 0, 0, 0])).unwrap(),
        ];
        let mean_fold_area = folds.iter().map(auc_ks).sum::<f64>() / folds.len() as f64;
        let avg = average_ks_curves(&folds, 10).unwrap();
        assert!((avg.mean_area() - mean_fold_area).abs() < 1e-10);
    }

    #[test]
    fn vertical_roc_averaging_matches_hand_interpolation() {
        // Ideal fold and all-tied diagonal fold: at u = 0.5 the fold
        // values are 1 and 0.5.
        let ideal = build_roc(&sample_from_labels(&[1, 0, 0, 0])).unwrap();
        let diagonal = build_roc(
            &LabeledSample::from_binary_labels(&[0.4, 0.4, 0.4, 0.4], &[1, 0, 1, 0]).unwrap(),
        )
        .unwrap();
        let avg = vertical_average_roc(&[ideal, diagonal], 3).unwrap();
        assert_eq!(avg.grid[1], 0.5);
        assert_eq!(avg.mean_v[1], 0.75);
    }

    #[test]
    fn vertical_roc_identical_folds() {
        let curve = build_roc(&sample_from_labels(&[1, 0, 1, 0, 0])).unwrap();
        let avg = vertical_average_roc(&[curve.clone(), curve.clone()], 6).unwrap();
        for (j, &q) in avg.grid.iter().enumerate() {
            assert_eq!(avg.mean_v[j], interpolate_roc_upper(&curve, q));
            assert_eq!(avg.stderr_y[j], 0.0);
        }
    }
}
