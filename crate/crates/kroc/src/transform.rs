//! The linear map between KS coordinates (x, y) and ROC coordinates (u, v).
//!
//! For target-class prevalence `p = n_target / n` the change of
//! coordinates is
//!
//! ```text
//! | u |   | 1    -p  |   | x |
//! | v | = | 1   1 - p| . | y |
//! ```
//!
//! so `u = x - p*y` and `v = x + (1 - p)*y`. The determinant is 1 for
//! every prevalence, which is what makes the areas under the two curves
//! interchangeable: the map sends the KS baseline `y = 0` onto the ROC
//! chance diagonal `u = v` and preserves signed area, while lengths and
//! angles are not preserved.
//!
//! The map factors as rotation by pi/4 counterclockwise, anisotropic
//! scaling by sqrt(2) in x and 1/sqrt(2) in y, and a shear along x with
//! factor `1/2 - p`. The factors compose as matrices left to right,
//! `T = Rot * Scale * Shear`, so points are sheared first and rotated
//! last; that is the only order of these three factors whose product
//! equals `T`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, SQRT_2};

use crate::curves::ClassCounts;
use crate::error::{EvalError, Result};

/// The 2x2 change of coordinates from KS space to ROC space,
/// parameterized by target-class prevalence alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsRocTransform {
    prevalence: f64,
}

impl KsRocTransform {
    /// Build directly from a prevalence in (0, 1).
    pub fn from_prevalence(prevalence: f64) -> Result<Self> {
        if !(prevalence > 0.0 && prevalence < 1.0) {
            return Err(EvalError::DegeneratePrevalence(prevalence));
        }
        Ok(KsRocTransform { prevalence })
    }

    pub fn prevalence(&self) -> f64 {
        self.prevalence
    }

    /// Matrix entries in row-major order: `[[m11, m12], [m21, m22]]`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        let p = self.prevalence;
        [[1.0, -p], [1.0, 1.0 - p]]
    }
}

/// The rotation, scaling, and shear factors of the map, composing as
/// `Rot(angle) * Scale(sx, sy) * Shear_x(k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformDecomposition {
    /// Counterclockwise rotation angle, pi/4.
    pub rotation_angle: f64,
    /// Scale along x, sqrt(2).
    pub scale_x: f64,
    /// Scale along y, 1/sqrt(2).
    pub scale_y: f64,
    /// Shear factor along x, `1/2 - p`.
    pub shear_factor: f64,
}

impl TransformDecomposition {
    /// Multiply the three factors back into a single matrix.
    pub fn reconstruct(&self) -> [[f64; 2]; 2] {
        let (sin, cos) = self.rotation_angle.sin_cos();
        let rotation = [[cos, -sin], [sin, cos]];
        let scale = [[self.scale_x, 0.0], [0.0, self.scale_y]];
        let shear = [[1.0, self.shear_factor], [0.0, 1.0]];
        mat_mul(mat_mul(rotation, scale), shear)
    }
}

fn mat_mul(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// Build the transform for a sample's class counts.
pub fn make_transform(counts: ClassCounts) -> Result<KsRocTransform> {
    KsRocTransform::from_prevalence(counts.n_target as f64 / counts.n as f64)
}

/// Map a KS-space point (x, y) to ROC space (u, v).
pub fn apply_to_point(t: &KsRocTransform, ks_point: (f64, f64)) -> (f64, f64) {
    let (x, y) = ks_point;
    let p = t.prevalence();
    (x - p * y, x + (1.0 - p) * y)
}

/// Map a ROC-space point (u, v) back to KS space (x, y).
pub fn invert_point(t: &KsRocTransform, roc_point: (f64, f64)) -> (f64, f64) {
    let (u, v) = roc_point;
    let p = t.prevalence();
    ((1.0 - p) * u + p * v, v - u)
}

/// Determinant of the matrix, computed from its entries.
///
/// `(1 - p) + p` rounds to exactly 1.0 for every representable `p` in
/// (0, 1), so the result is exact, not merely close.
pub fn determinant(t: &KsRocTransform) -> f64 {
    let m = t.matrix();
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Split the transform into its rotation, scaling, and shear factors.
pub fn decompose(t: &KsRocTransform) -> TransformDecomposition {
    TransformDecomposition {
        rotation_angle: FRAC_PI_4,
        scale_x: SQRT_2,
        scale_y: FRAC_1_SQRT_2,
        shear_factor: 0.5 - t.prevalence(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(n_target: u64, n_complement: u64) -> ClassCounts {
        ClassCounts {
            n: n_target + n_complement,
            n_target,
            n_complement,
        }
    }

    #[test]
    fn matrix_for_one_third_prevalence() {
        let t = make_transform(counts(3, 6)).unwrap();
        let m = t.matrix();
        assert_eq!(m[0][0], 1.0);
        assert_eq!(m[1][0], 1.0);
        assert_eq!(m[0][1], -(3.0 / 9.0));
        assert!((m[1][1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_for_balanced_classes() {
        let t = make_transform(counts(5, 5)).unwrap();
        assert_eq!(t.matrix(), [[1.0, -0.5], [1.0, 0.5]]);
    }

    #[test]
    fn degenerate_counts_are_rejected() {
        assert_eq!(
            make_transform(counts(0, 6)),
            Err(EvalError::DegeneratePrevalence(0.0))
        );
        assert_eq!(
            make_transform(counts(6, 0)),
            Err(EvalError::DegeneratePrevalence(1.0))
        );
        assert!(KsRocTransform::from_prevalence(f64::NAN).is_err());
    }

    #[test]
    fn maps_reference_vertex_to_roc() {
        // Prevalence 1/3: the KS vertex (2/3, 1/2) is the rank-6 ROC
        // vertex (1/2, 1).
        let t = make_transform(counts(3, 6)).unwrap();
        let (u, v) = apply_to_point(&t, (2.0 / 3.0, 0.5));
        assert!((u - 0.5).abs() < 1e-12);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn maps_curve_endpoints_exactly() {
        for p in [0.1, 1.0 / 3.0, 0.5, 0.875, 0.999] {
            let t = KsRocTransform::from_prevalence(p).unwrap();
            assert_eq!(apply_to_point(&t, (1.0, 0.0)), (1.0, 1.0));
            assert_eq!(apply_to_point(&t, (p, 1.0)), (0.0, 1.0));
            assert_eq!(apply_to_point(&t, (0.0, 0.0)), (0.0, 0.0));
        }
    }

    #[test]
    fn inverse_is_the_closed_form() {
        let t = make_transform(counts(3, 6)).unwrap();
        let (x, y) = invert_point(&t, (0.5, 1.0));
        assert!((x - 2.0 / 3.0).abs() < 1e-12);
        assert!((y - 0.5).abs() < 1e-12);
        assert_eq!(invert_point(&t, (0.0, 0.0)), (0.0, 0.0));
        assert_eq!(invert_point(&t, (1.0, 1.0)), (1.0, 0.0));
    }

    #[test]
    fn round_trip_through_both_directions() {
        let t = KsRocTransform::from_prevalence(0.37).unwrap();
        for &q in &[(0.2, 0.1), (0.7, -0.3), (0.55, 0.48)] {
            let (u, v) = apply_to_point(&t, q);
            let (x, y) = invert_point(&t, (u, v));
            assert!((x - q.0).abs() < 1e-12);
            assert!((y - q.1).abs() < 1e-12);
        }
    }

    #[test]
    fn determinant_is_exactly_one() {
        for p in [1.0 / 3.0, 0.5, 0.999, 1e-9, 0.25000001, 0.7381926] {
            let t = KsRocTransform::from_prevalence(p).unwrap();
            assert_eq!(determinant(&t), 1.0, "p = {p}");
        }
    }

    #[test]
    fn decomposition_factors() {
        let t = make_transform(counts(3, 6)).unwrap();
        let d = decompose(&t);
        assert_eq!(d.rotation_angle, FRAC_PI_4);
        assert_eq!(d.scale_x, SQRT_2);
        assert_eq!(d.scale_y, FRAC_1_SQRT_2);
        assert!((d.shear_factor - 1.0 / 6.0).abs() < 1e-15);

        let balanced = KsRocTransform::from_prevalence(0.5).unwrap();
        assert_eq!(decompose(&balanced).shear_factor, 0.0);

        let quarter = KsRocTransform::from_prevalence(0.25).unwrap();
        assert_eq!(decompose(&quarter).shear_factor, 0.25);
    }

    #[test]
    fn decomposition_product_reproduces_the_matrix() {
        for p in [0.25, 1.0 / 3.0, 0.5, 0.9, 0.0317] {
            let t = KsRocTransform::from_prevalence(p).unwrap();
            let m = t.matrix();
            let r = decompose(&t).reconstruct();
            for i in 0..2 {
                for j in 0..2 {
                    assert!(
                        (m[i][j] - r[i][j]).abs() < 1e-12,
                        "entry ({i},{j}) for p = {p}: {} vs {}",
                        m[i][j],
                        r[i][j]
                    );
                }
            }
        }
    }

    #[test]
    fn signed_areas_are_preserved() {
        fn signed_area(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
            0.5 * ((b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1))
        }
        let t = KsRocTransform::from_prevalence(0.27).unwrap();
        let triangles = [
            [(0.0, 0.0), (0.4, 0.1), (0.2, 0.9)],
            [(0.5, -0.5), (1.0, 0.0), (0.1, 0.3)],
            [(0.9, 0.2), (0.3, 0.8), (0.6, -0.1)],
        ];
        for tri in triangles {
            let before = signed_area(tri[0], tri[1], tri[2]);
            let after = signed_area(
                apply_to_point(&t, tri[0]),
                apply_to_point(&t, tri[1]),
                apply_to_point(&t, tri[2]),
            );
            assert!((before - after).abs() < 1e-12);
        }
    }

    #[test]
    fn lengths_are_not_preserved() {
        // The image of the unit vertical segment has length
        // sqrt(p^2 + (1-p)^2), which is < 1 for every p in (0, 1).
        for p in [0.1, 0.3, 0.5, 0.8] {
            let t = KsRocTransform::from_prevalence(p).unwrap();
            let (u0, v0) = apply_to_point(&t, (0.3, 0.0));
            let (u1, v1) = apply_to_point(&t, (0.3, 1.0));
            let len = ((u1 - u0).powi(2) + (v1 - v0).powi(2)).sqrt();
            let expected = (p * p + (1.0 - p) * (1.0 - p)).sqrt();
            assert!((len - expected).abs() < 1e-12);
            assert!(len != 1.0, "p = {p}");
        }
    }

    #[test]
    fn baseline_maps_onto_the_chance_diagonal() {
        let t = KsRocTransform::from_prevalence(0.42).unwrap();
        for x in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let (u, v) = apply_to_point(&t, (x, 0.0));
            assert_eq!(u, v);
            assert_eq!(u, x);
        }
    }

    #[test]
    fn vertical_height_maps_to_diagonal_distance_over_sqrt2() {
        // A vertical KS segment of height h maps to a segment whose far
        // endpoint sits h/sqrt(2) further from the diagonal u = v.
        let t = KsRocTransform::from_prevalence(0.3).unwrap();
        let dist = |(u, v): (f64, f64)| (v - u) * FRAC_1_SQRT_2;
        for (x, y, h) in [(0.4, 0.0, 0.6), (0.7, 0.2, 0.3), (0.5, -0.2, 0.5)] {
            let near = apply_to_point(&t, (x, y));
            let far = apply_to_point(&t, (x, y + h));
            assert!((dist(far) - dist(near) - h * FRAC_1_SQRT_2).abs() < 1e-12);
        }
    }
}
