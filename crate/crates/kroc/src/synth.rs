//! Deterministic synthetic sample generators for tests and benchmarks.
//!
//! All randomness flows through ChaCha8 seeded from a caller-supplied
//! 64-bit seed, so identical parameters reproduce byte-identical samples
//! on every platform. Tests should depend on statistics and invariants
//! of the output, not on specific stream values.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::curves::{ClassLabel, LabeledSample};
use crate::error::{EvalError, Result};

/// Parameters of a two-Gaussian score model: target scores drawn from
/// Normal(separation, 1) and complement scores from Normal(0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinormalSpec {
    pub n: u64,
    pub prevalence: f64,
    pub separation: f64,
    pub seed: u64,
}

impl BinormalSpec {
    /// Validate that both classes get at least one expected member.
    pub fn new(n: u64, prevalence: f64, separation: f64, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(EvalError::InvalidParameter(format!(
                "binormal sample size must be at least 2, got {n}"
            )));
        }
        if !(prevalence > 0.0 && prevalence < 1.0) || !prevalence.is_finite() {
            return Err(EvalError::InvalidParameter(format!(
                "prevalence must lie strictly between 0 and 1, got {prevalence}"
            )));
        }
        if n as f64 * prevalence < 1.0 || n as f64 * (1.0 - prevalence) < 1.0 {
            return Err(EvalError::InvalidParameter(format!(
                "expected class counts must each be at least 1 (n={n}, prevalence={prevalence})"
            )));
        }
        if separation < 0.0 || !separation.is_finite() {
            return Err(EvalError::InvalidParameter(format!(
                "separation must be a finite non-negative number, got {separation}"
            )));
        }
        Ok(BinormalSpec {
            n,
            prevalence,
            separation,
            seed,
        })
    }
}

fn check_bounds(n: u64, n_target: u64) -> Result<()> {
    if n < 2 || n_target == 0 || n_target >= n {
        return Err(EvalError::InvalidParameter(format!(
            "need 1 <= n_target <= n - 1, got n={n}, n_target={n_target}"
        )));
    }
    Ok(())
}

/// Distinct descending scores n, n-1, ..., 1.
fn descending_scores(n: u64) -> Vec<f64> {
    (0..n).map(|i| (n - i) as f64).collect()
}

/// The classifier that sets every target apart: all targets score
/// strictly higher than all complements, with distinct scores.
pub fn gen_ideal(n: u64, n_target: u64) -> Result<LabeledSample> {
    check_bounds(n, n_target)?;
    let entries = descending_scores(n)
        .into_iter()
        .enumerate()
        .map(|(i, score)| {
            let label = if (i as u64) < n_target {
                ClassLabel::Target
            } else {
                ClassLabel::Complement
            };
            (score, label)
        })
        .collect();
    Ok(LabeledSample::new(entries))
}

/// Uniformly shuffled label order over distinct scores; the chance
/// classifier in expectation.
pub fn gen_random(n: u64, n_target: u64, seed: u64) -> Result<LabeledSample> {
    check_bounds(n, n_target)?;
    let mut labels: Vec<ClassLabel> = (0..n)
        .map(|i| {
            if i < n_target {
                ClassLabel::Target
            } else {
                ClassLabel::Complement
            }
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    labels.shuffle(&mut rng);
    let entries = descending_scores(n).into_iter().zip(labels).collect();
    Ok(LabeledSample::new(entries))
}

/// Draw a two-Gaussian sample. The target count is `round(n * prevalence)`
/// clamped so both classes stay populated, which keeps every generated
/// sample valid.
pub fn gen_binormal(spec: &BinormalSpec) -> LabeledSample {
    let n_target = ((spec.n as f64 * spec.prevalence).round() as u64).clamp(1, spec.n - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let target_dist = Normal::new(spec.separation, 1.0).unwrap();
    let complement_dist = Normal::new(0.0, 1.0).unwrap();
    let mut entries = Vec::with_capacity(spec.n as usize);
    for _ in 0..n_target {
        entries.push((target_dist.sample(&mut rng), ClassLabel::Target));
    }
    for _ in n_target..spec.n {
        entries.push((complement_dist.sample(&mut rng), ClassLabel::Complement));
    }
    LabeledSample::new(entries)
}
