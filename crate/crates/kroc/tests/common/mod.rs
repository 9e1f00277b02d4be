//! Helpers shared by the integration test suites.
#![allow(dead_code)] // each test target compiles its own copy

use kroc::{gen_random, ClassCounts, KsCurve, LabeledSample, RocCurve};

/// Nine examples whose descending-score label order is 1,0,0,1,0,1,0,0,0.
pub fn reference_sample() -> LabeledSample {
    let scores: Vec<f64> = (1..=9).rev().map(|i| i as f64 / 10.0).collect();
    LabeledSample::from_binary_labels(&scores, &[1, 0, 0, 1, 0, 1, 0, 0, 0]).unwrap()
}

/// Shuffled sample of size `n` with `n_target` targets; when `ties` is
/// set the scores are quantized into roughly n/4 buckets.
pub fn random_sample(n: u64, n_target: u64, seed: u64, ties: bool) -> LabeledSample {
    let sample = gen_random(n, n_target, seed).unwrap();
    if !ties {
        return sample;
    }
    let buckets = (n / 4).max(1) as f64;
    let entries = sample
        .entries()
        .iter()
        .map(|&(score, label)| (((score - 1.0) * buckets / n as f64).floor(), label))
        .collect();
    LabeledSample::new(entries)
}

/// Clamp `round(n * prevalence)` into the valid target-count range.
pub fn target_count(n: u64, prevalence: f64) -> u64 {
    ((n as f64 * prevalence).round() as u64).clamp(1, n - 1)
}

/// Numerator of `y = v - u` over `n_target * n_complement`, recomputed
/// from vertex provenance. Independent of the library's own ratio math.
pub fn y_num(cum_target: u64, cum_complement: u64, counts: ClassCounts) -> i128 {
    cum_target as i128 * counts.n_complement as i128
        - cum_complement as i128 * counts.n_target as i128
}

/// Exact integer residual of `auc_roc - 1/2 - auc_ks`: zero if and only
/// if the identity holds in rational arithmetic. Brings its own trapezoid
/// sums so it does not share code with the implementation under test.
pub fn exact_identity_residual(roc: &RocCurve, ks: &KsCurve) -> i128 {
    let c = roc.counts();
    let (n, nt, nc) = (c.n as i128, c.n_target as i128, c.n_complement as i128);
    // Common denominator 2 * n * nt * nc.
    let mut roc_num = 0i128;
    for pair in roc.vertices().windows(2) {
        let du = pair[1].cum_complement as i128 - pair[0].cum_complement as i128;
        let vsum = pair[0].cum_target as i128 + pair[1].cum_target as i128;
        roc_num += du * vsum;
    }
    let mut ks_num = 0i128;
    for pair in ks.vertices().windows(2) {
        let dx = pair[1].rank as i128 - pair[0].rank as i128;
        let ysum = y_num(pair[0].cum_target, pair[0].cum_complement, c)
            + y_num(pair[1].cum_target, pair[1].cum_complement, c);
        ks_num += dx * ysum;
    }
    roc_num * n - n * nt * nc - ks_num
}
