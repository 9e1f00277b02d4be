//! Tie-aware empirical ROC and Kolmogorov-Smirnov curves.
//!
//! Examples are sorted by descending score, so a high score means
//! "predicted target". Equal scores collapse into one [`TieGroup`]: a
//! threshold cannot separate tied scores, so a tie group produces a single
//! diagonal ROC segment and a single KS chord. Every vertex carries its
//! cumulative class counts, and its coordinates are emitted once as exact
//! integer ratios. Downstream code can therefore reproduce any coordinate
//! bit for bit from the integers instead of accumulating float error.
//!
//! Coordinate conventions, for a vertex after the i-th ranked example:
//! ROC space uses `u` = false-positive rate and `v` = true-positive rate;
//! KS space uses `x` = fraction of the population seen so far and
//! `y = v - u`, the difference between the two class CDFs.

use crate::error::{EvalError, Result};

/// Binary class of a scored example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    /// The class of interest (encoded as 1 at ingestion).
    Target,
    /// Everything else (encoded as 0 at ingestion).
    Complement,
}

impl ClassLabel {
    /// Decode the conventional 0/1 encoding; any other value is rejected.
    pub fn from_binary(value: u8) -> Option<ClassLabel> {
        match value {
            1 => Some(ClassLabel::Target),
            0 => Some(ClassLabel::Complement),
            _ => None,
        }
    }

    /// Encode back to 0/1.
    pub fn to_binary(self) -> u8 {
        match self {
            ClassLabel::Target => 1,
            ClassLabel::Complement => 0,
        }
    }

    pub fn is_target(self) -> bool {
        self == ClassLabel::Target
    }
}

/// Scored, binary-labeled examples. The raw input to every curve build.
///
/// Construction never validates; [`tally_classes`] and the curve builders
/// report degenerate or non-finite inputs as errors.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    entries: Vec<(f64, ClassLabel)>,
}

impl LabeledSample {
    pub fn new(entries: Vec<(f64, ClassLabel)>) -> Self {
        LabeledSample { entries }
    }

    /// Build from parallel score and 0/1 label slices.
    pub fn from_binary_labels(scores: &[f64], labels: &[u8]) -> Result<Self> {
        if scores.len() != labels.len() {
            return Err(EvalError::InvalidParameter(format!(
                "scores length {} != labels length {}",
                scores.len(),
                labels.len()
            )));
        }
        let mut entries = Vec::with_capacity(scores.len());
        for (i, (&score, &label)) in scores.iter().zip(labels).enumerate() {
            let label = ClassLabel::from_binary(label).ok_or_else(|| {
                EvalError::InvalidParameter(format!(
                    "label at entry {i} must be 0 or 1, got {label}"
                ))
            })?;
            entries.push((score, label));
        }
        Ok(LabeledSample { entries })
    }

    pub fn entries(&self) -> &[(f64, ClassLabel)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Per-class totals of a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    /// Total sample size.
    pub n: u64,
    /// Number of target-class examples.
    pub n_target: u64,
    /// Number of complement-class examples.
    pub n_complement: u64,
}

impl ClassCounts {
    /// Target-class prevalence `n_target / n`.
    pub fn prevalence(&self) -> f64 {
        self.n_target as f64 / self.n as f64
    }
}

/// A maximal run of examples sharing one score, with cumulative class
/// counts up to and including the group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TieGroup {
    pub score: f64,
    pub count_target: u64,
    pub count_complement: u64,
    pub cum_target: u64,
    pub cum_complement: u64,
}

impl TieGroup {
    /// Cumulative example count at the end of the group.
    pub fn rank(&self) -> u64 {
        self.cum_target + self.cum_complement
    }
}

/// One vertex of the ROC polyline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RocVertex {
    /// False-positive rate `cum_complement / n_complement`.
    pub u: f64,
    /// True-positive rate `cum_target / n_target`.
    pub v: f64,
    /// Cumulative example count.
    pub rank: u64,
    pub cum_target: u64,
    pub cum_complement: u64,
}

/// One vertex of the KS polyline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsVertex {
    /// Population fraction `rank / n`.
    pub x: f64,
    /// CDF difference `cum_target/n_target - cum_complement/n_complement`.
    pub y: f64,
    /// Cumulative example count.
    pub rank: u64,
    pub cum_target: u64,
    pub cum_complement: u64,
}

/// Empirical ROC curve: a polyline from (0,0) to (1,1), one vertex per tie
/// group boundary plus the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct RocCurve {
    vertices: Vec<RocVertex>,
    counts: ClassCounts,
}

impl RocCurve {
    pub fn vertices(&self) -> &[RocVertex] {
        &self.vertices
    }

    pub fn counts(&self) -> ClassCounts {
        self.counts
    }
}

/// Empirical KS curve: a polyline from (0,0) to (1,0), one vertex per tie
/// group boundary plus the origin. `y` may go negative where the
/// classifier ranks worse than chance.
#[derive(Debug, Clone, PartialEq)]
pub struct KsCurve {
    vertices: Vec<KsVertex>,
    counts: ClassCounts,
}

impl KsCurve {
    pub fn vertices(&self) -> &[KsVertex] {
        &self.vertices
    }

    pub fn counts(&self) -> ClassCounts {
        self.counts
    }
}

/// Correctly rounded value of the exact integer ratio `num / den`.
///
/// Exact as long as both integers fit in 53 bits, which holds for every
/// ratio emitted here up to samples of ~10^8 entries.
pub(crate) fn exact_ratio(num: i128, den: i128) -> f64 {
    num as f64 / den as f64
}

/// Numerator of `y = cum_target/n_target - cum_complement/n_complement`
/// over the common denominator `n_target * n_complement`.
pub(crate) fn y_numerator(cum_target: u64, cum_complement: u64, counts: ClassCounts) -> i128 {
    cum_target as i128 * counts.n_complement as i128
        - cum_complement as i128 * counts.n_target as i128
}

/// Count both classes, rejecting degenerate or non-finite input.
pub fn tally_classes(sample: &LabeledSample) -> Result<ClassCounts> {
    if sample.len() < 2 {
        return Err(EvalError::EmptySample(sample.len()));
    }
    let mut n_target = 0u64;
    let mut n_complement = 0u64;
    for (index, &(score, label)) in sample.entries().iter().enumerate() {
        if !score.is_finite() {
            return Err(EvalError::NonFiniteScore { index, value: score });
        }
        match label {
            ClassLabel::Target => n_target += 1,
            ClassLabel::Complement => n_complement += 1,
        }
    }
    if n_target == 0 || n_complement == 0 {
        return Err(EvalError::SingleClassSample {
            n_target,
            n_complement,
        });
    }
    Ok(ClassCounts {
        n: n_target + n_complement,
        n_target,
        n_complement,
    })
}

/// Sort by strictly descending score and collapse equal scores into tie
/// groups with running cumulative counts.
pub fn rank_and_group(sample: &LabeledSample) -> Result<Vec<TieGroup>> {
    for (index, &(score, _)) in sample.entries().iter().enumerate() {
        if !score.is_finite() {
            return Err(EvalError::NonFiniteScore { index, value: score });
        }
    }
    let mut sorted: Vec<(f64, ClassLabel)> = sample.entries().to_vec();
    // All scores are finite here, so partial_cmp cannot fail.
    sorted.sort_unstable_by(|a, b| b.0.partial_cmp(&a.0).unwrap());

    let mut groups: Vec<TieGroup> = Vec::new();
    let mut cum_target = 0u64;
    let mut cum_complement = 0u64;
    let mut i = 0;
    while i < sorted.len() {
        let score = sorted[i].0;
        let mut count_target = 0u64;
        let mut count_complement = 0u64;
        while i < sorted.len() && sorted[i].0 == score {
            match sorted[i].1 {
                ClassLabel::Target => count_target += 1,
                ClassLabel::Complement => count_complement += 1,
            }
            i += 1;
        }
        cum_target += count_target;
        cum_complement += count_complement;
        groups.push(TieGroup {
            score,
            count_target,
            count_complement,
            cum_target,
            cum_complement,
        });
    }
    Ok(groups)
}

/// Build the empirical ROC curve of a sample.
pub fn build_roc(sample: &LabeledSample) -> Result<RocCurve> {
    let counts = tally_classes(sample)?;
    let groups = rank_and_group(sample)?;
    let mut vertices = Vec::with_capacity(groups.len() + 1);
    vertices.push(RocVertex {
        u: 0.0,
        v: 0.0,
        rank: 0,
        cum_target: 0,
        cum_complement: 0,
    });
    for g in &groups {
        vertices.push(RocVertex {
            u: exact_ratio(g.cum_complement as i128, counts.n_complement as i128),
            v: exact_ratio(g.cum_target as i128, counts.n_target as i128),
            rank: g.rank(),
            cum_target: g.cum_target,
            cum_complement: g.cum_complement,
        });
    }
    Ok(RocCurve { vertices, counts })
}

/// Build the empirical KS curve of a sample.
pub fn build_ks(sample: &LabeledSample) -> Result<KsCurve> {
    let counts = tally_classes(sample)?;
    let groups = rank_and_group(sample)?;
    let den = counts.n_target as i128 * counts.n_complement as i128;
    let mut vertices = Vec::with_capacity(groups.len() + 1);
    vertices.push(KsVertex {
        x: 0.0,
        y: 0.0,
        rank: 0,
        cum_target: 0,
        cum_complement: 0,
    });
    for g in &groups {
        vertices.push(KsVertex {
            x: exact_ratio(g.rank() as i128, counts.n as i128),
            y: exact_ratio(y_numerator(g.cum_target, g.cum_complement, counts), den),
            rank: g.rank(),
            cum_target: g.cum_target,
            cum_complement: g.cum_complement,
        });
    }
    Ok(KsCurve { vertices, counts })
}
