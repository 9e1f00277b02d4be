//! Variable transformation by reordering monotone segments of a KS curve.
//!
//! Treat a continuous variable's values as classifier scores, build the
//! KS curve, and split it into maximal runs of same-direction chords.
//! Reordering the value ranges so that every increasing segment comes
//! first, then the flats, then every decreasing segment drives y up to
//! the sum of the positive segment deltas before it ever falls, which is
//! the largest maximum any reordering can reach.
//!
//! The result is an ordinal remapping table over value ranges, not a set
//! of modified raw values, so the same transform can be replayed on
//! unseen data. Values falling outside every recorded range clamp to the
//! nearest range before mapping.

use crate::curves::{build_ks, exact_ratio, rank_and_group, y_numerator, KsCurve, LabeledSample};
use crate::error::Result;

/// Direction of one monotone run of KS chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentDirection {
    Increasing,
    Decreasing,
    Flat,
}

/// A maximal run of same-direction chords, in rank coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneSegment {
    /// Cumulative example count where the run starts.
    pub start_rank: u64,
    /// Cumulative example count where the run ends.
    pub end_rank: u64,
    pub direction: SegmentDirection,
    /// Net change of y over the run.
    pub y_delta: f64,
}

/// One row of the remapping table: a source value range and the ordinal
/// position its segment occupies after reordering (position 0 ranks
/// highest, i.e. first in descending-score order).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueBand {
    pub value_low: f64,
    pub value_high: f64,
    pub new_position: usize,
}

/// The reordering transform for one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentReordering {
    /// Segments of the original curve, in original order.
    pub segments: Vec<MonotoneSegment>,
    /// `permutation[k]` is the original index of the segment placed k-th.
    pub permutation: Vec<usize>,
    /// Remapping table ordered by `new_position`.
    pub bands: Vec<ValueBand>,
    /// Maximum of y the remapped variable attains, the sum of the
    /// positive segment deltas.
    pub achieved_max_ks2: f64,
}

impl SegmentReordering {
    /// Whether the reordering leaves the segment order unchanged.
    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// Remap one raw value. Out-of-range values clamp to the nearest
    /// recorded range first. For bulk work prefer [`Self::apply`], which
    /// builds the lookup order once.
    pub fn apply_score(&self, score: f64) -> f64 {
        self.map_score(&self.bands_by_value(), score)
    }

    /// Remap every score of a sample, keeping labels untouched.
    pub fn apply(&self, sample: &LabeledSample) -> LabeledSample {
        let ascending = self.bands_by_value();
        let entries = sample
            .entries()
            .iter()
            .map(|&(score, label)| (self.map_score(&ascending, score), label))
            .collect();
        LabeledSample::new(entries)
    }

    /// Bands sorted by ascending value range. Ranges are disjoint because
    /// tie groups are atomic and segment boundaries sit between distinct
    /// scores.
    fn bands_by_value(&self) -> Vec<ValueBand> {
        let mut ascending = self.bands.clone();
        ascending.sort_by(|a, b| a.value_low.partial_cmp(&b.value_low).unwrap());
        ascending
    }

    fn map_score(&self, ascending: &[ValueBand], score: f64) -> f64 {
        let idx = ascending.partition_point(|b| b.value_high < score);
        let band = if idx == ascending.len() {
            &ascending[idx - 1]
        } else if idx == 0 || score >= ascending[idx].value_low {
            &ascending[idx]
        } else {
            // Between two ranges: clamp to the nearer endpoint.
            let below = &ascending[idx - 1];
            let above = &ascending[idx];
            if score - below.value_high <= above.value_low - score {
                below
            } else {
                above
            }
        };
        let clamped = score.clamp(band.value_low, band.value_high);
        let fraction = if band.value_high > band.value_low {
            (clamped - band.value_low) / (band.value_high - band.value_low)
        } else {
            0.5
        };
        // Each band maps into [base, base + 1/2] with integer bases one
        // apart, so distinct bands can never collide on a value.
        let base = (self.bands.len() - 1 - band.new_position) as f64;
        base + fraction / 2.0
    }
}

/// Split a KS curve into maximal runs of same-direction chords.
pub fn find_monotone_segments(curve: &KsCurve) -> Vec<MonotoneSegment> {
    let counts = curve.counts();
    let den = counts.n_target as i128 * counts.n_complement as i128;
    let vertices = curve.vertices();
    let num =
        |i: usize| y_numerator(vertices[i].cum_target, vertices[i].cum_complement, counts);

    let mut segments = Vec::new();
    let mut start = 0usize;
    let mut start_num = 0i128;
    let mut dir = 0i8;
    for i in 1..vertices.len() {
        let chord = (num(i) - num(i - 1)).signum() as i8;
        if i > 1 && chord != dir {
            segments.push(make_segment(
                vertices[start].rank,
                vertices[i - 1].rank,
                dir,
                num(i - 1) - start_num,
                den,
            ));
            start = i - 1;
            start_num = num(i - 1);
        }
        dir = chord;
    }
    let last = vertices.len() - 1;
    segments.push(make_segment(
        vertices[start].rank,
        vertices[last].rank,
        dir,
        num(last) - start_num,
        den,
    ));
    segments
}

fn make_segment(
    start_rank: u64,
    end_rank: u64,
    dir: i8,
    delta_num: i128,
    den: i128,
) -> MonotoneSegment {
    let direction = match dir {
        1 => SegmentDirection::Increasing,
        -1 => SegmentDirection::Decreasing,
        _ => SegmentDirection::Flat,
    };
    MonotoneSegment {
        start_rank,
        end_rank,
        direction,
        y_delta: exact_ratio(delta_num, den),
    }
}

/// Build the reordering that maximizes the KS maximum of a variable.
pub fn reorder_for_max_ks(sample: &LabeledSample) -> Result<SegmentReordering> {
    let curve = build_ks(sample)?;
    let counts = curve.counts();
    let den = counts.n_target as i128 * counts.n_complement as i128;
    let segments = find_monotone_segments(&curve);

    // Stable grouping: increasing, then flat, then decreasing. Flats
    // cannot move the maximum, and parking them between the groups keeps
    // the peak at the boundary of the increasing block.
    let mut permutation = Vec::with_capacity(segments.len());
    for wanted in [
        SegmentDirection::Increasing,
        SegmentDirection::Flat,
        SegmentDirection::Decreasing,
    ] {
        permutation.extend(
            segments
                .iter()
                .enumerate()
                .filter(|(_, s)| s.direction == wanted)
                .map(|(i, _)| i),
        );
    }

    // Value range of each original segment. Scores descend with rank, so
    // a segment's first tie group holds its high value and the group
    // closing the segment its low value.
    let groups = rank_and_group(sample)?;
    let mut ranges = Vec::with_capacity(segments.len());
    let mut g = 0usize;
    for seg in &segments {
        let high = groups[g].score;
        while groups[g].rank() < seg.end_rank {
            g += 1;
        }
        ranges.push((groups[g].score, high));
        g += 1;
    }

    let bands = permutation
        .iter()
        .enumerate()
        .map(|(k, &orig)| ValueBand {
            value_low: ranges[orig].0,
            value_high: ranges[orig].1,
            new_position: k,
        })
        .collect();

    // Sum of positive deltas in exact integer arithmetic.
    let mut achieved_num = 0i128;
    for seg in &segments {
        if seg.direction == SegmentDirection::Increasing {
            achieved_num += y_num_at_rank(&curve, seg.end_rank) - y_num_at_rank(&curve, seg.start_rank);
        }
    }

    Ok(SegmentReordering {
        segments,
        permutation,
        bands,
        achieved_max_ks2: exact_ratio(achieved_num, den),
    })
}

fn y_num_at_rank(curve: &KsCurve, rank: u64) -> i128 {
    let counts = curve.counts();
    let idx = curve.vertices().partition_point(|vtx| vtx.rank < rank);
    let vtx = &curve.vertices()[idx];
    debug_assert_eq!(vtx.rank, rank);
    y_numerator(vtx.cum_target, vtx.cum_complement, counts)
}
