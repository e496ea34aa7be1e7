//! Bounds on the smallest and largest gap of any realization, and the
//! interval omissions they justify.
//!
//! `UB_min` is the smallest, over interval pairs, of the largest distance two
//! points from the pair can be apart; every realization has a gap no larger.
//! `LB_max` is the widest hole in the union of the intervals; every
//! realization has a gap at least that wide.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intervals::{Interval, IntervalId, IntervalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapKind {
    Min,
    Max,
}

impl fmt::Display for GapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GapKind::Min => "min",
            GapKind::Max => "max",
        })
    }
}

impl FromStr for GapKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "min" => Ok(GapKind::Min),
            "max" => Ok(GapKind::Max),
            other => Err(format!("unknown gap kind {other:?}")),
        }
    }
}

/// Omission rule for the largest gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapVariant {
    /// Omit an interval only when kept intervals on both sides pin every
    /// point of it inside a span shorter than `LB_max`.
    #[default]
    Safe,
    /// Endpoint-proximity rule kept for comparison; it can drop intervals
    /// that anchor the largest gap.
    PaperLiteral,
}

impl fmt::Display for GapVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GapVariant::Safe => "safe",
            GapVariant::PaperLiteral => "paper-literal",
        })
    }
}

impl FromStr for GapVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "safe" => Ok(GapVariant::Safe),
            "paper-literal" => Ok(GapVariant::PaperLiteral),
            other => Err(format!("unknown gap variant {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GapWitness {
    /// The interval pair attaining `UB_min`.
    Pair([IntervalId; 2]),
    /// The hole in the union attaining `LB_max`.
    Gap { from: f64, to: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapPrep {
    pub which: GapKind,
    pub bound: f64,
    /// Retained ids in canonical order.
    pub kept: Vec<IntervalId>,
    pub omitted: Vec<IntervalId>,
    pub witness: Option<GapWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<GapVariant>,
}

fn require_two(set: &IntervalSet) -> Result<()> {
    if set.len() < 2 {
        Err(Error::NeedTwoIntervals)
    } else {
        Ok(())
    }
}

/// `UB_min` with the interval pair attaining it.
///
/// The largest distance between points of `I` and `J` is
/// `|mid_I - mid_J| + (|I| + |J|) / 2`; for `I` at or before `J` in midpoint
/// order it equals `right_J - left_I`. Scanning in midpoint order with the
/// running maximum left endpoint gives the minimum in `O(n log n)`.
pub fn smallest_gap_upper_bound(set: &IntervalSet) -> Result<(f64, [IntervalId; 2])> {
    require_two(set)?;
    let mut by_mid: Vec<&Interval> = set.iter().collect();
    // comparing left + right orders by midpoint without dividing
    by_mid.sort_by(|a, b| (a.left + a.right).total_cmp(&(b.left + b.right)).then(a.id.cmp(&b.id)));
    let mut best_left = by_mid[0];
    let mut best: Option<(f64, [IntervalId; 2])> = None;
    for &iv in &by_mid[1..] {
        let d = iv.right - best_left.left;
        if best.map_or(true, |(b, _)| d < b) {
            best = Some((d, canonical_pair(set, best_left.id, iv.id)));
        }
        if iv.left > best_left.left {
            best_left = iv;
        }
    }
    Ok(best.expect("at least two intervals"))
}

fn canonical_pair(set: &IntervalSet, a: IntervalId, b: IntervalId) -> [IntervalId; 2] {
    if set.position(a) <= set.position(b) {
        [a, b]
    } else {
        [b, a]
    }
}

/// `LB_max`: the widest open hole in the union of the intervals (0 when the
/// union is connected), with the hole's bounds.
pub fn largest_gap_lower_bound(set: &IntervalSet) -> Result<(f64, Option<(f64, f64)>)> {
    require_two(set)?;
    let members = set.intervals();
    let mut reach = members[0].right;
    let mut best: (f64, Option<(f64, f64)>) = (0.0, None);
    for iv in &members[1..] {
        if iv.left > reach && iv.left - reach > best.0 {
            best = (iv.left - reach, Some((reach, iv.left)));
        }
        reach = reach.max(iv.right);
    }
    Ok(best)
}

/// Keeps every interval within `UB_min` of some other interval; omits those
/// strictly farther than `UB_min` from their nearest neighbour on both sides.
pub fn omit_for_smallest_gap(set: &IntervalSet) -> Result<GapPrep> {
    let (bound, pair) = smallest_gap_upper_bound(set)?;
    let members = set.intervals();
    let mut kept = Vec::new();
    let mut omitted = Vec::new();
    let mut reach = f64::NEG_INFINITY;
    for (k, iv) in members.iter().enumerate() {
        // nearest predecessor is the one reaching furthest right; nearest
        // successor is the next one in canonical order
        let left_gap = iv.left - reach;
        let right_gap = members.get(k + 1).map_or(f64::INFINITY, |next| next.left - iv.right);
        if left_gap > bound && right_gap > bound {
            omitted.push(iv.id);
        } else {
            kept.push(iv.id);
        }
        reach = reach.max(iv.right);
    }
    Ok(GapPrep {
        which: GapKind::Min,
        bound,
        kept,
        omitted,
        witness: Some(GapWitness::Pair(pair)),
        variant: None,
    })
}

pub fn omit_for_largest_gap(set: &IntervalSet, variant: GapVariant) -> Result<GapPrep> {
    let (bound, hole) = largest_gap_lower_bound(set)?;
    let members = set.intervals();
    let omit: Vec<bool> = match variant {
        GapVariant::Safe => {
            let everyone = WitnessIndex::new(members.iter());
            let candidate: Vec<bool> =
                members.iter().map(|iv| everyone.pins(iv, bound)).collect();
            let anchors = WitnessIndex::new(
                members.iter().zip(&candidate).filter(|(_, &c)| !c).map(|(iv, _)| iv),
            );
            members
                .iter()
                .zip(&candidate)
                .map(|(iv, &c)| c && anchors.pins(iv, bound))
                .collect()
        }
        GapVariant::PaperLiteral => paper_literal_omissions(members, bound),
    };
    let (mut kept, mut omitted) = (Vec::new(), Vec::new());
    for (iv, drop) in members.iter().zip(omit) {
        if drop {
            omitted.push(iv.id);
        } else {
            kept.push(iv.id);
        }
    }
    Ok(GapPrep {
        which: GapKind::Max,
        bound,
        kept,
        omitted,
        witness: hole.map(|(from, to)| GapWitness::Gap { from, to }),
        variant: Some(variant),
    })
}

/// Two best entries, so a query can skip the interval it is asking about.
#[derive(Clone, Copy, Default)]
struct TopTwo {
    first: Option<(f64, IntervalId)>,
    second: Option<(f64, IntervalId)>,
}

impl TopTwo {
    fn offer(&mut self, value: f64, id: IntervalId, better: fn(f64, f64) -> bool) {
        match self.first {
            Some((v, _)) if !better(value, v) => {
                if self.second.map_or(true, |(w, _)| better(value, w)) {
                    self.second = Some((value, id));
                }
            }
            _ => {
                self.second = self.first;
                self.first = Some((value, id));
            }
        }
    }

    fn excluding(&self, id: IntervalId) -> Option<f64> {
        match self.first {
            Some((_, first_id)) if first_id == id => self.second.map(|(v, _)| v),
            other => other.map(|(v, _)| v),
        }
    }
}

/// For a query interval `I`: the largest left endpoint among intervals
/// lying entirely left of `I`, and the smallest right endpoint among
/// intervals lying entirely right of it.
struct WitnessIndex {
    rights: Vec<f64>,
    best_left: Vec<TopTwo>,
    lefts: Vec<f64>,
    best_right: Vec<TopTwo>,
}

impl WitnessIndex {
    fn new<'a>(pool: impl Iterator<Item = &'a Interval>) -> Self {
        let pool: Vec<&Interval> = pool.collect();
        let mut by_right = pool.clone();
        by_right.sort_by(|a, b| a.right.total_cmp(&b.right));
        let mut best_left = Vec::with_capacity(by_right.len());
        let mut acc = TopTwo::default();
        for iv in &by_right {
            acc.offer(iv.left, iv.id, |a, b| a > b);
            best_left.push(acc);
        }
        let mut by_left = pool;
        by_left.sort_by(|a, b| a.left.total_cmp(&b.left));
        let mut best_right = vec![TopTwo::default(); by_left.len()];
        let mut acc = TopTwo::default();
        for (k, iv) in by_left.iter().enumerate().rev() {
            acc.offer(iv.right, iv.id, |a, b| a < b);
            best_right[k] = acc;
        }
        WitnessIndex {
            rights: by_right.iter().map(|iv| iv.right).collect(),
            best_left,
            lefts: by_left.iter().map(|iv| iv.left).collect(),
            best_right,
        }
    }

    /// True when some `K` entirely left and `J` entirely right of `iv`
    /// satisfy `right(J) - left(K) < bound`: every point of `iv` then sits
    /// between points of `K` and `J` less than `bound` apart.
    fn pins(&self, iv: &Interval, bound: f64) -> bool {
        let k_end = self.rights.partition_point(|&r| r <= iv.left);
        let j_start = self.lefts.partition_point(|&l| l < iv.right);
        let k_left = k_end.checked_sub(1).and_then(|k| self.best_left[k].excluding(iv.id));
        let j_right = self.best_right.get(j_start).and_then(|t| t.excluding(iv.id));
        match (k_left, j_right) {
            (Some(kl), Some(jr)) => jr - kl < bound,
            _ => false,
        }
    }
}

/// Omit `I` when its left endpoint is closer than `LB_max` to the next right
/// endpoint of another interval and its right endpoint is closer than
/// `LB_max` to the previous left endpoint of another interval.
fn paper_literal_omissions(members: &[Interval], bound: f64) -> Vec<bool> {
    let mut rights: Vec<(f64, IntervalId)> = members.iter().map(|iv| (iv.right, iv.id)).collect();
    rights.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut lefts: Vec<(f64, IntervalId)> = members.iter().map(|iv| (iv.left, iv.id)).collect();
    lefts.sort_by(|a, b| a.0.total_cmp(&b.0));
    members
        .iter()
        .map(|iv| {
            let from = rights.partition_point(|&(r, _)| r < iv.left);
            let next_right = rights[from..].iter().find(|&&(_, id)| id != iv.id).map(|&(r, _)| r);
            let upto = lefts.partition_point(|&(l, _)| l <= iv.right);
            let prev_left = lefts[..upto].iter().rev().find(|&&(_, id)| id != iv.id).map(|&(l, _)| l);
            match (next_right, prev_left) {
                (Some(r), Some(l)) => r - iv.left < bound && iv.right - l < bound,
                _ => false,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn set(bounds: &[(f64, f64)]) -> IntervalSet {
        IntervalSet::from_bounds(bounds).unwrap()
    }

    fn ids(raw: &[u32]) -> Vec<IntervalId> {
        raw.iter().map(|&i| IntervalId(i)).collect()
    }

    #[test]
    fn ub_min_examples() {
        let (ub, pair) = smallest_gap_upper_bound(&set(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)])).unwrap();
        assert_eq!(ub, 1.5);
        assert_eq!(pair, [IntervalId(1), IntervalId(2)]);

        let (ub, _) = smallest_gap_upper_bound(&set(&[(0.0, 0.0), (1.0, 1.0)])).unwrap();
        assert_eq!(ub, 1.0);

        let (ub, pair) = smallest_gap_upper_bound(&set(&[(0.0, 1.0), (0.2, 1.2), (10.0, 11.0)])).unwrap();
        assert_relative_eq!(ub, 1.2);
        assert_eq!(pair, [IntervalId(1), IntervalId(2)]);

        let (ub, _) = smallest_gap_upper_bound(&set(&[(0.0, 2.0), (1.0, 3.0), (2.0, 4.0)])).unwrap();
        assert_eq!(ub, 3.0);
    }

    #[test]
    fn bounds_need_two_intervals() {
        let one = set(&[(0.0, 1.0)]);
        assert_eq!(smallest_gap_upper_bound(&one).unwrap_err().to_string(), "need two intervals");
        assert_eq!(largest_gap_lower_bound(&one).unwrap_err().to_string(), "need two intervals");
        assert!(omit_for_smallest_gap(&one).is_err());
        assert!(omit_for_largest_gap(&one, GapVariant::Safe).is_err());
    }

    #[test]
    fn lb_max_examples() {
        let (lb, hole) = largest_gap_lower_bound(&set(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)])).unwrap();
        assert_eq!((lb, hole), (0.5, Some((1.5, 2.0))));

        let (lb, hole) = largest_gap_lower_bound(&set(&[(0.0, 1.0), (0.5, 1.5)])).unwrap();
        assert_eq!((lb, hole), (0.0, None));

        let s = set(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0), (20.0, 21.0)]);
        let (lb, hole) = largest_gap_lower_bound(&s).unwrap();
        assert_eq!((lb, hole), (15.0, Some((5.0, 20.0))));
    }

    #[test]
    fn smallest_gap_omission_examples() {
        let prep = omit_for_smallest_gap(&set(&[(0.0, 1.0), (0.2, 1.2), (10.0, 11.0)])).unwrap();
        assert_relative_eq!(prep.bound, 1.2);
        assert_eq!(prep.omitted, ids(&[3]));
        assert_eq!(prep.kept, ids(&[1, 2]));

        let prep = omit_for_smallest_gap(&set(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)])).unwrap();
        assert_eq!(prep.bound, 1.5);
        assert!(prep.omitted.is_empty());

        let prep = omit_for_smallest_gap(&set(&[(0.0, 1.0), (50.0, 51.0)])).unwrap();
        assert!(prep.omitted.is_empty());
    }

    #[test]
    fn largest_gap_safe_examples() {
        let s = set(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0), (20.0, 21.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        assert_eq!(prep.bound, 15.0);
        assert_eq!(prep.omitted, ids(&[2]));
        assert_eq!(prep.kept, ids(&[1, 3, 4]));

        let prep = omit_for_largest_gap(&set(&[(0.0, 1.0), (10.0, 11.0)]), GapVariant::Safe).unwrap();
        assert!(prep.omitted.is_empty());

        let s = set(&[(0.0, 1.0), (0.5, 1.5), (10.0, 11.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        assert!(prep.omitted.is_empty());
    }

    #[test]
    fn safe_variant_keeps_a_chain_anchor() {
        // points 0, 6, 12, 22: dropping the 6 would open a gap of 12 > 10
        let s = set(&[(0.0, 0.0), (6.0, 6.0), (12.0, 12.0), (22.0, 22.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        assert_eq!(prep.bound, 10.0);
        assert!(prep.omitted.is_empty());

        // 7 and 14 each have close witnesses, but only through each other;
        // dropping both would leave a gap of 21 against a true maximum of 15
        let s = set(&[(0.0, 0.0), (7.0, 7.0), (14.0, 14.0), (21.0, 21.0), (36.0, 36.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        assert_eq!(prep.bound, 15.0);
        assert!(prep.omitted.is_empty());

        let s = set(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (100.0, 100.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        assert_eq!(prep.omitted, ids(&[2, 3]));
    }

    #[test]
    fn paper_literal_drops_the_gap_anchors() {
        let s = set(&[(0.0, 1.0), (0.5, 1.5), (10.0, 11.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::PaperLiteral).unwrap();
        assert_eq!(prep.bound, 8.5);
        assert_eq!(prep.omitted, ids(&[1, 2]));
        assert_eq!(prep.kept, ids(&[3]));
    }

    #[test]
    fn gap_prep_json_shape() {
        let prep = omit_for_smallest_gap(&set(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)])).unwrap();
        let json = serde_json::to_string(&prep).unwrap();
        assert_eq!(
            json,
            r#"{"which":"min","bound":1.5,"kept":["I1","I2","I3"],"omitted":[],"witness":["I1","I2"]}"#
        );
        let back: GapPrep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, prep);

        let s = set(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0), (20.0, 21.0)]);
        let prep = omit_for_largest_gap(&s, GapVariant::Safe).unwrap();
        let json = serde_json::to_value(&prep).unwrap();
        assert_eq!(json["witness"], serde_json::json!({"from": 5.0, "to": 20.0}));
        assert_eq!(json["variant"], "safe");
    }
}
