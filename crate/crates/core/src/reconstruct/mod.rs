//! Reconstruction: recover the sorted order (or a gap) of a realization from
//! a supersequence.
//!
//! Replacing each occurrence of a supersequence by its realized value gives a
//! hidden sorted sequence: all distinct values appear, in increasing order,
//! as a subsequence. The stack algorithms extract that subsequence; they
//! differ only in how they decide whether a value is already on the stack.

mod machine;
mod marked;
mod smooth;
mod stack;
mod sweep;

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intervals::{IntervalId, Realization, SortedGroups};
use crate::preprocess::{GapKind, GapPrep, SuperSequence};

pub use marked::{marked_reconstruct, MarkedOutput, MixedItem};
pub use smooth::{smooth_sort, window_capacity};
pub use stack::{greedy_stack_sort, Dictionary};
pub use sweep::pq_sweep_sort;

/// Realized values of a supersequence, occurrence by occurrence.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HiddenSortedSequence {
    pub entries: Vec<(IntervalId, f64)>,
    /// Distinct intervals whose value was read.
    pub retrievals: u64,
}

impl HiddenSortedSequence {
    /// Entries with no retrieval accounting, mainly for tests.
    pub fn from_entries(entries: Vec<(IntervalId, f64)>) -> Self {
        let retrievals = entries.iter().map(|e| e.0).collect::<HashSet<_>>().len() as u64;
        HiddenSortedSequence { entries, retrievals }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct values.
    pub fn distinct_values(&self) -> usize {
        let mut values: Vec<f64> = self.entries.iter().map(|e| e.1).collect();
        values.sort_by(f64::total_cmp);
        values.dedup();
        values.len()
    }
}

pub fn realize_sequence(seq: &SuperSequence, r: &Realization) -> Result<HiddenSortedSequence> {
    realize_occurrences(seq.ids(), r)
}

pub(crate) fn realize_occurrences(
    ids: impl Iterator<Item = IntervalId>,
    r: &Realization,
) -> Result<HiddenSortedSequence> {
    let mut read = HashSet::new();
    let entries = ids
        .map(|id| {
            let value = r.get(id).ok_or(Error::UnrealizedInterval(id))?;
            read.insert(id);
            Ok((id, value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HiddenSortedSequence { entries, retrievals: read.len() as u64 })
}

/// Ordering wrapper that counts every comparison made through it, including
/// those made inside standard collections.
#[derive(Clone, Copy)]
pub(crate) struct Counted<'a> {
    pub value: f64,
    pub tie: u32,
    pub counter: &'a Cell<u64>,
}

impl PartialEq for Counted<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Counted<'_> {}

impl PartialOrd for Counted<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Counted<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.counter.set(self.counter.get() + 1);
        self.value.total_cmp(&other.value).then(self.tie.cmp(&other.tie))
    }
}

/// Smallest and largest gap between consecutive distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapScan {
    pub min_gap: f64,
    pub min_witness: [IntervalId; 2],
    pub max_gap: f64,
    pub max_witness: [IntervalId; 2],
    pub comparisons: u64,
}

/// Linear scan over sorted groups. A group holding two ids is a gap of 0.
pub fn gap_scan(g: &SortedGroups) -> Result<GapScan> {
    if g.point_count() < 2 {
        return Err(Error::NeedTwoPoints);
    }
    let mut min: Option<(f64, [IntervalId; 2])> = None;
    let mut max: Option<(f64, [IntervalId; 2])> = None;
    let mut comparisons = 0;
    if let Some(dup) = g.groups.iter().find(|grp| grp.ids.len() >= 2) {
        min = Some((0.0, [dup.ids[0], dup.ids[1]]));
        if g.groups.len() == 1 {
            max = min;
        }
    }
    for pair in g.groups.windows(2) {
        let d = pair[1].value - pair[0].value;
        let witness = [pair[0].ids[0], pair[1].ids[0]];
        comparisons += 2;
        if min.map_or(true, |(m, _)| d < m) {
            min = Some((d, witness));
        }
        if max.map_or(true, |(m, _)| d > m) {
            max = Some((d, witness));
        }
    }
    let (min_gap, min_witness) = min.expect("two points");
    let (max_gap, max_witness) = max.expect("two points");
    Ok(GapScan { min_gap, min_witness, max_gap, max_witness, comparisons })
}

/// Answer of [`reconstruct_gap`], serialized as the gap result JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapResult {
    pub which: GapKind,
    pub gap: f64,
    pub witness: [IntervalId; 2],
    pub retrievals: u64,
    pub comparisons: u64,
}

/// Smallest or largest gap, reading only the kept intervals of `prep`.
///
/// `seq` must be a supersequence of the kept intervals. It is sorted with
/// the window algorithm when it carries smoothness parameters and with the
/// hashed stack algorithm otherwise.
pub fn reconstruct_gap(prep: &GapPrep, seq: &SuperSequence, r: &Realization) -> Result<GapResult> {
    if prep.kept.len() < 2 {
        return Err(Error::NeedTwoKept);
    }
    let kept: HashSet<IntervalId> = prep.kept.iter().copied().collect();
    if let Some(id) = seq.ids().find(|id| !kept.contains(id)) {
        return Err(Error::SequenceMismatch(format!("{id} is not a kept interval")));
    }
    let h = realize_sequence(seq, r)?;
    let sorted = match seq.smoothness() {
        Some((alpha, beta)) => smooth_sort(&h, alpha, beta)?,
        None => greedy_stack_sort(&h, Dictionary::Hashed { seed: 0 })?,
    };
    let scan = gap_scan(&sorted)?;
    let (gap, witness) = match prep.which {
        GapKind::Min => (scan.min_gap, scan.min_witness),
        GapKind::Max => (scan.max_gap, scan.max_witness),
    };
    Ok(GapResult {
        which: prep.which,
        gap,
        witness,
        retrievals: h.retrievals,
        comparisons: sorted.counters.comparisons + scan.comparisons,
    })
}
