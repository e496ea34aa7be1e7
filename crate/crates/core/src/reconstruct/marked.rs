use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::intervals::{Group, IntervalId, Realization};
use crate::preprocess::SuperSequence;

use super::stack::{greedy_stack_sort, Dictionary};
use super::{realize_occurrences, smooth_sort};

#[derive(Debug, Clone, PartialEq)]
pub enum MixedItem {
    /// Sorted points of a marked cluster.
    Sorted(Group),
    /// An unmarked interval, emitted without reading its value.
    PassThrough(IntervalId),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MarkedOutput {
    pub items: Vec<MixedItem>,
    pub counters: Counters,
    /// Positions of the sequence visited.
    pub touched: u64,
}

impl MarkedOutput {
    /// Values in output order, with pass-through ids looked up in `r`.
    pub fn substitute(&self, r: &Realization) -> Result<Vec<f64>> {
        let mut values = Vec::new();
        for item in &self.items {
            match item {
                MixedItem::Sorted(g) => values.extend(std::iter::repeat(g.value).take(g.ids.len())),
                MixedItem::PassThrough(id) => {
                    values.push(r.get(*id).ok_or(Error::UnrealizedInterval(*id))?)
                }
            }
        }
        Ok(values)
    }

    pub fn ids(&self) -> Vec<IntervalId> {
        self.items
            .iter()
            .flat_map(|item| match item {
                MixedItem::Sorted(g) => g.ids.clone(),
                MixedItem::PassThrough(id) => vec![*id],
            })
            .collect()
    }
}

/// Reconstruction from a marked supersequence.
///
/// Unmarked occurrences are copied through; the run up to the next marked
/// position is found through the next-marked pointers. Each cluster is
/// realized and sorted on its own with its `(α, β)` (hashed stack sort
/// when the cluster has none), so only marked intervals are read.
pub fn marked_reconstruct(seq: &SuperSequence, r: &Realization) -> Result<MarkedOutput> {
    let occurrences = seq.occurrences();
    let mut out = MarkedOutput::default();
    let mut clusters = seq.clusters().iter();
    let mut pos = 0;
    while pos < occurrences.len() {
        if !occurrences[pos].marked {
            let stop = seq.next_marked(pos).unwrap_or(occurrences.len());
            out.items.extend(occurrences[pos..stop].iter().map(|o| MixedItem::PassThrough(o.id)));
            out.touched += (stop - pos) as u64;
            pos = stop;
            continue;
        }
        let cluster = clusters.next().expect("a cluster starts at every marked run");
        debug_assert_eq!(cluster.start, pos);
        let h = realize_occurrences(occurrences[cluster.range()].iter().map(|o| o.id), r)?;
        let sorted = match cluster.alpha.zip(cluster.beta) {
            Some((alpha, beta)) => smooth_sort(&h, alpha, beta)?,
            None => greedy_stack_sort(&h, Dictionary::Hashed { seed: 0 })?,
        };
        out.counters.absorb(&sorted.counters);
        out.items.extend(sorted.groups.into_iter().map(MixedItem::Sorted));
        out.touched += cluster.len() as u64;
        pos = cluster.end;
    }
    Ok(out)
}
