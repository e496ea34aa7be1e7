use std::cell::Cell;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::intervals::{IntervalId, IntervalSet, Realization, SortedGroups};

use super::Counted;

/// Priority-queue sweep over left endpoints.
///
/// Intervals are opened in canonical order; before opening one with left
/// endpoint `l`, every queued point `<= l` is emitted, since no later point
/// can be smaller. The queue never holds more than `Δ` points, so the run
/// costs `O(n log Δ)` comparisons.
pub fn pq_sweep_sort(set: &IntervalSet, r: &Realization) -> Result<SortedGroups> {
    let compared = Cell::new(0u64);
    let mut heap: BinaryHeap<Reverse<(Counted<'_>, IntervalId)>> = BinaryHeap::new();
    let mut out: Vec<(IntervalId, f64)> = Vec::with_capacity(set.len());
    let mut counters = crate::counters::Counters::default();
    for iv in set.iter() {
        while let Some(Reverse((top, id))) = heap.peek() {
            counters.comparisons += 1;
            if top.value > iv.left {
                break;
            }
            out.push((*id, top.value));
            heap.pop();
            counters.pops += 1;
        }
        let value = r.get(iv.id).ok_or(Error::UnrealizedInterval(iv.id))?;
        counters.retrievals += 1;
        heap.push(Reverse((Counted { value: value + 0.0, tie: iv.id.0, counter: &compared }, iv.id)));
        counters.pushes += 1;
        counters.peak_size = counters.peak_size.max(heap.len() as u64);
    }
    while let Some(Reverse((top, id))) = heap.pop() {
        out.push((id, top.value));
        counters.pops += 1;
    }
    counters.comparisons += compared.get();
    let mut sorted = SortedGroups::from_sorted(out);
    sorted.counters = counters;
    Ok(sorted)
}
