use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::intervals::SortedGroups;

use super::machine::StackMachine;
use super::HiddenSortedSequence;

/// Capacity `ceil(αβ) + 1` of the membership window.
pub fn window_capacity(alpha: f64, beta: f64) -> Result<usize> {
    if !(alpha.is_finite() && beta.is_finite() && alpha > 0.0 && beta > 0.0) {
        return Err(Error::InvalidArgument("smoothness parameters must be positive and finite"));
    }
    Ok((alpha * beta).ceil() as usize + 1)
}

/// The largest distinct values seen so far, ascending, each with its slot.
struct MembershipWindow {
    entries: Vec<(f64, usize)>,
    capacity: usize,
}

impl MembershipWindow {
    /// Galloping search from the largest value: the value looked up is
    /// usually close to the top, so this costs `O(log d)` comparisons where
    /// `d` is its distance from the top.
    fn search(&self, v: f64, comparisons: &mut u64) -> Result<usize, usize> {
        let e = &self.entries;
        let mut hi = e.len();
        let mut lo = 0;
        let mut step = 1;
        while step <= hi {
            let probe = hi - step;
            *comparisons += 1;
            match e[probe].0.partial_cmp(&v).expect("finite values") {
                Ordering::Equal => return Ok(probe),
                Ordering::Greater => {
                    hi = probe;
                    step *= 2;
                }
                Ordering::Less => {
                    lo = probe + 1;
                    break;
                }
            }
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            *comparisons += 1;
            match e[mid].0.partial_cmp(&v).expect("finite values") {
                Ordering::Equal => return Ok(mid),
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
            }
        }
        Err(lo)
    }
}

/// Stack reconstruction for realizations of `(α, β)`-smooth supersequences.
///
/// Duplicate detection looks only at the window of the `ceil(αβ) + 1`
/// largest distinct values seen so far. In a smooth sequence every repeated
/// value is still in that window; if a value at or below one that has left
/// the window shows up unannounced, the input is not smooth and the run
/// fails with [`Error::SmoothnessViolated`]. Each entry costs
/// `O(log(αβ))` comparisons plus amortized `O(1)` stack work.
pub fn smooth_sort(h: &HiddenSortedSequence, alpha: f64, beta: f64) -> Result<SortedGroups> {
    let capacity = window_capacity(alpha, beta)?;
    let mut window = MembershipWindow { entries: Vec::with_capacity(capacity), capacity };
    let mut evicted_max: Option<f64> = None;
    let mut machine = StackMachine::default();
    for (position, &(id, value)) in h.entries.iter().enumerate() {
        let value = value + 0.0;
        machine.counters.dictionary_ops += 1;
        let found = window.search(value, &mut machine.counters.comparisons);
        let slot = match found {
            Ok(index) => window.entries[index].1,
            Err(index) => {
                if let Some(gone) = evicted_max {
                    machine.counters.comparisons += 1;
                    if value <= gone {
                        return Err(Error::SmoothnessViolated(format!(
                            "value {value} of {id} at position {position} is not among the \
                             {capacity} largest distinct values seen"
                        )));
                    }
                }
                let slot = machine.new_slot(value);
                if window.entries.len() < window.capacity {
                    machine.counters.dictionary_ops += 1;
                    window.entries.insert(index, (value, slot));
                } else if index == 0 {
                    // smaller than everything retained: enters and leaves at once
                    evicted_max = Some(value);
                } else {
                    machine.counters.dictionary_ops += 2;
                    let (gone, _) = window.entries.remove(0);
                    evicted_max = Some(evicted_max.map_or(gone, |m| m.max(gone)));
                    window.entries.insert(index - 1, (value, slot));
                }
                slot
            }
        };
        machine.counters.peak_size = machine.counters.peak_size.max(window.entries.len() as u64);
        if !machine.on_stack(slot) {
            machine.push(slot);
        }
        machine.record(slot, id);
    }
    let mut sorted = machine.finish()?;
    sorted.counters.retrievals = h.retrievals;
    Ok(sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::IntervalId;

    fn hidden(spec: &[(u32, f64)]) -> HiddenSortedSequence {
        HiddenSortedSequence::from_entries(spec.iter().map(|&(i, v)| (IntervalId(i), v)).collect())
    }

    #[test]
    fn worked_example() {
        assert_eq!(window_capacity(3.0, 4.0).unwrap(), 13);
        let h = hidden(&[(1, 0.9), (2, 0.6), (1, 0.9), (2, 0.6), (3, 2.5)]);
        let g = smooth_sort(&h, 3.0, 4.0).unwrap();
        assert_eq!(g.expand_values(), vec![0.6, 0.9, 2.5]);
        assert_eq!(g.expand_ids(), vec![IntervalId(2), IntervalId(1), IntervalId(3)]);
        assert_eq!(g.counters.peak_size, 3);
    }

    #[test]
    fn sorted_distinct_input_is_identity() {
        let h = hidden(&[(1, 1.0), (2, 2.0), (3, 3.0), (4, 4.0), (5, 5.0)]);
        let g = smooth_sort(&h, 1.0, 1.0).unwrap();
        assert_eq!(g.expand_values(), vec![1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(g.counters.pops, 0);
        assert_eq!(g.counters.peak_size, 2);
    }

    #[test]
    fn evicted_value_reappearing_is_reported() {
        // capacity 2: 1.0 is evicted by 3.0 and then reappears
        let h = hidden(&[(1, 1.0), (2, 2.0), (3, 3.0), (1, 1.0)]);
        let err = smooth_sort(&h, 1.0, 1.0).unwrap_err();
        assert!(err.to_string().starts_with("smoothness violated"), "{err}");
        assert!(smooth_sort(&h, 2.0, 1.0).is_ok());
    }

    #[test]
    fn small_newcomer_into_full_window() {
        // capacity 2; 0.5 is below the window's minimum and new
        let h = hidden(&[(1, 2.0), (2, 3.0), (3, 0.5), (1, 2.0), (2, 3.0)]);
        let g = smooth_sort(&h, 1.0, 1.0).unwrap();
        assert_eq!(g.expand_values(), vec![0.5, 2.0, 3.0]);
        let h = hidden(&[(1, 2.0), (2, 3.0), (3, 0.5), (4, 0.25)]);
        assert!(smooth_sort(&h, 1.0, 1.0).is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(smooth_sort(&hidden(&[]), 0.0, 1.0).is_err());
        assert!(smooth_sort(&hidden(&[]), 1.0, f64::NAN).is_err());
    }

    #[test]
    fn galloping_search_finds_every_position() {
        let window = MembershipWindow {
            entries: (0..40).map(|i| (i as f64, i)).collect(),
            capacity: 40,
        };
        for i in 0..40 {
            let mut c = 0;
            assert_eq!(window.search(i as f64, &mut c), Ok(i));
            let mut c = 0;
            assert_eq!(window.search(i as f64 + 0.5, &mut c), Err(i + 1));
        }
        let mut c = 0;
        assert_eq!(window.search(-1.0, &mut c), Err(0));
        let mut c = 0;
        assert_eq!(window.search(39.0, &mut c), Ok(39));
        assert_eq!(c, 1);
    }
}
