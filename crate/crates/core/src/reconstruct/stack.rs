use std::cell::Cell;
use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasher, Hasher};

use rand::Rng;

use crate::error::Result;
use crate::intervals::SortedGroups;
use crate::rng;

use super::machine::StackMachine;
use super::{Counted, HiddenSortedSequence};

/// Value-to-slot dictionary used by [`greedy_stack_sort`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dictionary {
    /// Hash table under a randomly drawn multiply-shift function.
    /// Expected `O(1)` per operation; value comparisons happen only on the stack.
    Hashed { seed: u64 },
    /// Balanced search tree; every key comparison is counted.
    Ordered,
}

/// Greedy stack reconstruction.
///
/// For each entry: if its value is already on the stack, record the id
/// there; otherwise pop every larger value and push it. When the input is a
/// hidden sorted sequence the final stack is the sorted distinct values.
/// Runs in `O(len)` stack work plus one dictionary operation per entry.
pub fn greedy_stack_sort(h: &HiddenSortedSequence, dictionary: Dictionary) -> Result<SortedGroups> {
    let mut sorted = match dictionary {
        Dictionary::Hashed { seed } => hashed(h, seed),
        Dictionary::Ordered => ordered(h),
    }?;
    sorted.counters.retrievals = h.retrievals;
    Ok(sorted)
}

fn hashed(h: &HiddenSortedSequence, seed: u64) -> Result<SortedGroups> {
    let mut machine = StackMachine::default();
    let mut slots: HashMap<u64, usize, MultiplyShift> =
        HashMap::with_hasher(MultiplyShift::new(seed));
    for &(id, value) in &h.entries {
        machine.counters.dictionary_ops += 1;
        let key = (value + 0.0).to_bits();
        let slot = match slots.get(&key) {
            Some(&slot) => slot,
            None => {
                machine.counters.dictionary_ops += 1;
                let slot = machine.new_slot(value);
                slots.insert(key, slot);
                slot
            }
        };
        if !machine.on_stack(slot) {
            machine.push(slot);
        }
        machine.record(slot, id);
    }
    machine.counters.peak_size = slots.len() as u64;
    machine.finish()
}

fn ordered(h: &HiddenSortedSequence) -> Result<SortedGroups> {
    let compared = Cell::new(0u64);
    let mut machine = StackMachine::default();
    let mut slots: BTreeMap<Counted<'_>, usize> = BTreeMap::new();
    for &(id, value) in &h.entries {
        let key = Counted { value: value + 0.0, tie: 0, counter: &compared };
        machine.counters.dictionary_ops += 1;
        let slot = match slots.get(&key) {
            Some(&slot) => slot,
            None => {
                machine.counters.dictionary_ops += 1;
                let slot = machine.new_slot(value);
                slots.insert(key, slot);
                slot
            }
        };
        if !machine.on_stack(slot) {
            machine.push(slot);
        }
        machine.record(slot, id);
    }
    machine.counters.peak_size = slots.len() as u64;
    machine.counters.comparisons += compared.get();
    machine.finish()
}

/// `h(x) = hi64(a * x + b) xor lo64(a * x + b)` with random odd `a`.
///
/// The high half of the product carries the multiply-shift hash; folding in
/// the low half keeps the bucket bits well mixed for keys whose low bits are
/// all zero, as is typical for `f64` bit patterns.
#[derive(Clone, Copy)]
struct MultiplyShift {
    a: u64,
    b: u64,
}

impl MultiplyShift {
    fn new(seed: u64) -> Self {
        let mut rng = rng::seeded(seed);
        MultiplyShift { a: rng.gen::<u64>() | 1, b: rng.gen() }
    }
}

impl BuildHasher for MultiplyShift {
    type Hasher = MultiplyShiftHasher;

    fn build_hasher(&self) -> MultiplyShiftHasher {
        MultiplyShiftHasher { params: *self, state: 0 }
    }
}

struct MultiplyShiftHasher {
    params: MultiplyShift,
    state: u64,
}

impl Hasher for MultiplyShiftHasher {
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut word = [0u8; 8];
            word[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(word));
        }
    }

    fn write_u64(&mut self, x: u64) {
        let p = (self.params.a as u128) * ((x ^ self.state) as u128) + self.params.b as u128;
        self.state = ((p >> 64) as u64) ^ (p as u64);
    }

    fn finish(&self) -> u64 {
        self.state
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::IntervalId;

    fn hidden(spec: &[(u32, f64)]) -> HiddenSortedSequence {
        HiddenSortedSequence::from_entries(spec.iter().map(|&(i, v)| (IntervalId(i), v)).collect())
    }

    fn both(h: &HiddenSortedSequence) -> [SortedGroups; 2] {
        [
            greedy_stack_sort(h, Dictionary::Hashed { seed: 7 }).unwrap(),
            greedy_stack_sort(h, Dictionary::Ordered).unwrap(),
        ]
    }

    #[test]
    fn worked_example() {
        let h = hidden(&[(1, 0.9), (2, 0.6), (1, 0.9), (2, 0.6), (3, 2.5)]);
        for g in both(&h) {
            assert_eq!(g.expand_values(), vec![0.6, 0.9, 2.5]);
            assert_eq!(g.expand_ids(), vec![IntervalId(2), IntervalId(1), IntervalId(3)]);
            assert_eq!(g.counters.retrievals, 3);
        }
    }

    #[test]
    fn equal_values_share_a_group() {
        let h = hidden(&[(1, 1.0), (2, 1.0), (1, 1.0), (2, 1.0)]);
        for g in both(&h) {
            assert_eq!(g.groups.len(), 1);
            assert_eq!(g.groups[0].ids, vec![IntervalId(1), IntervalId(2)]);
        }
    }

    #[test]
    fn single_and_empty() {
        for g in both(&hidden(&[(1, 0.5)])) {
            assert_eq!(g.expand_values(), vec![0.5]);
        }
        for g in both(&hidden(&[])) {
            assert!(g.groups.is_empty());
        }
    }

    #[test]
    fn rejects_sequence_without_sorted_subsequence() {
        let h = hidden(&[(1, 2.0), (2, 1.0)]);
        for dict in [Dictionary::Hashed { seed: 1 }, Dictionary::Ordered] {
            let err = greedy_stack_sort(&h, dict).unwrap_err();
            assert!(err.to_string().starts_with("not hidden-sorted"), "{err}");
        }
    }

    #[test]
    fn negative_zero_matches_zero() {
        let h = hidden(&[(1, 0.0), (2, -0.0)]);
        for g in both(&h) {
            assert_eq!(g.groups.len(), 1);
        }
    }

    #[test]
    fn ordered_dictionary_counts_its_comparisons() {
        let h = hidden(&[(1, 3.0), (2, 1.0), (3, 2.0), (1, 3.0)]);
        let [hashed, ordered] = both(&h);
        assert!(ordered.counters.comparisons > hashed.counters.comparisons);
        assert_eq!(hashed.counters.stack_ops(), ordered.counters.stack_ops());
    }
}
