use std::collections::HashSet;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::intervals::{Group, IntervalId, SortedGroups};

/// One distinct value seen so far: the ids recorded for it and whether it
/// currently sits on the stack.
struct Slot {
    value: f64,
    ids: Vec<IntervalId>,
    on_stack: bool,
}

/// Monotone stack over value slots, shared by the stack-based algorithms.
///
/// The stack holds slot indices with strictly increasing values; pushing `v`
/// first pops every slot whose value exceeds `v`. Each id is recorded once,
/// on the slot of its first occurrence.
#[derive(Default)]
pub(crate) struct StackMachine {
    slots: Vec<Slot>,
    stack: Vec<usize>,
    recorded: HashSet<IntervalId>,
    pub counters: Counters,
}

impl StackMachine {
    pub fn new_slot(&mut self, value: f64) -> usize {
        self.slots.push(Slot { value, ids: Vec::new(), on_stack: false });
        self.slots.len() - 1
    }

    pub fn on_stack(&self, slot: usize) -> bool {
        self.slots[slot].on_stack
    }

    pub fn record(&mut self, slot: usize, id: IntervalId) {
        if self.recorded.insert(id) {
            self.slots[slot].ids.push(id);
        }
    }

    /// Pops every slot whose value exceeds the value of `slot`, then pushes it.
    pub fn push(&mut self, slot: usize) {
        let v = self.slots[slot].value;
        while let Some(&top) = self.stack.last() {
            self.counters.comparisons += 1;
            if self.slots[top].value <= v {
                break;
            }
            self.stack.pop();
            self.slots[top].on_stack = false;
            self.counters.pops += 1;
        }
        self.stack.push(slot);
        self.slots[slot].on_stack = true;
        self.counters.pushes += 1;
    }

    /// Final stack contents, bottom to top. Fails unless every recorded id
    /// survived, which is exactly when the input was a hidden sorted sequence.
    pub fn finish(self) -> Result<SortedGroups> {
        let distinct = self.recorded.len();
        let mut slots: Vec<Option<Slot>> = self.slots.into_iter().map(Some).collect();
        let groups: Vec<Group> = self
            .stack
            .iter()
            .filter_map(|&s| slots[s].take())
            .filter(|slot| !slot.ids.is_empty())
            .map(|slot| Group { value: slot.value, ids: slot.ids })
            .collect();
        let emitted: usize = groups.iter().map(|g| g.ids.len()).sum();
        if emitted != distinct {
            let lost: Vec<String> = slots
                .into_iter()
                .flatten()
                .flat_map(|s| s.ids)
                .take(3)
                .map(|id| id.to_string())
                .collect();
            return Err(Error::NotHiddenSorted(format!(
                "{} of {distinct} ids were popped for good (e.g. {})",
                distinct - emitted,
                lost.join(", ")
            )));
        }
        Ok(SortedGroups { groups, counters: self.counters })
    }
}
