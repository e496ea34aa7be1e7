use serde::{Deserialize, Serialize};

/// Operation counts reported by every sorting and reconstruction routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counters {
    /// Value comparisons, including those made inside dictionaries and heaps.
    pub comparisons: u64,
    /// Dictionary lookups, inserts, updates and evictions.
    pub dictionary_ops: u64,
    pub pushes: u64,
    pub pops: u64,
    /// Distinct intervals whose value was read.
    pub retrievals: u64,
    /// Largest size reached by the auxiliary structure (window, dictionary or queue).
    pub peak_size: u64,
}

impl Counters {
    pub fn stack_ops(&self) -> u64 {
        self.pushes + self.pops
    }

    /// Sums counts and keeps the larger peak.
    pub fn absorb(&mut self, other: &Counters) {
        self.comparisons += other.comparisons;
        self.dictionary_ops += other.dictionary_ops;
        self.pushes += other.pushes;
        self.pops += other.pops;
        self.retrievals += other.retrievals;
        self.peak_size = self.peak_size.max(other.peak_size);
    }
}
