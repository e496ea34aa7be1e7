//! Preprocessing: sorting-supersequences and gap-omission structures.
//!
//! A sorting-supersequence lists (possibly repeated) interval ids such that,
//! for every realization, the ids in sorted value order appear in it as a
//! subsequence.

mod gaps;
mod general;
mod marked;
mod windows;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::intervals::IntervalId;

pub use gaps::{
    largest_gap_lower_bound, omit_for_largest_gap, omit_for_smallest_gap,
    smallest_gap_upper_bound, GapKind, GapPrep, GapVariant, GapWitness,
};
pub use general::build_general_supersequence;
pub use marked::build_marked_supersequence;
pub use windows::{build_unit_supersequence, window_decomposition, WindowDecomposition};

/// Distance parameter of the unit-interval construction.
pub const UNIT_ALPHA: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Unit,
    General,
    Marked,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Unit => "unit",
            Provenance::General => "general",
            Provenance::Marked => "marked",
        })
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unit" => Ok(Provenance::Unit),
            "general" => Ok(Provenance::General),
            "marked" => Ok(Provenance::Marked),
            other => Err(format!("unknown provenance {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub id: IntervalId,
    pub marked: bool,
}

/// A maximal run of marked occurrences `start..end`, with the smoothness
/// parameters that hold for its realizations (if known).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub start: usize,
    pub end: usize,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

impl Cluster {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperSequence {
    occurrences: Vec<Occurrence>,
    next_marked: Vec<Option<usize>>,
    clusters: Vec<Cluster>,
    alpha: Option<f64>,
    beta: Option<f64>,
    provenance: Provenance,
    n: usize,
    delta: usize,
}

impl SuperSequence {
    /// Assembles a sequence and derives its next-marked pointers and clusters.
    /// Every cluster inherits the sequence-wide `(alpha, beta)`.
    pub fn new(
        provenance: Provenance,
        occurrences: Vec<Occurrence>,
        alpha: Option<f64>,
        beta: Option<f64>,
        n: usize,
        delta: usize,
    ) -> Self {
        let mut next_marked = vec![None; occurrences.len()];
        let mut upcoming = None;
        for pos in (0..occurrences.len()).rev() {
            next_marked[pos] = upcoming;
            if occurrences[pos].marked {
                upcoming = Some(pos);
            }
        }
        let mut clusters = Vec::new();
        let mut pos = 0;
        while pos < occurrences.len() {
            if !occurrences[pos].marked {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < occurrences.len() && occurrences[pos].marked {
                pos += 1;
            }
            clusters.push(Cluster { start, end: pos, alpha, beta });
        }
        SuperSequence { occurrences, next_marked, clusters, alpha, beta, provenance, n, delta }
    }

    /// Sequence where every occurrence is marked.
    pub fn all_marked(
        provenance: Provenance,
        ids: Vec<IntervalId>,
        alpha: Option<f64>,
        beta: Option<f64>,
        n: usize,
        delta: usize,
    ) -> Self {
        let occurrences = ids.into_iter().map(|id| Occurrence { id, marked: true }).collect();
        Self::new(provenance, occurrences, alpha, beta, n, delta)
    }

    /// Overrides per-cluster smoothness parameters; `params[c]` applies to
    /// the `c`-th cluster.
    pub fn with_cluster_params(mut self, params: &[(Option<f64>, Option<f64>)]) -> Self {
        assert_eq!(params.len(), self.clusters.len(), "one parameter pair per cluster");
        for (cluster, &(alpha, beta)) in self.clusters.iter_mut().zip(params) {
            cluster.alpha = alpha;
            cluster.beta = beta;
        }
        self
    }

    pub fn occurrences(&self) -> &[Occurrence] {
        &self.occurrences
    }

    pub fn ids(&self) -> impl Iterator<Item = IntervalId> + '_ {
        self.occurrences.iter().map(|o| o.id)
    }

    pub fn len(&self) -> usize {
        self.occurrences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occurrences.is_empty()
    }

    /// Position of the first marked occurrence strictly after `pos`.
    pub fn next_marked(&self, pos: usize) -> Option<usize> {
        self.next_marked[pos]
    }

    pub fn next_marked_pointers(&self) -> &[Option<usize>] {
        &self.next_marked
    }

    pub fn first_marked(&self) -> Option<usize> {
        match self.occurrences.first() {
            Some(o) if o.marked => Some(0),
            Some(_) => self.next_marked[0],
            None => None,
        }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    pub fn beta(&self) -> Option<f64> {
        self.beta
    }

    pub fn smoothness(&self) -> Option<(f64, f64)> {
        self.alpha.zip(self.beta)
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Number of intervals in the source set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ply of the source set.
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn marked_count(&self) -> usize {
        self.occurrences.iter().filter(|o| o.marked).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn occ(spec: &[(u32, bool)]) -> Vec<Occurrence> {
        spec.iter().map(|&(id, marked)| Occurrence { id: IntervalId(id), marked }).collect()
    }

    #[test]
    fn next_marked_pointers_and_clusters() {
        let seq = SuperSequence::new(
            Provenance::Marked,
            occ(&[(1, true), (2, true), (3, false), (4, false), (5, true)]),
            Some(3.0),
            Some(4.0),
            5,
            2,
        );
        assert_eq!(seq.next_marked_pointers(), &[Some(1), Some(4), Some(4), Some(4), None]);
        assert_eq!(seq.first_marked(), Some(0));
        let spans: Vec<(usize, usize)> = seq.clusters().iter().map(|c| (c.start, c.end)).collect();
        assert_eq!(spans, vec![(0, 2), (4, 5)]);
        assert_eq!(seq.marked_count(), 3);
    }

    #[test]
    fn unmarked_prefix() {
        let seq = SuperSequence::new(
            Provenance::Marked,
            occ(&[(1, false), (2, true)]),
            None,
            None,
            2,
            1,
        );
        assert_eq!(seq.first_marked(), Some(1));
        assert_eq!(seq.clusters().len(), 1);
    }
}
