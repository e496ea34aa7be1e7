//! Window decomposition of unit intervals and the `(3, 2Δ)`-smooth
//! supersequence built on it.
//!
//! Groups are formed left to right: group `i` is every not-yet-grouped
//! interval meeting its leader, and the next leader is the first interval
//! that misses the current one. Because intervals have unit length and are
//! scanned in canonical order, each group is a contiguous run. The augmented
//! group adds the prefix of the next group that reaches into the current
//! window; at most `Δ - 1` intervals qualify since they all contain the
//! window's right end.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::intervals::{ply, IntervalId, IntervalSet};
use crate::universal_word::universal_word;

use super::{Provenance, SuperSequence, UNIT_ALPHA};

#[derive(Debug, Clone, PartialEq)]
pub struct WindowDecomposition {
    /// Canonical-position ranges of the groups.
    pub groups: Vec<Range<usize>>,
    /// Canonical position of the next group's leader (`None` for the last group).
    pub separators: Vec<Option<usize>>,
    /// Union extent `[left, right]` of each group.
    pub windows: Vec<(f64, f64)>,
    /// Canonical-position ranges of the augmented groups; each is a group
    /// followed by the members of the next group that meet its window.
    pub augmented: Vec<Range<usize>>,
    ids: Vec<IntervalId>,
}

impl WindowDecomposition {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group_ids(&self, i: usize) -> &[IntervalId] {
        &self.ids[self.groups[i].clone()]
    }

    pub fn augmented_ids(&self, i: usize) -> &[IntervalId] {
        &self.ids[self.augmented[i].clone()]
    }
}

pub fn window_decomposition(set: &IntervalSet) -> Result<WindowDecomposition> {
    set.require_unit()?;
    let members = set.intervals();
    let n = members.len();
    let mut groups = Vec::new();
    let mut leader = 0;
    while leader < n {
        let reach = members[leader].right;
        let mut end = leader + 1;
        while end < n && members[end].left <= reach {
            end += 1;
        }
        groups.push(leader..end);
        leader = end;
    }
    let separators = (0..groups.len())
        .map(|i| groups.get(i + 1).map(|g: &Range<usize>| g.start))
        .collect();
    let windows: Vec<(f64, f64)> = groups
        .iter()
        .map(|g| {
            let right = members[g.clone()].iter().map(|iv| iv.right).fold(f64::MIN, f64::max);
            (members[g.start].left, right)
        })
        .collect();
    let augmented = groups
        .iter()
        .zip(&windows)
        .map(|(g, &(_, window_right))| {
            let mut end = g.end;
            while end < n && members[end].left <= window_right {
                end += 1;
            }
            g.start..end
        })
        .collect();
    Ok(WindowDecomposition {
        groups,
        separators,
        windows,
        augmented,
        ids: set.ids().collect(),
    })
}

/// Concatenation, in window order, of the block universal word over each
/// augmented group. Length is at most `4Δn`; the sequence is
/// `(3, 2Δ)`-smooth by construction and every occurrence is marked.
pub fn build_unit_supersequence(set: &IntervalSet) -> Result<SuperSequence> {
    let delta = ply(set)?;
    let decomposition = window_decomposition(set)?;
    let mut ids = Vec::new();
    for i in 0..decomposition.len() {
        let members = decomposition.augmented_ids(i);
        ids.extend(universal_word(members.len()).map(members));
    }
    let bound = 4 * delta * set.len();
    if ids.len() > bound {
        return Err(Error::SequenceMismatch(format!(
            "unit supersequence of length {} exceeds 4Δn = {bound}",
            ids.len()
        )));
    }
    Ok(SuperSequence::all_marked(
        Provenance::Unit,
        ids,
        Some(UNIT_ALPHA),
        Some(2.0 * delta as f64),
        set.len(),
        delta,
    ))
}
