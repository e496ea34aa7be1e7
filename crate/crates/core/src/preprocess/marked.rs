use crate::error::Result;
use crate::intervals::{ply, IntervalId, IntervalSet};

use super::windows::build_unit_supersequence;
use super::{Occurrence, Provenance, SuperSequence, UNIT_ALPHA};

/// Marked supersequence for unit intervals.
///
/// An interval is marked iff it meets at least one other interval; isolated
/// intervals appear once, unmarked, in canonical position. Each maximal run
/// of marked intervals (a cluster) is expanded with the unit construction
/// and carries its own `(3, 2Δ_cluster)` parameters.
pub fn build_marked_supersequence(set: &IntervalSet) -> Result<SuperSequence> {
    let delta = ply(set)?;
    set.require_unit()?;
    let members = set.intervals();
    let n = members.len();

    let mut marked = vec![false; n];
    let mut reach = f64::NEG_INFINITY;
    for k in 0..n {
        let hits_earlier = reach >= members[k].left;
        let hits_later = k + 1 < n && members[k + 1].left <= members[k].right;
        marked[k] = hits_earlier || hits_later;
        reach = reach.max(members[k].right);
    }

    let mut occurrences = Vec::new();
    let mut params = Vec::new();
    let mut previous_reach: Option<f64> = None;
    let mut k = 0;
    while k < n {
        if !marked[k] {
            occurrences.push(Occurrence { id: members[k].id, marked: false });
            k += 1;
            continue;
        }
        let start = k;
        while k < n && marked[k] {
            k += 1;
        }
        let cluster = &members[start..k];
        if let Some(prev) = previous_reach {
            assert!(prev < cluster[0].left, "marked clusters must not intersect each other");
        }
        previous_reach = Some(cluster.iter().map(|iv| iv.right).fold(f64::MIN, f64::max));

        let ids: Vec<IntervalId> = cluster.iter().map(|iv| iv.id).collect();
        let sub = build_unit_supersequence(&set.subset(&ids)?)?;
        occurrences.extend(sub.ids().map(|id| Occurrence { id, marked: true }));
        params.push((sub.alpha(), sub.beta()));
    }
    Ok(SuperSequence::new(
        Provenance::Marked,
        occurrences,
        Some(UNIT_ALPHA),
        Some(2.0 * delta as f64),
        n,
        delta,
    )
    .with_cluster_params(&params))
}
