use crate::error::Result;
use crate::intervals::{ply, IntervalSet};
use crate::universal_word::universal_word;

use super::{Provenance, SuperSequence};

/// Supersequence for arbitrary intervals: one block universal word per
/// closed elementary cell `[e_j, e_{j+1}]` between consecutive distinct
/// endpoints, over the intervals meeting that cell.
///
/// An interval meets a cell iff it contains one of the cell's endpoints, so
/// each cell has at most `2Δ` members and the length is at most
/// `(2n - 1)(2Δ)^2 <= 8nΔ^2`. No smoothness parameters are recorded.
pub fn build_general_supersequence(set: &IntervalSet) -> Result<SuperSequence> {
    let delta = ply(set)?;
    let members = set.intervals();
    let mut endpoints: Vec<f64> = members.iter().flat_map(|iv| [iv.left, iv.right]).collect();
    endpoints.sort_by(f64::total_cmp);
    endpoints.dedup();

    // containing[j] = canonical positions of intervals containing endpoints[j]
    let mut containing: Vec<Vec<usize>> = Vec::with_capacity(endpoints.len());
    let mut active: Vec<usize> = Vec::new();
    let mut next = 0;
    for &e in &endpoints {
        while next < members.len() && members[next].left <= e {
            active.push(next);
            next += 1;
        }
        active.retain(|&pos| members[pos].right >= e);
        containing.push(active.clone());
    }

    let mut ids = Vec::new();
    let mut emit = |mut cell: Vec<usize>| {
        cell.sort_unstable();
        cell.dedup();
        let cell_ids: Vec<_> = cell.iter().map(|&pos| members[pos].id).collect();
        ids.extend(universal_word(cell_ids.len()).map(&cell_ids));
    };
    if containing.len() == 1 {
        emit(containing[0].clone());
    }
    for pair in containing.windows(2) {
        emit(pair[0].iter().chain(&pair[1]).copied().collect());
    }
    Ok(SuperSequence::all_marked(Provenance::General, ids, None, None, set.len(), delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::IntervalId;

    fn set(bounds: &[(f64, f64)]) -> IntervalSet {
        IntervalSet::from_bounds(bounds).unwrap()
    }

    #[test]
    fn cells_with_nested_intervals() {
        // cells [0,1],[1,2],[2,3],[3,4],[4,5]; members {A,B},{A,B},{A,B,C},{A,C},{A,C}
        let seq = build_general_supersequence(&set(&[(0.0, 4.0), (1.0, 2.0), (3.0, 5.0)])).unwrap();
        assert_eq!(seq.len(), 4 + 4 + 9 + 4 + 4);
        assert_eq!(seq.alpha(), None);
        assert_eq!(seq.marked_count(), seq.len());
    }

    #[test]
    fn single_interval_single_cell() {
        let seq = build_general_supersequence(&set(&[(0.0, 1.0)])).unwrap();
        assert_eq!(seq.ids().collect::<Vec<_>>(), vec![IntervalId(1)]);
    }

    #[test]
    fn overlapping_pair() {
        // closed cells: [0,1] meets [1,3] at 1, so every cell has both members
        let seq = build_general_supersequence(&set(&[(0.0, 2.0), (1.0, 3.0)])).unwrap();
        assert_eq!(seq.len(), 12);
        let raw: Vec<u32> = seq.ids().map(|id| id.0).collect();
        assert_eq!(raw, [1, 2, 1, 2].repeat(3));
    }

    #[test]
    fn degenerate_point_set() {
        let seq = build_general_supersequence(&set(&[(2.0, 2.0), (2.0, 2.0)])).unwrap();
        assert_eq!(seq.len(), 4);
    }
}
