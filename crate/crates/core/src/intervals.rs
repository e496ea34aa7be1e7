//! Closed intervals, realizations, and the sorted-group output type.
//!
//! An [`IntervalSet`] stores its members in canonical order: ascending left
//! endpoint, ties broken by id. Every other module indexes intervals by their
//! position in that order. Values are compared exactly as given; generated
//! instances use dyadic endpoints so that all arithmetic stays exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::rng;

/// Identity of an uncertain region. Rendered as `I<n>`; parsing accepts
/// either `I<n>` or a bare integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalId(pub u32);

impl fmt::Display for IntervalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.0)
    }
}

impl FromStr for IntervalId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let digits = s.strip_prefix('I').unwrap_or(s);
        digits
            .parse::<u32>()
            .map(IntervalId)
            .map_err(|_| format!("invalid interval id {s:?}"))
    }
}

impl Serialize for IntervalId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntervalId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A closed interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub id: IntervalId,
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(id: u32, left: f64, right: f64) -> Result<Self> {
        Self::with_id(IntervalId(id), left, right)
    }

    pub fn with_id(id: IntervalId, left: f64, right: f64) -> Result<Self> {
        if !(left.is_finite() && right.is_finite() && left <= right) {
            return Err(Error::InvalidInterval { id, left, right });
        }
        Ok(Interval { id, left, right })
    }

    pub fn length(&self) -> f64 {
        self.right - self.left
    }

    pub fn contains(&self, p: f64) -> bool {
        self.left <= p && p <= self.right
    }

    /// Closed intersection test; touching endpoints intersect.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    /// Unit length in floating-point terms: `left + 1 == right`.
    pub fn is_unit(&self) -> bool {
        self.left + 1.0 == self.right
    }
}

/// A set of intervals with distinct ids, kept in canonical `(left, id)` order.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
    index: HashMap<IntervalId, usize>,
}

impl IntervalSet {
    pub fn new(mut intervals: Vec<Interval>) -> Result<Self> {
        intervals.sort_by(|a, b| a.left.total_cmp(&b.left).then(a.id.cmp(&b.id)));
        let mut index = HashMap::with_capacity(intervals.len());
        for (pos, iv) in intervals.iter().enumerate() {
            Interval::with_id(iv.id, iv.left, iv.right)?;
            if index.insert(iv.id, pos).is_some() {
                return Err(Error::DuplicateId(iv.id));
            }
        }
        Ok(IntervalSet { intervals, index })
    }

    /// Builds a set from `(left, right)` pairs, numbering ids from 1 in the
    /// given order.
    pub fn from_bounds(bounds: &[(f64, f64)]) -> Result<Self> {
        let intervals = bounds
            .iter()
            .enumerate()
            .map(|(i, &(l, r))| Interval::new(i as u32 + 1, l, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(intervals)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Members in canonical order.
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    pub fn get(&self, id: IntervalId) -> Option<&Interval> {
        self.index.get(&id).map(|&pos| &self.intervals[pos])
    }

    /// Canonical position of `id`.
    pub fn position(&self, id: IntervalId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = IntervalId> + '_ {
        self.intervals.iter().map(|iv| iv.id)
    }

    pub fn is_unit(&self) -> bool {
        self.intervals.iter().all(Interval::is_unit)
    }

    pub(crate) fn require_unit(&self) -> Result<()> {
        match self.intervals.iter().find(|iv| !iv.is_unit()) {
            Some(iv) => Err(Error::UnitLengthRequired { id: iv.id, length: iv.length() }),
            None => Ok(()),
        }
    }

    /// The members whose ids appear in `ids`, in canonical order.
    pub fn subset(&self, ids: &[IntervalId]) -> Result<IntervalSet> {
        let members = ids
            .iter()
            .map(|&id| self.get(id).copied().ok_or(Error::UnknownInterval(id)))
            .collect::<Result<Vec<_>>>()?;
        IntervalSet::new(members)
    }
}

/// Maximum number of intervals sharing a common point.
///
/// Endpoint sweep where, at equal coordinates, left endpoints open before
/// right endpoints close.
pub fn ply(set: &IntervalSet) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::EmptyInstance);
    }
    // (coordinate, 0 = open, 1 = close)
    let mut events: Vec<(f64, u8)> = Vec::with_capacity(2 * set.len());
    for iv in set.iter() {
        events.push((iv.left, 0));
        events.push((iv.right, 1));
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let (mut open, mut best) = (0usize, 0usize);
    for (_, kind) in events {
        if kind == 0 {
            open += 1;
            best = best.max(open);
        } else {
            open -= 1;
        }
    }
    Ok(best)
}

/// Shape of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    /// Every interval has length exactly 1.
    Unit,
    /// Mixed lengths in `[0, 4]`, degenerate intervals included.
    General,
}

impl FromStr for InstanceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "unit" => Ok(InstanceKind::Unit),
            "general" => Ok(InstanceKind::General),
            other => Err(format!("unknown instance kind {other:?}")),
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceKind::Unit => "unit",
            InstanceKind::General => "general",
        })
    }
}

/// Coordinate grid for generated instances: multiples of `2^-exp`, fine
/// enough to pack `target_ply` left endpoints into half a unit.
fn quantum(target_ply: usize) -> f64 {
    let mut exp = 4;
    while (1usize << exp) < 2 * target_ply {
        exp += 1;
    }
    (-(exp as f64)).exp2()
}

/// Deterministic random instance with ply exactly `target_ply` (the instance
/// always contains one block of `target_ply` mutually overlapping intervals).
///
/// All endpoints are dyadic, so sums and differences of endpoints are exact.
pub fn generate_instance(
    kind: InstanceKind,
    n: usize,
    target_ply: usize,
    seed: u64,
) -> Result<IntervalSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1"));
    }
    if target_ply == 0 {
        return Err(Error::InvalidArgument("target ply must be at least 1"));
    }
    if target_ply > n {
        return Err(Error::InfeasiblePly { target: target_ply, n });
    }
    let mut rng = rng::seeded(seed);
    let q = quantum(target_ply);
    let max_step = ((2.0 / target_ply as f64) / q).ceil() as u64;
    let clique_start = rng.gen_range(0..=n - target_ply);
    let clique = clique_start..clique_start + target_ply;

    let bounds = match kind {
        InstanceKind::Unit => {
            let mut lefts: Vec<f64> = Vec::with_capacity(n);
            for k in 0..n {
                let left = if k == 0 {
                    0.0
                } else if k == clique.start {
                    lefts[k - 1] + 1.0 + q
                } else if clique.contains(&k) {
                    lefts[k - 1] + q
                } else {
                    let stepped = lefts[k - 1] + q * rng.gen_range(0..=max_step) as f64;
                    // no target_ply + 1 lefts inside one closed unit window
                    match k.checked_sub(target_ply) {
                        Some(j) => stepped.max(lefts[j] + 1.0 + q),
                        None => stepped,
                    }
                };
                lefts.push(left);
            }
            lefts.into_iter().map(|l| (l, l + 1.0)).collect::<Vec<_>>()
        }
        InstanceKind::General => {
            let max_len = (4.0 / q) as u64;
            let mut bounds: Vec<(f64, f64)> = Vec::with_capacity(n);
            let mut active: Vec<f64> = Vec::new();
            let mut max_right = f64::NEG_INFINITY;
            let mut x = 0.0;
            for k in 0..n {
                let length;
                if clique.contains(&k) {
                    if k == clique.start && k > 0 {
                        x = max_right + q;
                    } else if k > clique.start {
                        x += q;
                    }
                    length = q * rng.gen_range((1.0 / q) as u64..=max_len) as f64;
                } else {
                    if k > 0 {
                        x += q * rng.gen_range(0..=max_step) as f64;
                    }
                    length = q * rng.gen_range(0..=max_len) as f64;
                }
                active.retain(|&r| r >= x);
                if active.len() == target_ply {
                    let earliest = active.iter().copied().fold(f64::INFINITY, f64::min);
                    x = earliest + q;
                    active.retain(|&r| r >= x);
                }
                let right = x + length;
                active.push(right);
                max_right = max_right.max(right);
                bounds.push((x, right));
            }
            bounds
        }
    };
    IntervalSet::from_bounds(&bounds)
}

/// An assignment of one value per interval id.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Realization {
    values: BTreeMap<IntervalId, f64>,
}

impl Realization {
    /// Wraps raw values without checking them against any set.
    pub fn from_values(values: BTreeMap<IntervalId, f64>) -> Self {
        Realization { values }
    }

    /// Builds a realization and checks it against `set`.
    pub fn new(set: &IntervalSet, values: BTreeMap<IntervalId, f64>) -> Result<Self> {
        let r = Realization { values };
        r.validate(set)?;
        Ok(r)
    }

    /// Realization of `set` in canonical order from a slice of values.
    pub fn from_slice(set: &IntervalSet, values: &[f64]) -> Result<Self> {
        if values.len() != set.len() {
            return Err(Error::InvalidArgument("one value per interval required"));
        }
        Self::new(set, set.ids().zip(values.iter().copied()).collect())
    }

    /// Domain equals the id set of `set` and every value lies in its interval.
    pub fn validate(&self, set: &IntervalSet) -> Result<()> {
        for iv in set.iter() {
            let v = *self.values.get(&iv.id).ok_or(Error::MissingValue(iv.id))?;
            if !iv.contains(v) {
                return Err(Error::ValueOutsideInterval { id: iv.id, value: v });
            }
        }
        if let Some(&id) = self.values.keys().find(|id| set.get(**id).is_none()) {
            return Err(Error::UnknownInterval(id));
        }
        Ok(())
    }

    pub fn get(&self, id: IntervalId) -> Option<f64> {
        self.values.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(id, value)` pairs in id order.
    pub fn iter(&self) -> impl Iterator<Item = (IntervalId, f64)> + '_ {
        self.values.iter().map(|(&id, &v)| (id, v))
    }

    /// Restriction to the given ids.
    pub fn restrict(&self, ids: &[IntervalId]) -> Result<Realization> {
        let values = ids
            .iter()
            .map(|&id| self.get(id).map(|v| (id, v)).ok_or(Error::UnrealizedInterval(id)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Realization { values })
    }
}

/// How [`sample_realization`] places points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Uniform,
    LeftEndpoints,
    RightEndpoints,
    /// Within every run of intervals sharing a common point, realized order
    /// is the reverse of canonical order.
    AdversarialReverse,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Uniform,
        Strategy::LeftEndpoints,
        Strategy::RightEndpoints,
        Strategy::AdversarialReverse,
    ];
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Strategy::Uniform),
            "left-endpoints" => Ok(Strategy::LeftEndpoints),
            "right-endpoints" => Ok(Strategy::RightEndpoints),
            "adversarial-reverse" => Ok(Strategy::AdversarialReverse),
            other => Err(format!("unknown strategy {other:?}")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Uniform => "uniform",
            Strategy::LeftEndpoints => "left-endpoints",
            Strategy::RightEndpoints => "right-endpoints",
            Strategy::AdversarialReverse => "adversarial-reverse",
        })
    }
}

/// Uniform grid resolution inside each interval, as a power of two.
const UNIFORM_STEPS: u32 = 1 << 10;

pub fn sample_realization(set: &IntervalSet, strategy: Strategy, seed: u64) -> Realization {
    let mut values = BTreeMap::new();
    match strategy {
        Strategy::Uniform => {
            let mut rng = rng::seeded(seed);
            for iv in set.iter() {
                let step = rng.gen_range(0..=UNIFORM_STEPS) as f64 / UNIFORM_STEPS as f64;
                let v = (iv.left + iv.length() * step).clamp(iv.left, iv.right);
                values.insert(iv.id, v);
            }
        }
        Strategy::LeftEndpoints => values.extend(set.iter().map(|iv| (iv.id, iv.left))),
        Strategy::RightEndpoints => values.extend(set.iter().map(|iv| (iv.id, iv.right))),
        Strategy::AdversarialReverse => {
            let members = set.intervals();
            let mut start = 0;
            while start < members.len() {
                // grow a run while the common intersection [lo, hi] stays non-empty
                let (mut lo, mut hi) = (members[start].left, members[start].right);
                let mut end = start + 1;
                while end < members.len() && members[end].left <= hi {
                    lo = members[end].left;
                    hi = hi.min(members[end].right);
                    end += 1;
                }
                let k = end - start;
                let slots = (k.max(2) - 1).next_power_of_two() as f64;
                let step = (hi - lo) / slots;
                for (j, iv) in members[start..end].iter().enumerate() {
                    values.insert(iv.id, (hi - step * j as f64).max(lo));
                }
                start = end;
            }
        }
    }
    Realization { values }
}

/// One distinct value and the intervals realized to it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Group {
    pub value: f64,
    pub ids: Vec<IntervalId>,
}

/// Sorted order of a realization: strictly increasing values, each with the
/// ids realized to it.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SortedGroups {
    pub groups: Vec<Group>,
    pub counters: Counters,
}

impl SortedGroups {
    /// Collapses an already sorted `(id, value)` stream into groups.
    pub fn from_sorted<I: IntoIterator<Item = (IntervalId, f64)>>(points: I) -> Self {
        let mut groups: Vec<Group> = Vec::new();
        for (id, value) in points {
            match groups.last_mut() {
                Some(g) if g.value == value => g.ids.push(id),
                _ => groups.push(Group { value, ids: vec![id] }),
            }
        }
        SortedGroups { groups, counters: Counters::default() }
    }

    /// Non-decreasing values, one per id.
    pub fn expand_values(&self) -> Vec<f64> {
        self.groups
            .iter()
            .flat_map(|g| std::iter::repeat(g.value).take(g.ids.len()))
            .collect()
    }

    pub fn expand_ids(&self) -> Vec<IntervalId> {
        self.groups.iter().flat_map(|g| g.ids.iter().copied()).collect()
    }

    pub fn point_count(&self) -> usize {
        self.groups.iter().map(|g| g.ids.len()).sum()
    }
}

/// From-scratch comparison sort of a realization (stable top-down merge
/// sort); counts element comparisons only.
pub fn sort_baseline(r: &Realization) -> SortedGroups {
    let mut points: Vec<(IntervalId, f64)> = r.iter().collect();
    let mut scratch = points.clone();
    let mut comparisons = 0u64;
    merge_sort(&mut points, &mut scratch, &mut comparisons);
    let mut out = SortedGroups::from_sorted(points);
    out.counters.comparisons = comparisons;
    out.counters.retrievals = r.len() as u64;
    out
}

fn merge_sort(items: &mut [(IntervalId, f64)], scratch: &mut [(IntervalId, f64)], cmps: &mut u64) {
    let n = items.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    merge_sort(&mut items[..mid], &mut scratch[..mid], cmps);
    merge_sort(&mut items[mid..], &mut scratch[mid..], cmps);
    scratch[..n].copy_from_slice(items);
    let (left, right) = scratch[..n].split_at(mid);
    let (mut i, mut j) = (0, 0);
    for slot in items.iter_mut() {
        let take_left = if i == left.len() {
            false
        } else if j == right.len() {
            true
        } else {
            *cmps += 1;
            left[i].1 <= right[j].1
        };
        if take_left {
            *slot = left[i];
            i += 1;
        } else {
            *slot = right[j];
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(bounds: &[(f64, f64)]) -> IntervalSet {
        IntervalSet::from_bounds(bounds).unwrap()
    }

    #[test]
    fn ply_examples() {
        assert_eq!(ply(&set(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)])).unwrap(), 2);
        assert_eq!(ply(&set(&[(0.0, 1.0)])).unwrap(), 1);
        assert_eq!(ply(&set(&[(0.0, 1.0), (1.0, 2.0)])).unwrap(), 2);
    }

    #[test]
    fn ply_of_empty_set_is_an_error() {
        let err = ply(&IntervalSet::new(vec![]).unwrap()).unwrap_err();
        assert_eq!(err.to_string(), "empty instance");
    }

    #[test]
    fn canonical_order_breaks_ties_by_id() {
        let s = IntervalSet::new(vec![
            Interval::new(3, 0.0, 1.0).unwrap(),
            Interval::new(1, 0.0, 2.0).unwrap(),
            Interval::new(2, -1.0, 0.0).unwrap(),
        ])
        .unwrap();
        let ids: Vec<u32> = s.ids().map(|id| id.0).collect();
        assert_eq!(ids, vec![2, 1, 3]);
        assert_eq!(s.position(IntervalId(3)), Some(2));
    }

    #[test]
    fn rejects_duplicate_ids_and_reversed_bounds() {
        let dup = IntervalSet::new(vec![
            Interval::new(1, 0.0, 1.0).unwrap(),
            Interval::new(1, 2.0, 3.0).unwrap(),
        ]);
        assert!(matches!(dup, Err(Error::DuplicateId(_))));
        assert!(Interval::new(1, 2.0, 1.0).is_err());
        assert!(Interval::new(1, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn id_parsing_accepts_both_spellings() {
        assert_eq!("I7".parse::<IntervalId>().unwrap(), IntervalId(7));
        assert_eq!("7".parse::<IntervalId>().unwrap(), IntervalId(7));
        assert!("J7".parse::<IntervalId>().is_err());
        assert_eq!(IntervalId(7).to_string(), "I7");
    }

    #[test]
    fn generator_examples() {
        let s = generate_instance(InstanceKind::Unit, 3, 1, 7).unwrap();
        assert!(s.is_unit());
        assert_eq!(ply(&s).unwrap(), 1);
        let members = s.intervals();
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(!members[i].intersects(&members[j]));
            }
        }

        let s = generate_instance(InstanceKind::Unit, 50, 4, 1).unwrap();
        assert!(s.is_unit());
        assert_eq!(ply(&s).unwrap(), 4);

        let s = generate_instance(InstanceKind::General, 10, 3, 2).unwrap();
        assert!(ply(&s).unwrap() <= 3);
    }

    #[test]
    fn generator_rejects_infeasible_ply() {
        let err = generate_instance(InstanceKind::Unit, 3, 4, 0).unwrap_err();
        assert!(err.to_string().starts_with("infeasible ply"));
    }

    #[test]
    fn generator_is_deterministic() {
        let a = generate_instance(InstanceKind::General, 40, 3, 9).unwrap();
        let b = generate_instance(InstanceKind::General, 40, 3, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn realization_examples() {
        let s = set(&[(0.0, 1.0)]);
        let r = sample_realization(&s, Strategy::LeftEndpoints, 0);
        assert_eq!(r.get(IntervalId(1)), Some(0.0));

        let s = set(&[(0.0, 1.0), (0.5, 1.5)]);
        let r = sample_realization(&s, Strategy::AdversarialReverse, 0);
        let (p1, p2) = (r.get(IntervalId(1)).unwrap(), r.get(IntervalId(2)).unwrap());
        assert!(p1 > p2);
        assert_eq!((p1, p2), (1.0, 0.5));
        r.validate(&s).unwrap();

        let s = set(&[(0.0, 1.0), (2.0, 3.0)]);
        let r = sample_realization(&s, Strategy::Uniform, 5);
        r.validate(&s).unwrap();
    }

    #[test]
    fn adversarial_reverse_reverses_each_run() {
        let s = set(&[(0.0, 1.0), (0.25, 1.25), (0.5, 1.5), (3.0, 4.0), (3.5, 4.5)]);
        let r = sample_realization(&s, Strategy::AdversarialReverse, 0);
        r.validate(&s).unwrap();
        let v: Vec<f64> = s.ids().map(|id| r.get(id).unwrap()).collect();
        assert!(v[0] > v[1] && v[1] > v[2]);
        assert!(v[3] > v[4]);
    }

    #[test]
    fn validate_catches_bad_realizations() {
        let s = set(&[(0.0, 1.0)]);
        let outside = Realization::from_values([(IntervalId(1), 2.0)].into());
        assert!(matches!(outside.validate(&s), Err(Error::ValueOutsideInterval { .. })));
        let missing = Realization::from_values(BTreeMap::new());
        assert!(matches!(missing.validate(&s), Err(Error::MissingValue(_))));
        let extra = Realization::from_values([(IntervalId(1), 0.5), (IntervalId(2), 0.5)].into());
        assert!(matches!(extra.validate(&s), Err(Error::UnknownInterval(_))));
    }

    #[test]
    fn baseline_examples() {
        let r = Realization::from_values(
            [(IntervalId(1), 2.5), (IntervalId(2), 0.6), (IntervalId(3), 0.9)].into(),
        );
        let g = sort_baseline(&r);
        let got: Vec<(f64, Vec<u32>)> =
            g.groups.iter().map(|g| (g.value, g.ids.iter().map(|i| i.0).collect())).collect();
        assert_eq!(got, vec![(0.6, vec![2]), (0.9, vec![3]), (2.5, vec![1])]);

        let r = Realization::from_values([(IntervalId(1), 1.0), (IntervalId(2), 1.0)].into());
        let g = sort_baseline(&r);
        assert_eq!(g.groups.len(), 1);
        assert_eq!(g.groups[0].ids, vec![IntervalId(1), IntervalId(2)]);
    }

    #[test]
    fn baseline_comparison_bound() {
        let s = generate_instance(InstanceKind::General, 1024, 8, 3).unwrap();
        let r = sample_realization(&s, Strategy::Uniform, 11);
        let g = sort_baseline(&r);
        assert!(g.counters.comparisons <= 1024 * 10);
        assert!(g.expand_values().windows(2).all(|w| w[0] <= w[1]));
    }
}
