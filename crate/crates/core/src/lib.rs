//! Sorting and gap reconstruction for points hidden in known intervals.
//!
//! Given intervals `R = {I_1, ..., I_n}` in advance, [`preprocess`] builds a
//! sequence of interval ids that contains the sorted order of every point
//! set `P` with one point per interval as a subsequence. Once `P` is
//! revealed, [`reconstruct`] recovers that order from the sequence in linear
//! time (or sublinear retrievals for the marked and gap variants).
//! [`oracle`] holds the brute-force checks used to validate both.
//!
//! ```
//! use superseq_core::intervals::{IntervalSet, Realization};
//! use superseq_core::preprocess::build_unit_supersequence;
//! use superseq_core::reconstruct::{realize_sequence, smooth_sort};
//!
//! let set = IntervalSet::from_bounds(&[(0.0, 1.0), (0.5, 1.5), (2.0, 3.0)]).unwrap();
//! let seq = build_unit_supersequence(&set).unwrap();
//! let points = Realization::from_slice(&set, &[0.9, 0.6, 2.5]).unwrap();
//! let (alpha, beta) = seq.smoothness().unwrap();
//! let sorted = smooth_sort(&realize_sequence(&seq, &points).unwrap(), alpha, beta).unwrap();
//! assert_eq!(sorted.expand_values(), vec![0.6, 0.9, 2.5]);
//! ```

pub mod counters;
pub mod error;
pub mod formats;
pub mod intervals;
pub mod oracle;
pub mod preprocess;
pub mod reconstruct;
pub mod rng;
pub mod universal_word;

pub use counters::Counters;
pub use error::{Error, Result};
pub use intervals::{Interval, IntervalId, IntervalSet, Realization, SortedGroups};
pub use preprocess::SuperSequence;
