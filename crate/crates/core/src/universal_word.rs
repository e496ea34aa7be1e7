//! Words over `m` symbols that contain every permutation of the symbols as a
//! subsequence.
//!
//! The construction used everywhere else is the block word `(1 2 .. m)^m` of
//! length `m^2`: a permutation `s_1 .. s_m` embeds by taking `s_k` from block
//! `k`. Shorter universal words exist (the best known constructions have
//! length `m^2 - 7m/3 + 19/3`), but the block word meets the quadratic bound
//! and is trivial to emit in `O(m^2)` time.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Largest alphabet [`is_universal`] will enumerate (8! permutations).
pub const MAX_EXHAUSTIVE_M: usize = 8;
/// Largest alphabet [`shortest_universal_length`] will search.
pub const MAX_SEARCH_M: usize = 4;

/// A word over the symbols `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub symbols: Vec<u32>,
    pub m: usize,
}

impl Word {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Replaces symbol `s` with `items[s - 1]`.
    pub fn map<T: Copy>(&self, items: &[T]) -> Vec<T> {
        self.symbols.iter().map(|&s| items[s as usize - 1]).collect()
    }
}

pub fn universal_word(m: usize) -> Word {
    let mut symbols = Vec::with_capacity(m * m);
    for _ in 0..m {
        symbols.extend(1..=m as u32);
    }
    Word { symbols, m }
}

/// Exhaustive universality test: every permutation of `1..=m` must embed
/// into `w` by greedy earliest matching. Permutations sharing a prefix share
/// the matching work for that prefix.
pub fn is_universal(w: &Word, m: usize) -> Result<bool> {
    if m > MAX_EXHAUSTIVE_M {
        return Err(Error::ExhaustiveCheckRefused(m));
    }
    if m == 0 {
        return Ok(true);
    }
    if w.symbols.iter().any(|&s| s == 0 || s as usize > m) {
        return Ok(false);
    }
    // next[p][s] = first index >= p holding symbol s, or len if none
    let len = w.symbols.len();
    let mut next = vec![vec![len; m + 1]; len + 1];
    for p in (0..len).rev() {
        next[p] = next[p + 1].clone();
        next[p][w.symbols[p] as usize] = p;
    }
    let mut used = vec![false; m + 1];
    Ok(embeds_all(&next, &mut used, 0, m, m))
}

fn embeds_all(next: &[Vec<usize>], used: &mut [bool], pos: usize, m: usize, left: usize) -> bool {
    if left == 0 {
        return true;
    }
    let len = next.len() - 1;
    for s in 1..=m {
        if used[s] {
            continue;
        }
        let at = next[pos][s];
        if at == len {
            return false;
        }
        used[s] = true;
        let ok = embeds_all(next, used, at + 1, m, left - 1);
        used[s] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<u32>> {
    let mut current: Vec<u32> = (1..=m as u32).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// A shortest universal word on `m` symbols, by breadth-first search over
/// words of increasing length.
///
/// Words that leave every permutation at the same greedy matching progress
/// are interchangeable for all extensions, so the search keys its frontier
/// on that progress vector.
pub fn shortest_universal_word(m: usize) -> Result<Word> {
    if m > MAX_SEARCH_M {
        return Err(Error::SearchRefused(m));
    }
    if m == 0 {
        return Ok(Word { symbols: vec![], m });
    }
    let perms = permutations(m);
    let start = vec![0u8; perms.len()];
    let done = |state: &[u8]| state.iter().all(|&p| p as usize == m);
    // state -> (parent state, appended symbol)
    let mut parents: HashMap<Vec<u8>, Option<(Vec<u8>, u32)>> = HashMap::new();
    parents.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if done(&state) {
            let mut symbols = Vec::new();
            let mut cursor = state;
            while let Some(Some((parent, s))) = parents.get(&cursor) {
                symbols.push(*s);
                cursor = parent.clone();
            }
            symbols.reverse();
            return Ok(Word { symbols, m });
        }
        for s in 1..=m as u32 {
            let succ: Vec<u8> = state
                .iter()
                .zip(&perms)
                .map(|(&p, perm)| if (p as usize) < m && perm[p as usize] == s { p + 1 } else { p })
                .collect();
            if !parents.contains_key(&succ) {
                parents.insert(succ.clone(), Some((state.clone(), s)));
                queue.push_back(succ);
            }
        }
    }
    unreachable!("the block word is universal, so a finished state is reachable")
}

pub fn shortest_universal_length(m: usize) -> Result<usize> {
    shortest_universal_word(m).map(|w| w.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(symbols: &[u32], m: usize) -> Word {
        Word { symbols: symbols.to_vec(), m }
    }

    /// Independent check: every permutation, matched one at a time.
    fn naive_universal(w: &[u32], m: usize) -> bool {
        permutations(m).iter().all(|perm| {
            let mut it = w.iter();
            perm.iter().all(|s| it.any(|x| x == s))
        })
    }

    #[test]
    fn block_word_examples() {
        assert!(universal_word(0).is_empty());
        assert_eq!(universal_word(2).symbols, vec![1, 2, 1, 2]);
        let w3 = universal_word(3);
        assert_eq!(w3.symbols, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert!(naive_universal(&w3.symbols, 3));
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn block_word_is_universal_up_to_six() {
        for m in 1..=6 {
            let w = universal_word(m);
            assert_eq!(w.len(), m * m);
            assert!(is_universal(&w, m).unwrap());
        }
    }

    #[test]
    fn is_universal_examples() {
        assert!(is_universal(&word(&[1, 2, 1, 2], 2), 2).unwrap());
        assert!(!is_universal(&word(&[1, 2, 3], 3), 3).unwrap());
        assert!(is_universal(&word(&[1, 2, 1, 3, 1, 2, 1], 3), 3).unwrap());
        assert!(naive_universal(&[1, 2, 1, 3, 1, 2, 1], 3));
    }

    #[test]
    fn is_universal_refuses_large_alphabets() {
        let err = is_universal(&universal_word(9), 9).unwrap_err();
        assert!(err.to_string().starts_with("exhaustive check refused"));
    }

    #[test]
    fn is_universal_agrees_with_naive_on_truncations() {
        for m in 1..=4 {
            let full = universal_word(m).symbols;
            for cut in 0..=full.len() {
                let w = &full[..cut];
                assert_eq!(is_universal(&word(w, m), m).unwrap(), naive_universal(w, m));
            }
        }
    }

    #[test]
    fn shortest_lengths() {
        assert_eq!(shortest_universal_length(1).unwrap(), 1);
        assert_eq!(shortest_universal_length(2).unwrap(), 3);
        assert_eq!(shortest_universal_length(3).unwrap(), 7);
        for m in 1..=3 {
            let w = shortest_universal_word(m).unwrap();
            assert!(naive_universal(&w.symbols, m));
            assert!(w.len() <= universal_word(m).len());
        }
        assert!(matches!(shortest_universal_length(5), Err(Error::SearchRefused(5))));
    }

    #[test]
    fn concatenation_orders_alphabets() {
        // w1 universal on A = {1..a}, w2 universal on B = {a+1..a+b}: every
        // permutation listing A before B embeds in w1 ++ w2
        for a in 1..=3usize {
            for b in 1..=3usize {
                let mut w: Vec<u32> = universal_word(a).symbols;
                w.extend(universal_word(b).symbols.iter().map(|s| s + a as u32));
                let left = permutations(a);
                let right = permutations(b);
                for p in &left {
                    for q in &right {
                        let perm: Vec<u32> =
                            p.iter().copied().chain(q.iter().map(|s| s + a as u32)).collect();
                        let mut it = w.iter();
                        assert!(perm.iter().all(|s| it.any(|x| x == s)));
                    }
                }
            }
        }
    }
}
