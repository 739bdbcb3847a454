//! Golomb rulers: verification, exact shortest-ruler search and the bound
//! `G(r) = 2L + 1` on the conductor of balanced configurations.
//!
//! The search fixes the length `L` and tries `L = lower bound, lower + 1, ..`
//! until a ruler exists, so the first hit is optimal. Within one length the
//! marks are placed in increasing order, which makes the first hit also the
//! lexicographically smallest. Pruning uses the optimal lengths of shorter
//! orders (computed by the same search) for both the prefix up to a mark and
//! the suffix after it, plus mirror elimination (first gap <= last gap).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order [`shortest_ruler`] accepts.
pub const MAX_SEARCH_ORDER: usize = 11;

/// Orders up to this one are searched by [`golomb_bound`]; the test suite
/// re-derives the bundled lengths up to here as well.
pub const CERTIFIED_ORDER: usize = 10;

/// Search limit on ruler length; distances live in a `u128` bitset.
const MAX_SEARCH_LENGTH: u32 = 127;

/// Optimal rulers, order 1 through 13.
const KNOWN_RULERS: [&[u32]; 13] = [
    &[0],
    &[0, 1],
    &[0, 1, 3],
    &[0, 1, 4, 6],
    &[0, 1, 4, 9, 11],
    &[0, 1, 4, 10, 12, 17],
    &[0, 1, 4, 10, 18, 23, 25],
    &[0, 1, 4, 9, 15, 22, 32, 34],
    &[0, 1, 5, 12, 25, 27, 35, 41, 44],
    &[0, 1, 6, 10, 23, 26, 34, 41, 53, 55],
    &[0, 1, 4, 13, 28, 33, 47, 54, 64, 70, 72],
    &[0, 2, 6, 24, 29, 40, 43, 55, 68, 75, 76, 85],
    &[0, 2, 5, 25, 37, 43, 59, 70, 85, 89, 98, 99, 106],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GolombRuler {
    marks: Vec<u32>,
}

impl GolombRuler {
    pub fn new(marks: Vec<u32>) -> Result<Self> {
        let wide: Vec<i64> = marks.iter().map(|&m| m as i64).collect();
        if is_golomb(&wide) {
            Ok(Self { marks })
        } else {
            Err(Error::NotGolomb(marks))
        }
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn order(&self) -> usize {
        self.marks.len()
    }

    pub fn length(&self) -> u32 {
        *self.marks.last().unwrap()
    }
}

/// Strictly increasing from 0, with all pairwise differences distinct.
pub fn is_golomb(marks: &[i64]) -> bool {
    if marks.first() != Some(&0) || marks.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for (i, &a) in marks.iter().enumerate() {
        for &b in &marks[..i] {
            if !seen.insert(a - b) {
                return false;
            }
        }
    }
    true
}

/// The bundled optimal ruler of order `r`, if any.
pub fn known_ruler(r: usize) -> Option<GolombRuler> {
    let marks = KNOWN_RULERS.get(r.checked_sub(1)?)?;
    Some(GolombRuler {
        marks: marks.to_vec(),
    })
}

/// Exhaustive search for the shortest ruler of order `r` with length at most
/// `max_length`; ties go to the lexicographically smallest marks.
pub fn shortest_ruler(r: usize, max_length: u32) -> Result<GolombRuler> {
    if r == 0 || r > MAX_SEARCH_ORDER {
        return Err(Error::BudgetExceeded {
            order: r,
            max_length,
        });
    }
    let limit = max_length.min(MAX_SEARCH_LENGTH);
    // optimal[i] = optimal length for order i, filled bottom-up
    let mut optimal = vec![0u32; r + 1];
    let mut best = GolombRuler { marks: vec![0] };
    for order in 1..=r {
        let floor = if order == 1 {
            0
        } else {
            (optimal[order - 1] + 1).max((order * (order - 1) / 2) as u32)
        };
        let found = (floor..=limit).find_map(|length| search_length(order, length, &optimal));
        match found {
            Some(marks) => {
                optimal[order] = *marks.last().unwrap();
                best = GolombRuler { marks };
            }
            None => {
                return Err(Error::BudgetExceeded {
                    order: r,
                    max_length,
                })
            }
        }
    }
    Ok(best)
}

/// Searched rulers are memoized per order for the life of the process.
pub fn cached_shortest_ruler(r: usize) -> Result<GolombRuler> {
    static CACHE: OnceLock<Mutex<HashMap<usize, GolombRuler>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ruler) = cache.lock().unwrap().get(&r) {
        return Ok(ruler.clone());
    }
    let ruler = shortest_ruler(r, MAX_SEARCH_LENGTH)?;
    cache.lock().unwrap().insert(r, ruler.clone());
    Ok(ruler)
}

/// Lexicographically smallest ruler of the given order and exact length.
fn search_length(order: usize, length: u32, optimal: &[u32]) -> Option<Vec<u32>> {
    match order {
        1 => return (length == 0).then(|| vec![0]),
        2 => return (length >= 1).then(|| vec![0, length]),
        _ => {}
    }
    let mut marks = vec![0u32; order];
    marks[order - 1] = length;
    let used = 1u128 << length;
    let state = Dfs {
        order,
        length,
        optimal,
    };
    // split on the second mark; the first hit in mark order is the answer
    let upper = length - optimal[order - 1];
    (optimal[2]..=upper).into_par_iter().find_map_first(|m| {
        if order == 3 && m > length - m {
            return None;
        }
        let mut marks = marks.clone();
        let used = state.try_mark(&marks, 1, m, used)?;
        marks[1] = m;
        state.place(&mut marks, 2, used).then_some(marks)
    })
}

struct Dfs<'a> {
    order: usize,
    length: u32,
    optimal: &'a [u32],
}

impl Dfs<'_> {
    /// Distances added by putting `m` at position `i`, or `None` on a clash.
    fn try_mark(&self, marks: &[u32], i: usize, m: u32, used: u128) -> Option<u128> {
        let mut added = 0u128;
        let tail = self.length - m;
        added |= 1 << tail;
        for &prev in &marks[..i] {
            let bit = 1u128 << (m - prev);
            if added & bit != 0 {
                return None;
            }
            added |= bit;
        }
        (used & added == 0).then_some(used | added)
    }

    fn place(&self, marks: &mut [u32], i: usize, used: u128) -> bool {
        if i == self.order - 1 {
            return true;
        }
        // marks[i] needs i+1 marks before it (inclusive) and order-i after
        let low = (marks[i - 1] + 1).max(self.optimal[i + 1]);
        let mut high = self.length - self.optimal[self.order - i];
        if i == self.order - 2 {
            // mirror elimination: first gap <= last gap
            high = high.min(self.length - marks[1]);
        }
        if low > high {
            return false;
        }
        for m in low..=high {
            if let Some(next) = self.try_mark(marks, i, m, used) {
                marks[i] = m;
                if self.place(marks, i + 1, next) {
                    return true;
                }
            }
        }
        false
    }
}

/// Where a bound's ruler length came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthSource {
    /// Exhaustive search in this process.
    Search,
    /// Bundled table, beyond what the search is run for.
    KnownTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GolombBound {
    pub order: usize,
    pub ruler: GolombRuler,
    pub source: LengthSource,
}

impl GolombBound {
    pub fn length(&self) -> u32 {
        self.ruler.length()
    }

    /// `2L + 1`.
    pub fn bound(&self) -> u64 {
        2 * self.ruler.length() as u64 + 1
    }

    pub fn certified(&self) -> bool {
        self.source == LengthSource::Search
    }
}

/// `G(r) = 2L + 1`, searching for orders up to `search_up_to` and falling
/// back to the bundled table above that.
pub fn golomb_bound_with(r: usize, search_up_to: usize) -> Result<GolombBound> {
    if r <= search_up_to.min(MAX_SEARCH_ORDER) && r >= 1 {
        return Ok(GolombBound {
            order: r,
            ruler: cached_shortest_ruler(r)?,
            source: LengthSource::Search,
        });
    }
    let ruler = known_ruler(r).ok_or(Error::UnknownOrder(r))?;
    Ok(GolombBound {
        order: r,
        ruler,
        source: LengthSource::KnownTable,
    })
}

/// [`golomb_bound_with`] searching through [`CERTIFIED_ORDER`].
pub fn golomb_bound(r: usize) -> Result<GolombBound> {
    golomb_bound_with(r, CERTIFIED_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verifier() {
        assert!(is_golomb(&[0, 1, 3]));
        assert!(!is_golomb(&[0, 1, 2]));
        assert!(is_golomb(&[0, 1, 4, 6]));
        assert!(!is_golomb(&[1, 2, 4]));
        assert!(!is_golomb(&[0, 3, 1]));
        assert!(!is_golomb(&[]));
        assert!(is_golomb(&[0]));
        assert!(GolombRuler::new(vec![0, 2, 3, 5]).is_err());
    }

    #[test]
    fn bundled_rulers_are_golomb() {
        for r in 1..=13 {
            let ruler = known_ruler(r).unwrap();
            assert_eq!(ruler.order(), r);
            assert!(GolombRuler::new(ruler.marks().to_vec()).is_ok(), "order {r}");
        }
        assert!(known_ruler(0).is_none());
        assert!(known_ruler(14).is_none());
    }

    #[test]
    fn small_searches() {
        assert_eq!(shortest_ruler(1, 10).unwrap().marks(), &[0]);
        assert_eq!(shortest_ruler(2, 10).unwrap().marks(), &[0, 1]);
        assert_eq!(shortest_ruler(3, 10).unwrap().marks(), &[0, 1, 3]);
        assert_eq!(shortest_ruler(4, 10).unwrap().length(), 6);
        assert_eq!(shortest_ruler(5, 20).unwrap().marks(), &[0, 1, 4, 9, 11]);
        assert_eq!(shortest_ruler(6, 25).unwrap().length(), 17);
    }

    /// Plain enumeration of all mark sets of a given length, no pruning.
    fn brute_force_shortest(r: usize) -> Vec<i64> {
        for length in 0i64.. {
            let inner: Vec<i64> = (1..length).collect();
            let mut best: Option<Vec<i64>> = None;
            for mask in 0u64..(1 << inner.len()) {
                if mask.count_ones() as usize + 2 != r {
                    continue;
                }
                let mut marks = vec![0];
                marks.extend(inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &m)| m));
                marks.push(length);
                if is_golomb(&marks) && best.as_ref().is_none_or(|b| marks < *b) {
                    best = Some(marks);
                }
            }
            if let Some(b) = best {
                return b;
            }
        }
        unreachable!()
    }

    #[test]
    fn search_matches_enumeration() {
        for r in 3..=6 {
            let expected = brute_force_shortest(r);
            let got: Vec<i64> = shortest_ruler(r, 40).unwrap().marks().iter().map(|&m| m as i64).collect();
            assert_eq!(got, expected, "order {r}");
        }
    }

    #[test]
    fn budget_too_small() {
        assert!(matches!(shortest_ruler(6, 16), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(shortest_ruler(12, 200), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(shortest_ruler(0, 10), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn certified_lengths_agree_with_table() {
        for r in 1..=CERTIFIED_ORDER {
            let searched = shortest_ruler(r, 80).unwrap();
            assert_eq!(searched.length(), known_ruler(r).unwrap().length(), "order {r}");
            // no shorter ruler exists
            if r > 1 {
                assert!(shortest_ruler(r, searched.length() - 1).is_err());
            }
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(golomb_bound(3).unwrap().bound(), 7);
        assert_eq!(golomb_bound(5).unwrap().bound(), 23);
        assert_eq!(golomb_bound(6).unwrap().bound(), 35);
        let g9 = golomb_bound(9).unwrap();
        assert_eq!((g9.bound(), g9.source), (89, LengthSource::Search));
        let g9 = golomb_bound_with(9, 8).unwrap();
        assert_eq!((g9.bound(), g9.source), (89, LengthSource::KnownTable));
        assert_eq!(golomb_bound(12).unwrap().source, LengthSource::KnownTable);
        assert!(golomb_bound(6).unwrap().certified());
        assert_eq!(golomb_bound(14), Err(Error::UnknownOrder(14)));
        for r in 2..=9 {
            let p = (r * r - r + 1) as u64;
            assert!(p <= golomb_bound(r).unwrap().bound());
        }
    }
}
