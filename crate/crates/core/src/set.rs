//! Word-sized subsets of a small index range.

use std::cmp::Ordering;
use std::fmt;

/// Hard cap on both side parameters. Keeps every subset in one machine word
/// and unions/intersections O(1).
pub const MAX_INDEX: usize = 16;

/// A subset of `{0, .., 15}` stored as a bit mask.
///
/// The `Ord` impl compares the ascending element sequences lexicographically
/// (so `{0,2} < {1}`), which is the order used for every canonical listing in
/// this crate. It intentionally differs from the numeric order of the masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SmallSet(u32);

impl SmallSet {
    pub const EMPTY: SmallSet = SmallSet(0);

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_INDEX);
        SmallSet(1 << e)
    }

    /// The full set `{0, .., cap-1}`.
    pub fn full(cap: usize) -> Self {
        debug_assert!(cap <= MAX_INDEX);
        SmallSet(((1u64 << cap) - 1) as u32)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(Self::EMPTY, |s, e| s.with(e))
    }

    pub fn from_bits(bits: u32) -> Self {
        SmallSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn with(self, e: usize) -> Self {
        debug_assert!(e < MAX_INDEX);
        SmallSet(self.0 | (1 << e))
    }

    pub fn without(self, e: usize) -> Self {
        SmallSet(self.0 & !(1 << e))
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_INDEX && self.0 & (1 << e) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        SmallSet(self.0 | other.0)
    }

    pub fn inter(self, other: Self) -> Self {
        SmallSet(self.0 & other.0)
    }

    pub fn diff(self, other: Self) -> Self {
        SmallSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// The `k`-th smallest element.
    pub fn nth(self, k: usize) -> usize {
        self.iter().nth(k).expect("index within set size")
    }

    /// How many elements of the set are smaller than `e`.
    pub fn rank_of(self, e: usize) -> usize {
        (self.0 & ((1u32 << e) - 1)).count_ones() as usize
    }

    /// Re-index `self ⊆ within` through the ascending order of `within`.
    pub fn compress_into(self, within: SmallSet) -> SmallSet {
        debug_assert!(self.is_subset_of(within));
        SmallSet::from_elems(self.iter().map(|e| within.rank_of(e)))
    }

    pub fn iter(self) -> Elems {
        Elems(self.0)
    }

    /// All subsets of `self`, the empty set included.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }
}

pub struct Elems(u32);

impl Iterator for Elems {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

pub struct Subsets {
    mask: u32,
    cur: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = SmallSet;

    fn next(&mut self) -> Option<SmallSet> {
        if self.done {
            return None;
        }
        let out = SmallSet(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            // next submask in increasing numeric order
            self.cur = self.cur.wrapping_sub(self.mask) & self.mask;
        }
        Some(out)
    }
}

/// All subsets of `{0, .., cap-1}` with exactly `k` elements, ascending.
pub fn subsets_of_len(cap: usize, k: usize) -> Vec<SmallSet> {
    let mut out: Vec<SmallSet> = (0u32..(1u32 << cap))
        .filter(|m| m.count_ones() as usize == k)
        .map(SmallSet)
        .collect();
    out.sort();
    out
}

impl Ord for SmallSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // The set holding the smallest differing element reaches it first in
        // its ascending listing, so it sorts before the other.
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for SmallSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_matches_element_list_order() {
        // brute-force over all subsets of {0,1,2,3}
        let all: Vec<SmallSet> = (0u32..16).map(SmallSet::from_bits).collect();
        for &a in &all {
            for &b in &all {
                let la: Vec<usize> = a.iter().collect();
                let lb: Vec<usize> = b.iter().collect();
                assert_eq!(a.cmp(&b), la.cmp(&lb), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn subsets_cover_everything_once() {
        let s = SmallSet::from_elems([0, 2, 3]);
        let subs: Vec<SmallSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        let mut seen = subs.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn compress_reindexes_in_order() {
        let within = SmallSet::from_elems([1, 4, 6]);
        let s = SmallSet::from_elems([1, 6]);
        assert_eq!(s.compress_into(within), SmallSet::from_elems([0, 2]));
    }

    #[test]
    fn fixed_len_subsets() {
        assert_eq!(subsets_of_len(4, 2).len(), 6);
        assert_eq!(subsets_of_len(3, 0), vec![SmallSet::EMPTY]);
    }
}
