//! Bit-packed subsets of a small ground set (at most 64 elements).

use std::fmt;

/// Largest ground set an [`ActivitySet`] can index.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `0..MAX_ELEMENTS`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActivitySet(u64);

impl ActivitySet {
    pub const EMPTY: ActivitySet = ActivitySet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ActivitySet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of {n} exceeds {MAX_ELEMENTS}"
        );
        if n == MAX_ELEMENTS {
            ActivitySet(u64::MAX)
        } else {
            ActivitySet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS);
        ActivitySet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ELEMENTS);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_ELEMENTS {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn union(self, other: Self) -> Self {
        ActivitySet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ActivitySet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ActivitySet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Orders sets by size, then by their ascending member lists.
    pub fn cmp_size_lex(self, other: Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ActivitySet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ActivitySet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for ActivitySet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ActivitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset iterator using the standard `(s - mask) & mask` trick.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ActivitySet;

    fn next(&mut self) -> Option<ActivitySet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(ActivitySet(cur))
    }
}
