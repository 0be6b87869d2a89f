//! Fixed-width subsets of a labeled ground set.
//!
//! Elements are stored as 0-based bit indices; every user-facing rendering
//! uses 1-based labels.

use std::fmt;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 32;

/// A subset of `{0, .., n-1}` packed into a single word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSubset(u32);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub const fn from_bits(bits: u32) -> Self {
        GroundSubset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_GROUND,
            "ground set of size {n} exceeds {MAX_GROUND}"
        );
        if n == MAX_GROUND {
            GroundSubset(u32::MAX)
        } else {
            GroundSubset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_GROUND);
        GroundSubset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Self::EMPTY, |acc, i| acc.with(i))
    }

    /// Builds a subset from 1-based labels. Returns the offending label if one
    /// is zero or exceeds `n`.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self, usize> {
        let mut s = Self::EMPTY;
        for &l in labels {
            if l == 0 || l > n {
                return Err(l);
            }
            s = s.with(l - 1);
        }
        Ok(s)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 & (1 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_GROUND);
        GroundSubset(self.0 | (1 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        GroundSubset(self.0 & !(1u32.checked_shl(i as u32).unwrap_or(0)))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        GroundSubset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        GroundSubset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        GroundSubset(self.0 & !other.0)
    }

    /// Complement within `{0, .., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// True when no bit at index `n` or above is set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Ascending 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Compact label string: `"1234"` for single-digit labels, `"[10,11]"`
    /// otherwise, `"∅"` for the empty set.
    pub fn compact(self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let labels = self.labels();
        if labels.iter().all(|&l| l <= 9) {
            labels.iter().map(|l| l.to_string()).collect()
        } else {
            let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl FromIterator<usize> for GroundSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(GroundSubset(cur))
    }
}

/// All `k`-element subsets of `{0, .., n-1}`, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = GroundSubset> {
    GroundSubset::full(n)
        .subsets()
        .filter(move |s| s.len() == k)
}
