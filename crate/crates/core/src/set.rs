//! Bitmask subsets of a finite group's element indices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `{0, .., group_order - 1}` stored as a little-endian bitmask.
///
/// Bits at positions `>= group_order` are never set. Ordering compares the
/// bitmasks as unsigned integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSet {
    group_order: usize,
    words: Vec<u64>,
}

impl GroupSet {
    pub fn empty(group_order: usize) -> Self {
        GroupSet {
            group_order,
            words: vec![0; group_order.div_ceil(64)],
        }
    }

    pub fn full(group_order: usize) -> Self {
        let mut set = GroupSet::empty(group_order);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(group_order: usize, x: usize) -> Result<Self> {
        Self::from_indices(group_order, [x])
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(group_order: usize, items: I) -> Result<Self> {
        let mut set = GroupSet::empty(group_order);
        for x in items {
            if x >= group_order {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    order: group_order,
                });
            }
            set.insert(x);
        }
        Ok(set)
    }

    /// Builds a set from the low `group_order` bits of `mask`.
    pub fn from_mask(group_order: usize, mask: u64) -> Self {
        let mut set = GroupSet::empty(group_order);
        if let Some(w) = set.words.first_mut() {
            *w = mask;
        }
        set.trim();
        set
    }

    /// The low 64 bits of the mask.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    fn trim(&mut self) {
        let rem = self.group_order % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.group_order && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Panics if `x` is outside the group.
    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.group_order, "index {x} outside group of order {}", self.group_order);
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.group_order {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn check_domain(&self, order: usize) -> Result<()> {
        if self.group_order != order {
            return Err(Error::DomainMismatch {
                expected: order,
                found: self.group_order,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &GroupSet, f: impl Fn(u64, u64) -> u64) -> GroupSet {
        assert_eq!(self.group_order, other.group_order, "sets over different groups");
        GroupSet {
            group_order: self.group_order,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &GroupSet) -> GroupSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &GroupSet) -> GroupSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &GroupSet) -> GroupSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &GroupSet) -> bool {
        self.group_order == other.group_order
            && self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &GroupSet) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &GroupSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn difference_len(&self, other: &GroupSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & !b).count_ones() as usize)
            .sum()
    }
}

impl Ord for GroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group_order.cmp(&other.group_order).then_with(|| {
            // most significant word first
            self.words.iter().rev().cmp(other.words.iter().rev())
        })
    }
}

impl PartialOrd for GroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a GroupSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
