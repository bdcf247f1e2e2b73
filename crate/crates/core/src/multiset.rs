use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

/// A finite multiset of positive integers.
///
/// Zero multiplicities are never stored, so derived equality is count-wise
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NatMultiset {
    counts: BTreeMap<u32, usize>,
}

/// First value at which two multisets disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultisetDifference {
    pub value: u32,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for MultisetDifference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "value {} has multiplicity {} on the left and {} on the right",
            self.value, self.left, self.right
        )
    }
}

impl NatMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(range: RangeInclusive<u32>) -> Self {
        range.collect()
    }

    pub fn insert(&mut self, value: u32) {
        self.insert_many(value, 1);
    }

    pub fn insert_many(&mut self, value: u32, count: usize) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    /// Removes one copy of `value`, returning whether it was present.
    pub fn remove(&mut self, value: u32) -> bool {
        match self.counts.get_mut(&value) {
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&value);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, value: u32) -> usize {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn min(&self) -> Option<u32> {
        self.counts.keys().next().copied()
    }

    /// True when every multiplicity is one.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&n| n == 1)
    }

    /// `(value, multiplicity)` pairs in increasing order of value.
    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().map(|(&v, &n)| (v, n))
    }

    /// Every element, repeated by multiplicity, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.iter().flat_map(|(v, n)| std::iter::repeat_n(v, n))
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn extend_from(&mut self, other: &Self) {
        for (v, n) in other.iter() {
            self.insert_many(v, n);
        }
    }

    /// `{x + 1 : x in self}`.
    pub fn shifted_up(&self) -> Self {
        Self {
            counts: self.counts.iter().map(|(&v, &n)| (v + 1, n)).collect(),
        }
    }

    /// Smallest value whose multiplicities differ, or `None` when equal.
    pub fn first_difference(&self, other: &Self) -> Option<MultisetDifference> {
        let mut keys: Vec<u32> = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|value| {
            let (left, right) = (self.count(value), other.count(value));
            (left != right).then_some(MultisetDifference { value, left, right })
        })
    }
}

impl FromIterator<u32> for NatMultiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut out = Self::new();
        out.extend(iter);
        out
    }
}

impl Extend<u32> for NatMultiset {
    fn extend<I: IntoIterator<Item = u32>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Formats as `{1^2, 3, 5^4}`.
impl fmt::Display for NatMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, n)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if n == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{n}")?;
            }
        }
        write!(f, "}}")
    }
}
