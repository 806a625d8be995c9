use std::fmt;

use crate::error::Error;

/// A finite, non-empty set of distinct 64-bit integers, stored in ascending
/// order.
///
/// Construction canonicalizes: input order is irrelevant, duplicates are
/// rejected (these are sets, not multisets — the distinction changes which
/// algebraic facts hold), and emptiness is rejected so every downstream
/// operation can rely on at least one element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSet {
    elements: Vec<i64>,
}

#[allow(clippy::len_without_is_empty)] // empty sets are unrepresentable
impl IntSet {
    /// Builds a set from values in any order.
    ///
    /// Returns [`Error::EmptyInput`] for an empty list and
    /// [`Error::DuplicateElement`] when a value repeats.
    pub fn new(values: impl Into<Vec<i64>>) -> Result<Self, Error> {
        let mut elements = values.into();
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        elements.sort_unstable();
        if let Some(pair) = elements.windows(2).find(|pair| pair[0] == pair[1]) {
            return Err(Error::DuplicateElement(pair[0]));
        }
        Ok(Self { elements })
    }

    /// Wraps a vector the caller guarantees to be non-empty and strictly
    /// ascending, skipping the sort and duplicate scan.
    pub(crate) fn from_ascending(elements: Vec<i64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|pair| pair[0] < pair[1]));
        Self { elements }
    }

    /// Number of elements (always ≥ 1).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// The elements in ascending order.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Iterates over the elements by value, ascending.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }

    /// Membership test.
    pub fn contains(&self, value: i64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    /// Exact element sum, or [`Error::Overflow`] if it leaves the 64-bit
    /// range.
    pub fn sum(&self) -> Result<i64, Error> {
        self.iter().try_fold(0i64, |acc, x| {
            acc.checked_add(x)
                .ok_or(Error::Overflow("set sum exceeds the 64-bit range"))
        })
    }

    /// The element product reduced modulo `modulus`, as a Euclidean remainder
    /// in `[0, modulus)` — including for negative elements.
    ///
    /// Each factor is reduced before multiplying, so the product itself is
    /// never materialized and the result is exact for any set.
    ///
    /// # Panics
    ///
    /// Panics if `modulus` is zero.
    pub fn product_mod(&self, modulus: u64) -> u64 {
        assert!(modulus > 0, "modulus must be positive");
        let m = u128::from(modulus);
        let mut acc = 1u128 % m;
        for x in self.iter() {
            let factor = (i128::from(x)).rem_euclid(m as i128) as u128;
            acc = acc * factor % m;
            if acc == 0 {
                return 0;
            }
        }
        acc as u64
    }

    /// Greatest common divisor of the differences `xᵢ − x₀`.
    ///
    /// Returns 0 for a singleton (no nonzero differences). The result is
    /// unsigned because a set spanning the full 64-bit range has differences
    /// beyond `i64::MAX` (e.g. `{i64::MIN, i64::MAX}` → `u64::MAX`).
    pub fn gcd_of_differences(&self) -> u64 {
        let first = self.elements[0];
        self.iter()
            .skip(1)
            .fold(0u64, |d, x| num_integer::gcd(d, x.abs_diff(first)))
    }

    /// First element the two sets share, if any.
    pub(crate) fn common_element(&self, other: &IntSet) -> Option<i64> {
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.elements[i]),
            }
        }
        None
    }

    /// Merges two disjoint sets. The caller must have checked disjointness.
    pub(crate) fn union_disjoint(&self, other: &IntSet) -> IntSet {
        debug_assert!(self.common_element(other).is_none());
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            if self.elements[i] < other.elements[j] {
                merged.push(self.elements[i]);
                i += 1;
            } else {
                merged.push(other.elements[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.elements[i..]);
        merged.extend_from_slice(&other.elements[j..]);
        IntSet::from_ascending(merged)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
