//! Fixed-width bitset over element indices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of `{0, .., 127}` stored in a single `u128`.
///
/// This is the currency of every ideal computation: ideals, families of
/// elements, multiplicatively closed sets, and index sets over a lattice are
/// all `ElemSet`s.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const CAPACITY: usize = 128;
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < Self::CAPACITY);
        ElemSet(1u128 << x)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < Self::CAPACITY && (self.0 >> x) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < Self::CAPACITY);
        let fresh = !self.contains(x);
        self.0 |= 1u128 << x;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u128 << x);
    }

    #[inline]
    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    #[inline]
    pub fn without(mut self, x: usize) -> Self {
        self.remove(x);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_superset(self, other: ElemSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> ElemSet {
        ElemSet(!self.0 & Self::full(n).0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        self.union(rhs)
    }
}

impl BitOrAssign for ElemSet {
    fn bitor_assign(&mut self, rhs: ElemSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        self.intersection(rhs)
    }
}

impl BitAndAssign for ElemSet {
    fn bitand_assign(&mut self, rhs: ElemSet) {
        self.0 &= rhs.0;
    }
}

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member lists.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints as `{0,2,4}`.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&x| x >= ElemSet::CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "element index {bad} exceeds bitset capacity {}",
                ElemSet::CAPACITY
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// Parses `0,2,4` (optionally wrapped in braces) into a set.
pub fn parse_element_list(text: &str) -> Result<ElemSet, String> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if body.is_empty() {
        return Ok(ElemSet::EMPTY);
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let x: usize = tok
                .parse()
                .map_err(|_| format!("`{tok}` is not an element index"))?;
            if x >= ElemSet::CAPACITY {
                return Err(format!("element index {x} is out of range"));
            }
            Ok(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let s: ElemSet = [4, 0, 2].into_iter().collect();
        assert_eq!(s.to_string(), "{0,2,4}");
        assert_eq!(parse_element_list("0,2,4").unwrap(), s);
        assert_eq!(parse_element_list("{0, 2,4}").unwrap(), s);
        assert_eq!(parse_element_list("").unwrap(), ElemSet::EMPTY);
        assert!(parse_element_list("0,x").is_err());
        assert!(parse_element_list("500").is_err());
    }

    #[test]
    fn canonical_order_is_size_then_lexicographic() {
        let a: ElemSet = [0, 1, 4].into_iter().collect();
        let b: ElemSet = [0, 2, 3].into_iter().collect();
        let c: ElemSet = [0, 5].into_iter().collect();
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn capacity_edges() {
        let full = ElemSet::full(128);
        assert_eq!(full.len(), 128);
        assert!(full.contains(127));
        assert_eq!(ElemSet::full(3).complement(3), ElemSet::EMPTY);
        assert_eq!(ElemSet::singleton(1).complement(3).to_vec(), vec![0, 2]);
    }

    #[test]
    fn serde_as_sorted_list() {
        let s: ElemSet = [3, 1].into_iter().collect();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,3]");
        let back: ElemSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ElemSet>("[200]").is_err());
    }
}
