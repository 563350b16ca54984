//! Ideal generation and ideal arithmetic.
//!
//! The free functions work on raw [`ElemSet`]s against an explicit table and
//! are what the lattice and z-machinery use internally. [`IdealSet`] is the
//! checked public handle: it remembers its semiring and refuses to combine
//! with ideals of a different one.

use std::fmt;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::semiring::SemiringTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals belong to different semirings")]
    MixedSemirings,
    #[error("{0} is not an ideal")]
    NotAnIdeal(ElemSet),
    #[error("{0} is not a z-ideal")]
    NotZIdeal(ElemSet),
    #[error("order {order} exceeds the subset-scan limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("{set} meets the ideal {ideal}")]
    NotDisjoint { set: ElemSet, ideal: ElemSet },
    #[error("{0} is not multiplicatively closed with 1")]
    NotMultiplicativelyClosed(ElemSet),
}

/// Rejects tables too wide for the bitset representation.
pub(crate) fn check_width(s: &SemiringTable) -> Result<(), IdealError> {
    if s.order() > ElemSet::CAPACITY {
        return Err(IdealError::TooLarge {
            order: s.order(),
            limit: ElemSet::CAPACITY,
        });
    }
    Ok(())
}

/// `{s·x : s ∈ S}` for every `x`.
pub(crate) fn multiples(s: &SemiringTable) -> Vec<ElemSet> {
    s.elements()
        .map(|x| s.elements().map(|r| s.mul(r, x)).collect())
        .collect()
}

/// Smallest ideal containing `seed`: the fixpoint of closing `seed ∪ {0}`
/// under addition and multiplication by arbitrary elements.
pub fn generated_ideal(s: &SemiringTable, seed: ElemSet) -> ElemSet {
    let mut set = seed.with(0);
    loop {
        let mut next = set;
        for a in set {
            for r in s.elements() {
                next.insert(s.mul(r, a));
            }
            for b in set {
                next.insert(s.add(a, b));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

pub fn principal_ideal(s: &SemiringTable, x: usize) -> ElemSet {
    generated_ideal(s, ElemSet::singleton(x))
}

pub fn is_ideal(s: &SemiringTable, set: ElemSet) -> bool {
    set.contains(0)
        && set.iter().all(|a| {
            s.elements().all(|r| set.contains(s.mul(r, a)))
                && set.iter().all(|b| set.contains(s.add(a, b)))
        })
}

pub fn ideal_sum(s: &SemiringTable, a: ElemSet, b: ElemSet) -> ElemSet {
    let mut sums = ElemSet::EMPTY;
    for x in a {
        for y in b {
            sums.insert(s.add(x, y));
        }
    }
    generated_ideal(s, sums)
}

/// The ideal generated by all products `xy` with `x ∈ a`, `y ∈ b`.
pub fn ideal_product(s: &SemiringTable, a: ElemSet, b: ElemSet) -> ElemSet {
    let mut products = ElemSet::EMPTY;
    for x in a {
        for y in b {
            products.insert(s.mul(x, y));
        }
    }
    generated_ideal(s, products)
}

/// `a^k` for `k ≥ 1`.
pub fn ideal_power(s: &SemiringTable, a: ElemSet, k: usize) -> ElemSet {
    debug_assert!(k >= 1);
    (1..k).fold(a, |acc, _| ideal_product(s, acc, a))
}

pub fn ideal_intersect(a: ElemSet, b: ElemSet) -> ElemSet {
    a & b
}

/// `(a : b) = {r : r·b ⊆ a}`.
pub fn colon(s: &SemiringTable, a: ElemSet, b: ElemSet) -> ElemSet {
    s.elements()
        .filter(|&r| b.iter().all(|t| a.contains(s.mul(r, t))))
        .collect()
}

/// `{x : x^k ∈ a for some 1 ≤ k ≤ n}`.
///
/// The exponent bound is the order `n`: the sequence `x, x², x³, ..` takes
/// at most `n` distinct values and becomes periodic as soon as a value
/// repeats, so every value it ever takes already occurs among the first `n`
/// powers.
pub fn radical(s: &SemiringTable, a: ElemSet) -> ElemSet {
    let n = s.order();
    s.elements()
        .filter(|&x| {
            let mut p = x;
            for _ in 0..n {
                if a.contains(p) {
                    return true;
                }
                p = s.mul(p, x);
            }
            false
        })
        .collect()
}

/// Smallest subset containing `x` that is closed under multiplication. It
/// does not adjoin 1.
pub fn mult_closure(s: &SemiringTable, x: usize) -> ElemSet {
    let mut set = ElemSet::singleton(x);
    loop {
        let mut next = set;
        for a in set {
            for b in set {
                next.insert(s.mul(a, b));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Contains 1 and is closed under multiplication.
pub fn is_multiplicatively_closed(s: &SemiringTable, set: ElemSet) -> bool {
    set.contains(s.one()) && set.iter().all(|a| set.iter().all(|b| set.contains(s.mul(a, b))))
}

/// An ideal together with the semiring it lives in.
#[derive(Clone, Copy)]
pub struct IdealSet<'s> {
    semiring: &'s SemiringTable,
    members: ElemSet,
}

impl<'s> IdealSet<'s> {
    /// Wraps `members`, checking the ideal conditions.
    pub fn new(semiring: &'s SemiringTable, members: ElemSet) -> Result<Self, IdealError> {
        check_width(semiring)?;
        if !members.is_subset(ElemSet::full(semiring.order())) || !is_ideal(semiring, members) {
            return Err(IdealError::NotAnIdeal(members));
        }
        Ok(IdealSet { semiring, members })
    }

    pub fn generated(semiring: &'s SemiringTable, seed: ElemSet) -> Result<Self, IdealError> {
        check_width(semiring)?;
        let seed = seed & ElemSet::full(semiring.order());
        Ok(IdealSet {
            semiring,
            members: generated_ideal(semiring, seed),
        })
    }

    pub fn zero(semiring: &'s SemiringTable) -> Self {
        IdealSet {
            semiring,
            members: ElemSet::singleton(0),
        }
    }

    pub fn whole(semiring: &'s SemiringTable) -> Self {
        IdealSet {
            semiring,
            members: ElemSet::full(semiring.order()),
        }
    }

    pub fn semiring(&self) -> &'s SemiringTable {
        self.semiring
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn is_proper(&self) -> bool {
        self.members != ElemSet::full(self.semiring.order())
    }

    fn same_parent(&self, other: &IdealSet<'_>) -> Result<(), IdealError> {
        if std::ptr::eq(self.semiring, other.semiring) || self.semiring == other.semiring {
            Ok(())
        } else {
            Err(IdealError::MixedSemirings)
        }
    }

    fn derive(&self, members: ElemSet) -> IdealSet<'s> {
        IdealSet {
            semiring: self.semiring,
            members,
        }
    }

    pub fn sum(&self, other: &IdealSet<'_>) -> Result<IdealSet<'s>, IdealError> {
        self.same_parent(other)?;
        Ok(self.derive(ideal_sum(self.semiring, self.members, other.members)))
    }

    pub fn product(&self, other: &IdealSet<'_>) -> Result<IdealSet<'s>, IdealError> {
        self.same_parent(other)?;
        Ok(self.derive(ideal_product(self.semiring, self.members, other.members)))
    }

    pub fn intersect(&self, other: &IdealSet<'_>) -> Result<IdealSet<'s>, IdealError> {
        self.same_parent(other)?;
        Ok(self.derive(self.members & other.members))
    }

    /// `(self : other)`.
    pub fn colon(&self, other: &IdealSet<'_>) -> Result<IdealSet<'s>, IdealError> {
        self.same_parent(other)?;
        Ok(self.derive(colon(self.semiring, self.members, other.members)))
    }

    pub fn radical(&self) -> IdealSet<'s> {
        self.derive(radical(self.semiring, self.members))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &IdealSet<'_>) -> bool {
        self.members.is_subset(other.members)
    }
}

impl PartialEq for IdealSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.same_parent(other).is_ok()
    }
}

impl fmt::Display for IdealSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

impl fmt::Debug for IdealSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealSet({} in {})", self.members, self.semiring.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: usize) -> SemiringTable {
        SemiringTable::from_fn(format!("Z{n}"), n, 1 % n, |a, b| (a + b) % n, |a, b| (a * b) % n)
            .unwrap()
    }

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn generated_ideal_examples() {
        let z6 = zmod(6);
        assert_eq!(generated_ideal(&z6, set(&[2])), set(&[0, 2, 4]));
        assert_eq!(generated_ideal(&z6, set(&[1])), ElemSet::full(6));
        assert_eq!(generated_ideal(&z6, ElemSet::EMPTY), set(&[0]));
        assert_eq!(generated_ideal(&z6, set(&[2, 3])), ElemSet::full(6));
    }

    #[test]
    fn generated_ideal_is_least() {
        // Dropping any non-seed element breaks closure.
        let z12 = zmod(12);
        for x in 0..12 {
            let seed = ElemSet::singleton(x);
            let g = generated_ideal(&z12, seed);
            assert!(is_ideal(&z12, g));
            for y in g.difference(seed.with(0)) {
                assert!(!is_ideal(&z12, g.without(y)), "{g} minus {y} is still an ideal");
            }
        }
    }

    #[test]
    fn z6_arithmetic() {
        let z6 = zmod(6);
        let three = set(&[0, 3]);
        let two = set(&[0, 2, 4]);
        assert_eq!(ideal_sum(&z6, three, two), ElemSet::full(6));
        assert_eq!(ideal_product(&z6, three, two), set(&[0]));
        assert_eq!(colon(&z6, three, two), three);
        let whole = ElemSet::full(6);
        assert_eq!(ideal_intersect(three, whole), three);
        assert_eq!(ideal_sum(&z6, three, set(&[0])), three);
        assert_eq!(colon(&z6, two, whole), two);
        assert_eq!(colon(&z6, whole, three), whole);
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&zmod(4), set(&[0])), set(&[0, 2]));
        assert_eq!(radical(&zmod(6), set(&[0])), set(&[0]));
        assert_eq!(radical(&zmod(8), set(&[0])), set(&[0, 2, 4, 6]));
        // Primes are radical.
        assert_eq!(radical(&zmod(6), set(&[0, 3])), set(&[0, 3]));
    }

    #[test]
    fn mult_closures() {
        assert_eq!(mult_closure(&zmod(6), 2), set(&[2, 4]));
        assert_eq!(mult_closure(&zmod(4), 2), set(&[0, 2]));
        assert_eq!(mult_closure(&zmod(6), 3), set(&[3]));
        assert_eq!(mult_closure(&zmod(6), 1), set(&[1]));
    }

    #[test]
    fn powers() {
        let z8 = zmod(8);
        let two = set(&[0, 2, 4, 6]);
        assert_eq!(ideal_power(&z8, two, 1), two);
        assert_eq!(ideal_power(&z8, two, 2), set(&[0, 4]));
        assert_eq!(ideal_power(&z8, two, 3), set(&[0]));
    }

    #[test]
    fn checked_handles() {
        let z6 = zmod(6);
        let z4 = zmod(4);
        let a = IdealSet::new(&z6, set(&[0, 3])).unwrap();
        let b = IdealSet::new(&z6, set(&[0, 2, 4])).unwrap();
        assert_eq!(a.sum(&b).unwrap(), IdealSet::whole(&z6));
        assert_eq!(a.product(&b).unwrap(), IdealSet::zero(&z6));
        assert!(a.is_proper());
        assert!(!IdealSet::whole(&z6).is_proper());
        let c = IdealSet::new(&z4, set(&[0, 2])).unwrap();
        assert_eq!(a.sum(&c), Err(IdealError::MixedSemirings));
        assert_eq!(a.colon(&c), Err(IdealError::MixedSemirings));
        assert!(matches!(IdealSet::new(&z6, set(&[0, 2])), Err(IdealError::NotAnIdeal(_))));
        // A structurally equal copy counts as the same parent.
        let copy = z6.clone();
        let d = IdealSet::new(&copy, set(&[0, 3])).unwrap();
        assert_eq!(a.intersect(&d).unwrap().members(), set(&[0, 3]));
    }

    #[test]
    fn product_is_inside_intersection() {
        let z12 = zmod(12);
        let ideals: Vec<ElemSet> = (0..12).map(|x| principal_ideal(&z12, x)).collect();
        for &a in &ideals {
            for &b in &ideals {
                assert!(ideal_product(&z12, a, b).is_subset(a & b));
            }
        }
    }
}
