//! The lattice `Id(S)` of all ideals and the classical ideal-theoretic
//! families and predicates over it.

use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::ideal::{self, check_width, IdealError};
use crate::semiring::{Limits, SemiringTable};

/// Every ideal of a semiring, in canonical order (by size, then
/// lexicographically), with the maximal, prime and minimal prime families
/// cached as indices into [`IdealLattice::ideals`].
#[derive(Debug, Clone)]
pub struct IdealLattice {
    table: SemiringTable,
    ideals: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    maximal: Vec<usize>,
    prime: Vec<usize>,
    minimal_prime: Vec<usize>,
}

/// Enumerates `Id(S)` by scanning every subset that contains 0.
pub fn all_ideals(table: &SemiringTable, limits: &Limits) -> Result<IdealLattice, IdealError> {
    IdealLattice::build(table.clone(), limits)
}

impl IdealLattice {
    pub fn build(table: SemiringTable, limits: &Limits) -> Result<Self, IdealError> {
        check_width(&table)?;
        let n = table.order();
        if n > limits.scan_max_order {
            return Err(IdealError::TooLarge {
                order: n,
                limit: limits.scan_max_order,
            });
        }
        let multiples = ideal::multiples(&table);
        let mut ideals = Vec::new();
        for mask in 0u128..(1u128 << (n - 1)) {
            let set = ElemSet::from_bits((mask << 1) | 1);
            if set.iter().all(|a| multiples[a].is_subset(set))
                && set
                    .iter()
                    .all(|a| set.iter().all(|b| b < a || set.contains(table.add(a, b))))
            {
                ideals.push(set);
            }
        }
        ideals.sort();
        let index = ideals.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut lattice = IdealLattice {
            table,
            ideals,
            index,
            maximal: Vec::new(),
            prime: Vec::new(),
            minimal_prime: Vec::new(),
        };
        debug_assert!(lattice.is_closed_under_meet_and_join());
        let whole = lattice.whole();
        lattice.maximal = (0..lattice.len())
            .filter(|&i| {
                let a = lattice.ideals[i];
                a != whole
                    && !lattice
                        .ideals
                        .iter()
                        .any(|&b| b != whole && b != a && a.is_subset(b))
            })
            .collect();
        lattice.prime = (0..lattice.len())
            .filter(|&i| lattice.is_prime(lattice.ideals[i]))
            .collect();
        lattice.minimal_prime = lattice.minimal_among(&lattice.prime, ElemSet::singleton(0));
        Ok(lattice)
    }

    pub fn table(&self) -> &SemiringTable {
        &self.table
    }

    pub fn ideals(&self) -> &[ElemSet] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, a: ElemSet) -> Option<usize> {
        self.index.get(&a).copied()
    }

    pub fn is_ideal(&self, a: ElemSet) -> bool {
        self.index.contains_key(&a)
    }

    pub fn zero_ideal(&self) -> ElemSet {
        ElemSet::singleton(0)
    }

    pub fn whole(&self) -> ElemSet {
        ElemSet::full(self.table.order())
    }

    pub fn is_proper(&self, a: ElemSet) -> bool {
        a != self.whole()
    }

    /// `ideals[i] ⊆ ideals[j]`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(self.ideals[j])
    }

    /// Covering pairs `(i, j)`: `ideals[i] ⊊ ideals[j]` with nothing strictly
    /// between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in self.ideals.iter().enumerate() {
            for (j, &b) in self.ideals.iter().enumerate() {
                if a != b
                    && a.is_subset(b)
                    && !self
                        .ideals
                        .iter()
                        .any(|&c| c != a && c != b && a.is_subset(c) && c.is_subset(b))
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn sum(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        ideal::ideal_sum(&self.table, a, b)
    }

    pub fn product(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        ideal::ideal_product(&self.table, a, b)
    }

    pub fn generated(&self, seed: ElemSet) -> ElemSet {
        ideal::generated_ideal(&self.table, seed)
    }

    pub fn radical(&self, a: ElemSet) -> ElemSet {
        ideal::radical(&self.table, a)
    }

    pub fn colon(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        ideal::colon(&self.table, a, b)
    }

    fn is_closed_under_meet_and_join(&self) -> bool {
        self.ideals.iter().all(|&a| {
            self.ideals
                .iter()
                .all(|&b| self.is_ideal(a & b) && self.is_ideal(self.sum(a, b)))
        })
    }

    /// Minimal members (under inclusion) of `family` that contain `floor`.
    fn minimal_among(&self, family: &[usize], floor: ElemSet) -> Vec<usize> {
        let over: Vec<usize> = family
            .iter()
            .copied()
            .filter(|&i| floor.is_subset(self.ideals[i]))
            .collect();
        over.iter()
            .copied()
            .filter(|&i| {
                let a = self.ideals[i];
                !over
                    .iter()
                    .any(|&j| j != i && self.ideals[j].is_subset(a))
            })
            .collect()
    }

    fn collect(&self, indices: &[usize]) -> Vec<ElemSet> {
        indices.iter().map(|&i| self.ideals[i]).collect()
    }

    /// `Max(S)`.
    pub fn maximal_ideals(&self) -> Vec<ElemSet> {
        self.collect(&self.maximal)
    }

    pub fn maximal_indices(&self) -> &[usize] {
        &self.maximal
    }

    /// `Spec(S)`.
    pub fn prime_ideals(&self) -> Vec<ElemSet> {
        self.collect(&self.prime)
    }

    pub fn prime_indices(&self) -> &[usize] {
        &self.prime
    }

    /// Minimal primes of the semiring, i.e. minimal primes over `{0}`.
    pub fn minimal_primes(&self) -> Vec<ElemSet> {
        self.collect(&self.minimal_prime)
    }

    /// Minimal members of `{p ∈ Spec(S) : p ⊇ a}`.
    pub fn minimal_primes_over(&self, a: ElemSet) -> Vec<ElemSet> {
        self.collect(&self.minimal_among(&self.prime, a))
    }

    /// Intersection of `Max(S)`; the whole semiring when there are no
    /// maximal ideals (only in the zero semiring).
    pub fn jacobson_radical(&self) -> ElemSet {
        self.maximal
            .iter()
            .fold(self.whole(), |acc, &i| acc & self.ideals[i])
    }

    pub fn is_semisimple(&self) -> bool {
        self.jacobson_radical() == self.zero_ideal()
    }

    /// Proper, and `xy ∈ a` forces `x ∈ a` or `y ∈ a`. False on `S`.
    pub fn is_prime(&self, a: ElemSet) -> bool {
        let s = &self.table;
        self.is_proper(a)
            && s.elements().all(|x| {
                a.contains(x) || s.elements().all(|y| a.contains(y) || !a.contains(s.mul(x, y)))
            })
    }

    /// Proper, and `b² ⊆ a` forces `b ⊆ a` for every ideal `b`. False on `S`.
    pub fn is_semiprime(&self, a: ElemSet) -> bool {
        self.is_proper(a)
            && self
                .ideals
                .iter()
                .all(|&b| b.is_subset(a) || !self.product(b, b).is_subset(a))
    }

    /// False on `S`.
    pub fn is_maximal(&self, a: ElemSet) -> bool {
        self.maximal.iter().any(|&i| self.ideals[i] == a)
    }

    /// `b ∩ b' = a` forces `b = a` or `b' = a`. Admits `a = S`.
    pub fn is_irreducible(&self, a: ElemSet) -> bool {
        self.ideals.iter().all(|&b| {
            b == a
                || self
                    .ideals
                    .iter()
                    .all(|&c| c == a || b & c != a)
        })
    }

    /// `b ∩ b' ⊆ a` forces `b ⊆ a` or `b' ⊆ a`. Admits `a = S`.
    pub fn is_strongly_irreducible(&self, a: ElemSet) -> bool {
        self.ideals.iter().all(|&b| {
            b.is_subset(a)
                || self
                    .ideals
                    .iter()
                    .all(|&c| c.is_subset(a) || !(b & c).is_subset(a))
        })
    }

    /// `Id(S)` is distributive: `a ∩ (b + c) = (a ∩ b) + (a ∩ c)`.
    pub fn is_arithmetical(&self) -> bool {
        let ids = &self.ideals;
        ids.iter().all(|&a| {
            ids.iter().all(|&b| {
                ids.iter()
                    .all(|&c| a & self.sum(b, c) == self.sum(a & b, a & c))
            })
        })
    }

    /// An ideal containing `a`, disjoint from the multiplicatively closed set
    /// `t`, and maximal with both properties. Ties go to the first candidate
    /// in canonical order. The result is always prime.
    pub fn find_separating_prime(&self, a: ElemSet, t: ElemSet) -> Result<ElemSet, IdealError> {
        if !ideal::is_multiplicatively_closed(&self.table, t) {
            return Err(IdealError::NotMultiplicativelyClosed(t));
        }
        if !a.is_disjoint(t) {
            return Err(IdealError::NotDisjoint { set: t, ideal: a });
        }
        let candidates: Vec<ElemSet> = self
            .ideals
            .iter()
            .copied()
            .filter(|&b| a.is_subset(b) && b.is_disjoint(t))
            .collect();
        let found = candidates
            .iter()
            .copied()
            .find(|&b| !candidates.iter().any(|&c| c != b && b.is_subset(c)))
            .expect("a itself is a candidate, so a maximal one exists");
        debug_assert!(self.is_prime(found));
        Ok(found)
    }
}
