//! z-ideals: basic z-ideals, the z-closure operator, bzi detection,
//! z-radicals and the z-analogues of the classical ideal predicates.

use crate::elemset::ElemSet;
use crate::ideal::{self, IdealError};
use crate::lattice::IdealLattice;
use crate::semiring::{Limits, SemiringTable};

/// A semiring together with its ideal lattice and the z-ideal data derived
/// from it. Immutable once built.
#[derive(Debug, Clone)]
pub struct ZContext {
    lattice: IdealLattice,
    /// `M_x` as indices into `lattice.maximal_ideals()`.
    containing: Vec<Vec<usize>>,
    basic: Vec<ElemSet>,
    z_ideals: Vec<ElemSet>,
    spec_z: Vec<ElemSet>,
    bzi: bool,
}

impl ZContext {
    pub fn build(table: SemiringTable, limits: &Limits) -> Result<Self, IdealError> {
        Ok(Self::from_lattice(IdealLattice::build(table, limits)?))
    }

    pub fn from_lattice(lattice: IdealLattice) -> Self {
        let maximal = lattice.maximal_ideals();
        let whole = lattice.whole();
        let containing: Vec<Vec<usize>> = lattice
            .table()
            .elements()
            .map(|x| (0..maximal.len()).filter(|&i| maximal[i].contains(x)).collect())
            .collect();
        let basic: Vec<ElemSet> = containing
            .iter()
            .map(|ms| ms.iter().fold(whole, |acc, &i| acc & maximal[i]))
            .collect();
        let z_ideals: Vec<ElemSet> = lattice
            .ideals()
            .iter()
            .copied()
            .filter(|&a| a.iter().all(|x| basic[x].is_subset(a)))
            .collect();
        let table = lattice.table();
        let bzi = basic
            .iter()
            .all(|&m| ideal::ideal_product(table, m, m) == m);
        let mut ctx = ZContext {
            lattice,
            containing,
            basic,
            z_ideals,
            spec_z: Vec::new(),
            bzi,
        };
        ctx.spec_z = ctx
            .z_ideals
            .iter()
            .copied()
            .filter(|&a| ctx.is_z_prime(a))
            .collect();
        ctx
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn table(&self) -> &SemiringTable {
        self.lattice.table()
    }

    fn whole(&self) -> ElemSet {
        self.lattice.whole()
    }

    /// `M_x`: the maximal ideals containing `x`.
    pub fn maximal_ideals_containing(&self, x: usize) -> Vec<ElemSet> {
        let maximal = self.lattice.maximal_ideals();
        self.containing[x].iter().map(|&i| maximal[i]).collect()
    }

    /// `m_x = ⋂ M_x`, or `S` when no maximal ideal contains `x`.
    pub fn basic_z_ideal(&self, x: usize) -> ElemSet {
        self.basic[x]
    }

    /// The distinct basic z-ideals in canonical order.
    pub fn basic_z_ideals(&self) -> Vec<ElemSet> {
        let mut out = self.basic.clone();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_z_ideal(&self, a: ElemSet) -> bool {
        self.lattice.is_ideal(a) && a.iter().all(|x| self.basic[x].is_subset(a))
    }

    /// The same predicate phrased through `M_x`: whenever `M_x ⊇ M_y` and
    /// `y ∈ a`, also `x ∈ a`.
    pub fn is_z_ideal_via_ma(&self, a: ElemSet) -> bool {
        let s = self.table();
        self.lattice.is_ideal(a)
            && a.iter().all(|y| {
                s.elements().all(|x| {
                    a.contains(x)
                        || !self.containing[y]
                            .iter()
                            .all(|m| self.containing[x].contains(m))
                })
            })
    }

    /// `Z(S)`, including `S`, in canonical order.
    pub fn z_ideals(&self) -> &[ElemSet] {
        &self.z_ideals
    }

    /// `Spec_z(S)`.
    pub fn spec_z(&self) -> &[ElemSet] {
        &self.spec_z
    }

    /// Smallest z-ideal containing `a`.
    pub fn z_closure(&self, a: ElemSet) -> ElemSet {
        self.z_ideals
            .iter()
            .filter(|z| a.is_subset(**z))
            .fold(self.whole(), |acc, &z| acc & z)
    }

    /// Every basic z-ideal is idempotent.
    pub fn is_bzi(&self) -> bool {
        self.bzi
    }

    /// Minimal members of `{p ∈ Spec_z(S) : p ⊇ a}`.
    pub fn min_z_primes_over(&self, a: ElemSet) -> Vec<ElemSet> {
        let over: Vec<ElemSet> = self
            .spec_z
            .iter()
            .copied()
            .filter(|&p| a.is_subset(p))
            .collect();
        over.iter()
            .copied()
            .filter(|&p| !over.iter().any(|&q| q != p && q.is_subset(p)))
            .collect()
    }

    fn is_proper_z(&self, a: ElemSet) -> bool {
        a != self.whole() && self.is_z_ideal(a)
    }

    pub fn is_z_maximal(&self, a: ElemSet) -> bool {
        let whole = self.whole();
        self.is_proper_z(a)
            && !self
                .z_ideals
                .iter()
                .any(|&b| b != whole && b != a && a.is_subset(b))
    }

    /// Proper z-ideal, and `bc ⊆ a` forces `b ⊆ a` or `c ⊆ a` for z-ideals
    /// `b`, `c`.
    pub fn is_z_prime(&self, a: ElemSet) -> bool {
        let s = self.table();
        self.is_proper_z(a)
            && self.z_ideals.iter().all(|&b| {
                b.is_subset(a)
                    || self.z_ideals.iter().all(|&c| {
                        c.is_subset(a) || !ideal::ideal_product(s, b, c).is_subset(a)
                    })
            })
    }

    /// Proper z-ideal, and `b² ⊆ a` forces `b ⊆ a` for z-ideals `b`.
    pub fn is_z_semiprime(&self, a: ElemSet) -> bool {
        let s = self.table();
        self.is_proper_z(a)
            && self
                .z_ideals
                .iter()
                .all(|&b| b.is_subset(a) || !ideal::ideal_product(s, b, b).is_subset(a))
    }

    pub fn is_z_irreducible(&self, a: ElemSet) -> bool {
        self.is_z_ideal(a)
            && self.z_ideals.iter().all(|&b| {
                b == a || self.z_ideals.iter().all(|&c| c == a || b & c != a)
            })
    }

    pub fn is_z_strongly_irreducible(&self, a: ElemSet) -> bool {
        self.is_z_ideal(a)
            && self.z_ideals.iter().all(|&b| {
                b.is_subset(a)
                    || self
                        .z_ideals
                        .iter()
                        .all(|&c| c.is_subset(a) || !(b & c).is_subset(a))
            })
    }

    /// Intersection of the z-primes containing `a`, for any ideal `a`.
    /// `S` when there are none.
    pub fn z_prime_hull(&self, a: ElemSet) -> ElemSet {
        self.spec_z
            .iter()
            .filter(|p| a.is_subset(**p))
            .fold(self.whole(), |acc, &p| acc & p)
    }

    /// The z-radical of a z-ideal.
    pub fn z_radical(&self, a: ElemSet) -> Result<ElemSet, IdealError> {
        if !self.is_z_ideal(a) {
            return Err(IdealError::NotZIdeal(a));
        }
        Ok(self.z_prime_hull(a))
    }

    /// `cl_z⟨x⟩ ∩ cl_z⟨y⟩ ⊆ a` forces `x ∈ a` or `y ∈ a`.
    pub fn abi_criterion(&self, a: ElemSet) -> Result<bool, IdealError> {
        if !self.is_z_ideal(a) {
            return Err(IdealError::NotZIdeal(a));
        }
        let s = self.table();
        let closures: Vec<ElemSet> = s
            .elements()
            .map(|x| self.z_closure(ideal::principal_ideal(s, x)))
            .collect();
        Ok(s.elements().all(|x| {
            a.contains(x)
                || s.elements()
                    .all(|y| a.contains(y) || !(closures[x] & closures[y]).is_subset(a))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: usize) -> SemiringTable {
        SemiringTable::from_fn(format!("Z{n}"), n, 1 % n, |a, b| (a + b) % n, |a, b| (a * b) % n)
            .unwrap()
    }

    fn chain(k: usize) -> SemiringTable {
        SemiringTable::from_fn(format!("C{}", k + 1), k + 1, k, usize::max, usize::min).unwrap()
    }

    fn boolean() -> SemiringTable {
        SemiringTable::from_fn("B", 2, 1, |a, b| a | b, |a, b| a & b).unwrap()
    }

    fn ctx(t: SemiringTable) -> ZContext {
        ZContext::build(t, &Limits::default()).unwrap()
    }

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn maximal_ideals_containing() {
        let z6 = ctx(zmod(6));
        assert_eq!(z6.maximal_ideals_containing(2), vec![set(&[0, 2, 4])]);
        assert_eq!(z6.maximal_ideals_containing(0), z6.lattice().maximal_ideals());
        assert!(z6.maximal_ideals_containing(1).is_empty());
    }

    #[test]
    fn basic_z_ideals() {
        let z6 = ctx(zmod(6));
        assert_eq!(z6.basic_z_ideal(2), set(&[0, 2, 4]));
        assert_eq!(z6.basic_z_ideal(3), set(&[0, 3]));
        assert_eq!(z6.basic_z_ideal(0), set(&[0]));
        assert_eq!(z6.basic_z_ideal(1), ElemSet::full(6));
        let z4 = ctx(zmod(4));
        assert_eq!(z4.basic_z_ideal(2), set(&[0, 2]));
        assert_eq!(z4.basic_z_ideal(0), set(&[0, 2]));
        assert_eq!(z4.basic_z_ideal(1), ElemSet::full(4));
        let c3 = ctx(chain(2));
        assert_eq!(c3.basic_z_ideal(0), set(&[0, 1]));
        assert_eq!(c3.basic_z_ideal(1), set(&[0, 1]));
        assert_eq!(c3.basic_z_ideal(2), ElemSet::full(3));
    }

    #[test]
    fn z_ideal_predicate() {
        let z4 = ctx(zmod(4));
        assert!(!z4.is_z_ideal(set(&[0])));
        assert_eq!(z4.z_ideals(), &[set(&[0, 2]), ElemSet::full(4)]);
        let z6 = ctx(zmod(6));
        assert!(z6.is_z_ideal(set(&[0])));
        assert_eq!(z6.z_ideals(), z6.lattice().ideals());
        for t in (1..=12).map(zmod).chain((0..5).map(chain)) {
            let c = ctx(t);
            for &a in c.lattice().ideals() {
                assert_eq!(c.is_z_ideal(a), c.is_z_ideal_via_ma(a), "{a}");
            }
            for m in c.lattice().maximal_ideals() {
                assert!(c.is_z_ideal(m));
            }
        }
    }

    #[test]
    fn closure() {
        let z4 = ctx(zmod(4));
        assert_eq!(z4.z_closure(set(&[0])), set(&[0, 2]));
        assert_eq!(z4.z_closure(ElemSet::full(4)), ElemSet::full(4));
        let c3 = ctx(chain(2));
        assert_eq!(c3.z_closure(set(&[0])), set(&[0, 1]));
    }

    #[test]
    fn bzi() {
        assert!(ctx(boolean()).is_bzi());
        assert!(ctx(chain(2)).is_bzi());
        assert!(!ctx(zmod(4)).is_bzi());
        assert!(ctx(zmod(6)).is_bzi());
    }

    #[test]
    fn spectra() {
        let z6 = ctx(zmod(6));
        assert_eq!(z6.spec_z(), &[set(&[0, 3]), set(&[0, 2, 4])]);
        assert_eq!(ctx(boolean()).spec_z(), &[set(&[0])]);
        assert_eq!(
            z6.min_z_primes_over(set(&[0])),
            vec![set(&[0, 3]), set(&[0, 2, 4])]
        );
    }

    #[test]
    fn z_predicates() {
        let z4 = ctx(zmod(4));
        assert!(z4.is_z_maximal(set(&[0, 2])));
        assert!(z4.is_z_prime(set(&[0, 2])));
        assert!(!z4.is_z_maximal(ElemSet::full(4)));
        assert!(z4.z_ideals().iter().all(|&a| z4.is_z_strongly_irreducible(a)));

        let z6 = ctx(zmod(6));
        let zero = set(&[0]);
        assert!(z6.is_z_maximal(set(&[0, 3])) && z6.is_z_maximal(set(&[0, 2, 4])));
        assert!(!z6.is_z_maximal(zero));
        assert!(z6.is_z_semiprime(zero) && !z6.is_z_prime(zero));
        assert!(z6.is_z_prime(set(&[0, 3])));
        assert!(!z6.is_z_irreducible(zero) && !z6.is_z_strongly_irreducible(zero));
        assert!(z6.is_z_irreducible(set(&[0, 3])) && z6.is_z_strongly_irreducible(set(&[0, 3])));
    }

    #[test]
    fn radicals() {
        let z6 = ctx(zmod(6));
        assert_eq!(z6.z_radical(set(&[0])).unwrap(), set(&[0]));
        for &p in z6.spec_z() {
            assert_eq!(z6.z_radical(p).unwrap(), p);
        }
        let z4 = ctx(zmod(4));
        assert_eq!(z4.z_radical(set(&[0, 2])).unwrap(), set(&[0, 2]));
        assert_eq!(z4.z_radical(set(&[0])), Err(IdealError::NotZIdeal(set(&[0]))));
        assert_eq!(z4.z_prime_hull(set(&[0])), set(&[0, 2]));
    }

    #[test]
    fn abi_agrees_with_strong_irreducibility() {
        for t in [zmod(6), zmod(4), chain(2), zmod(12), boolean()] {
            let c = ctx(t);
            for &a in c.z_ideals() {
                assert_eq!(c.abi_criterion(a).unwrap(), c.is_z_strongly_irreducible(a), "{a}");
            }
        }
        assert!(ctx(zmod(4)).abi_criterion(set(&[0])).is_err());
    }
}
