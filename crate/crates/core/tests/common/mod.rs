//! Brute-force oracles over raw tables. Nothing here calls the library's
//! ideal or z-ideal code.

#![allow(dead_code)]

use zideal::SemiringTable;

pub type Set = u128;

pub fn members(s: Set) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| s >> i & 1 == 1)
}

pub fn subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

pub fn full(n: usize) -> Set {
    (1u128 << n) - 1
}

pub fn is_ideal(t: &SemiringTable, a: Set) -> bool {
    let n = t.order();
    a & 1 == 1
        && members(a).all(|x| {
            members(a).all(|y| a >> t.add(x, y) & 1 == 1)
                && (0..n).all(|r| a >> t.mul(r, x) & 1 == 1)
        })
}

/// Every ideal, by scanning all subsets.
pub fn ideals(t: &SemiringTable) -> Vec<Set> {
    (0..1u128 << t.order()).filter(|&a| is_ideal(t, a)).collect()
}

pub fn maximal(t: &SemiringTable) -> Vec<Set> {
    let whole = full(t.order());
    let proper: Vec<Set> = ideals(t).into_iter().filter(|&a| a != whole).collect();
    proper
        .iter()
        .copied()
        .filter(|&a| !proper.iter().any(|&b| b != a && subset(a, b)))
        .collect()
}

pub fn primes(t: &SemiringTable) -> Vec<Set> {
    let whole = full(t.order());
    let n = t.order();
    ideals(t)
        .into_iter()
        .filter(|&p| {
            p != whole
                && (0..n).all(|x| {
                    (0..n).all(|y| p >> t.mul(x, y) & 1 == 0 || p >> x & 1 == 1 || p >> y & 1 == 1)
                })
        })
        .collect()
}

/// `{x : x^k ∈ a for some k}`, computing powers by repeated multiplication.
pub fn radical_by_powers(t: &SemiringTable, a: Set) -> Set {
    let n = t.order();
    let mut out = 0;
    for x in 0..n {
        let mut p = t.one();
        for _ in 0..=n {
            p = t.mul(p, x);
            if a >> p & 1 == 1 {
                out |= 1 << x;
                break;
            }
        }
    }
    out
}

/// Definition of a z-ideal: `x ∈ a` and every maximal ideal containing `x`
/// also contains `y` imply `y ∈ a`.
pub fn z_ideals(t: &SemiringTable) -> Vec<Set> {
    let n = t.order();
    let max = maximal(t);
    let in_all = |x: usize, y: usize| {
        max.iter()
            .filter(|&&m| m >> x & 1 == 1)
            .all(|&m| m >> y & 1 == 1)
    };
    ideals(t)
        .into_iter()
        .filter(|&a| {
            members(a).all(|x| (0..n).all(|y| !in_all(x, y) || a >> y & 1 == 1))
        })
        .collect()
}

/// Smallest z-ideal containing `a`, chosen by size among the candidates.
pub fn z_closure_min(t: &SemiringTable, a: Set) -> Set {
    z_ideals(t)
        .into_iter()
        .filter(|&z| subset(a, z))
        .min_by_key(|z| z.count_ones())
        .expect("S is a z-ideal")
}

pub fn set(xs: &[usize]) -> Set {
    xs.iter().fold(0, |acc, &x| acc | 1 << x)
}

/// Checks the commutative semiring axioms on flat tables.
pub fn is_semiring(n: usize, one: usize, add: &[usize], mul: &[usize]) -> bool {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    for x in 0..n {
        if a(x, 0) != x || m(x, one) != x || m(x, 0) != 0 {
            return false;
        }
        for y in 0..n {
            if a(x, y) != a(y, x) || m(x, y) != m(y, x) {
                return false;
            }
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z))
                    || m(m(x, y), z) != m(x, m(y, z))
                    || m(x, a(y, z)) != a(m(x, y), m(x, z))
                {
                    return false;
                }
            }
        }
    }
    true
}
