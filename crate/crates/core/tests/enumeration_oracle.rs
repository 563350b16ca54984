mod common;

use std::collections::BTreeSet;

use common::is_semiring;
use zideal::enumerate::{enumerate_small, Mode};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism-invariant code: minimum over relabelings fixing 0.
fn code(n: usize, one: usize, add: &[usize], mul: &[usize]) -> Vec<usize> {
    permutations(n)
        .into_iter()
        .filter(|p| p[0] == 0)
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            let mut c = vec![p[one]];
            for t in [add, mul] {
                for i in 0..n {
                    for j in 0..n {
                        c.push(p[t[inv[i] * n + inv[j]]]);
                    }
                }
            }
            c
        })
        .min()
        .unwrap()
}

fn symmetric_tables(n: usize, cells: &[(usize, usize)], base: &[usize]) -> Vec<Vec<usize>> {
    let total = n.pow(cells.len() as u32);
    (0..total)
        .map(|mut k| {
            let mut t = base.to_vec();
            for &(i, j) in cells {
                let v = k % n;
                k /= n;
                t[i * n + j] = v;
                t[j * n + i] = v;
            }
            t
        })
        .collect()
}

/// Isomorphism classes of commutative semirings of order `n`, by trying
/// every pair of symmetric tables and every identity position.
fn brute_force_classes(n: usize) -> BTreeSet<Vec<usize>> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let tables = symmetric_tables(n, &cells, &vec![0; n * n]);
    let adds: Vec<&Vec<usize>> = tables.iter().filter(|t| (0..n).all(|x| t[x] == x)).collect();
    let muls: Vec<&Vec<usize>> = tables.iter().filter(|t| (0..n).all(|x| t[x] == 0)).collect();
    let mut classes = BTreeSet::new();
    for one in 0..n {
        for add in &adds {
            for mul in &muls {
                if (0..n).all(|x| mul[one * n + x] == x) && is_semiring(n, one, add, mul) {
                    classes.insert(code(n, one, add, mul));
                }
            }
        }
    }
    classes
}

/// Order 4 with 0 and the identity pinned at indices 0 and 1; every other
/// cell ranges freely.
fn pinned_classes_order_4() -> BTreeSet<Vec<usize>> {
    let n = 4;
    let mut add_base = vec![0; 16];
    let mut mul_base = vec![0; 16];
    for x in 0..n {
        add_base[x] = x;
        add_base[x * n] = x;
        mul_base[n + x] = x;
        mul_base[x * n + 1] = x;
    }
    let add_cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mul_cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let adds = symmetric_tables(n, &add_cells, &add_base);
    let muls = symmetric_tables(n, &mul_cells, &mul_base);
    let mut classes = BTreeSet::new();
    for add in &adds {
        for mul in &muls {
            if is_semiring(n, 1, add, mul) {
                classes.insert(code(n, 1, add, mul));
            }
        }
    }
    classes
}

fn enumerated_classes(n: usize) -> Vec<Vec<usize>> {
    enumerate_small(n, Mode::Exhaustive)
        .unwrap()
        .iter()
        .map(|e| {
            let t = &e.table;
            let add = t.add_rows().concat();
            let mul = t.mul_rows().concat();
            assert!(is_semiring(n, t.one(), &add, &mul), "{} is not a semiring", t.name());
            code(n, t.one(), &add, &mul)
        })
        .collect()
}

fn assert_matches(n: usize, expected: BTreeSet<Vec<usize>>) {
    let got = enumerated_classes(n);
    let distinct: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
    assert_eq!(distinct.len(), got.len(), "order {n}: two enumerated semirings are isomorphic");
    assert_eq!(distinct, expected, "order {n}: classes differ");
}

#[test]
fn order_one_and_two_match_brute_force() {
    assert_eq!(brute_force_classes(1).len(), 1);
    assert_eq!(brute_force_classes(2).len(), 2);
    assert_matches(1, brute_force_classes(1));
    assert_matches(2, brute_force_classes(2));
}

#[test]
fn order_three_matches_brute_force() {
    assert_matches(3, brute_force_classes(3));
}

#[test]
fn order_four_matches_pinned_brute_force() {
    assert_matches(4, pinned_classes_order_4());
}
