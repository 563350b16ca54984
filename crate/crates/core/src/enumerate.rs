//! Small-order semiring enumeration: exhaustive up to isomorphism, or
//! seeded random sampling.
//!
//! Both modes run the same backtracking search over the free cells of the
//! two tables. The additive identity is pinned at 0 and the multiplicative
//! identity at 1, so the only free cells are `a + b` for `1 <= a <= b` and
//! `a * b` for `2 <= a <= b`. Associativity and distributivity are checked
//! on every instance whose entries are already known, which prunes most of
//! the tree.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::{CorpusEntry, Source};
use crate::semiring::{Limits, SemiringTable};

pub const MAX_EXHAUSTIVE_ORDER: usize = 4;
pub const MAX_RANDOM_ORDER: usize = 6;

const NODE_BUDGET: usize = 20_000;
const ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { seed: u64, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {order} exceeds the {mode} enumeration limit {limit}")]
    TooLarge {
        order: usize,
        limit: usize,
        mode: &'static str,
    },
    #[error("order must be positive")]
    ZeroOrder,
}

type Cell = Option<u8>;

struct Search<'r> {
    n: usize,
    add: Vec<Cell>,
    mul: Vec<Cell>,
    /// Free cells in fill order: `(is_mul, a, b)`.
    cells: Vec<(bool, usize, usize)>,
    rng: Option<&'r mut ChaCha8Rng>,
    nodes: usize,
    budget: Option<usize>,
}

impl<'r> Search<'r> {
    fn new(n: usize, rng: Option<&'r mut ChaCha8Rng>, budget: Option<usize>) -> Self {
        let mut add = vec![None; n * n];
        let mut mul = vec![None; n * n];
        for x in 0..n {
            add[x] = Some(x as u8);
            add[x * n] = Some(x as u8);
            mul[x] = Some(0);
            mul[x * n] = Some(0);
            if n > 1 {
                mul[n + x] = Some(x as u8);
                mul[x * n + 1] = Some(x as u8);
            }
        }
        let mut cells = Vec::new();
        for a in 1..n {
            for b in a..n {
                cells.push((false, a, b));
            }
        }
        for a in 2..n {
            for b in a..n {
                cells.push((true, a, b));
            }
        }
        Search {
            n,
            add,
            mul,
            cells,
            rng,
            nodes: 0,
            budget,
        }
    }

    fn set(&mut self, (is_mul, a, b): (bool, usize, usize), v: Cell) {
        let n = self.n;
        let t = if is_mul { &mut self.mul } else { &mut self.add };
        t[a * n + b] = v;
        t[b * n + a] = v;
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        let add = |a: usize, b: usize| self.add[a * n + b].map(usize::from);
        let mul = |a: usize, b: usize| self.mul[a * n + b].map(usize::from);
        let agree = |l: Option<usize>, r: Option<usize>| match (l, r) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !agree(
                        add(a, b).and_then(|ab| add(ab, c)),
                        add(b, c).and_then(|bc| add(a, bc)),
                    ) || !agree(
                        mul(a, b).and_then(|ab| mul(ab, c)),
                        mul(b, c).and_then(|bc| mul(a, bc)),
                    ) || !agree(
                        add(b, c).and_then(|bc| mul(a, bc)),
                        mul(a, b).zip(mul(a, c)).and_then(|(ab, ac)| add(ab, ac)),
                    ) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Visits complete tables until `visit` returns false. Returns false if
    /// stopped early, by the visitor or by the node budget.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[Cell], &[Cell]) -> bool) -> bool {
        if depth == self.cells.len() {
            return visit(&self.add, &self.mul);
        }
        let cell = self.cells[depth];
        let mut values: Vec<u8> = (0..self.n as u8).collect();
        if let Some(rng) = self.rng.as_deref_mut() {
            values.shuffle(rng);
        }
        for v in values {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return false;
            }
            self.set(cell, Some(v));
            if self.consistent() && !self.run(depth + 1, visit) {
                self.set(cell, None);
                return false;
            }
        }
        self.set(cell, None);
        true
    }
}

fn unwrap_table(t: &[Cell]) -> Vec<usize> {
    t.iter().map(|c| usize::from(c.expect("complete table"))).collect()
}

/// Smallest encoding of the table over relabelings fixing 0 and 1.
fn canonical_form(n: usize, add: &[usize], mul: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_tail(&mut perm, 2.min(n), &mut |p| {
        let mut inv = vec![0; n];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        let mut code = Vec::with_capacity(2 * n * n);
        for t in [add, mul] {
            for i in 0..n {
                for j in 0..n {
                    code.push(p[t[inv[i] * n + inv[j]]]);
                }
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_tail(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k + 1 >= perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_tail(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn entry(name: String, n: usize, add: Vec<usize>, mul: Vec<usize>) -> CorpusEntry {
    let one = if n > 1 { 1 } else { 0 };
    let table = SemiringTable::from_fn(name, n, one, |a, b| add[a * n + b], |a, b| mul[a * n + b])
        .expect("search produces well-formed tables");
    CorpusEntry::new(Source::Enumerated, table, &Limits::default())
        .expect("search produces valid semirings")
}

/// Enumerates semirings of the given order.
///
/// Exhaustive mode yields one representative per isomorphism class, named
/// `E{order}.{i}`. Random mode yields `count` samples named
/// `R{order}.{seed}.{i}`; samples are not deduplicated.
pub fn enumerate_small(order: usize, mode: Mode) -> Result<Vec<CorpusEntry>, EnumerateError> {
    if order == 0 {
        return Err(EnumerateError::ZeroOrder);
    }
    match mode {
        Mode::Exhaustive => {
            if order > MAX_EXHAUSTIVE_ORDER {
                return Err(EnumerateError::TooLarge {
                    order,
                    limit: MAX_EXHAUSTIVE_ORDER,
                    mode: "exhaustive",
                });
            }
            let mut found = Vec::new();
            Search::new(order, None, None).run(0, &mut |add, mul| {
                let (add, mul) = (unwrap_table(add), unwrap_table(mul));
                let code = canonical_form(order, &add, &mul);
                let (ca, cm) = code.split_at(order * order);
                if ca == add.as_slice() && cm == mul.as_slice() {
                    found.push((add, mul));
                }
                true
            });
            Ok(found
                .into_iter()
                .enumerate()
                .map(|(i, (add, mul))| entry(format!("E{order}.{}", i + 1), order, add, mul))
                .collect())
        }
        Mode::Random { seed, count } => {
            if order > MAX_RANDOM_ORDER {
                return Err(EnumerateError::TooLarge {
                    order,
                    limit: MAX_RANDOM_ORDER,
                    mode: "random",
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count);
            for i in 0..count {
                for _ in 0..ATTEMPTS {
                    let mut sample = None;
                    Search::new(order, Some(&mut rng), Some(NODE_BUDGET)).run(0, &mut |a, m| {
                        sample = Some((unwrap_table(a), unwrap_table(m)));
                        false
                    });
                    if let Some((add, mul)) = sample {
                        out.push(entry(format!("R{order}.{seed}.{}", i + 1), order, add, mul));
                        break;
                    }
                }
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::validate;

    #[test]
    fn order_one_is_the_zero_semiring() {
        let all = enumerate_small(1, Mode::Exhaustive).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].table.is_zero_semiring());
    }

    #[test]
    fn order_two_is_z2_and_b() {
        let all = enumerate_small(2, Mode::Exhaustive).unwrap();
        let adds: Vec<_> = all.iter().map(|e| e.table.add(1, 1)).collect();
        assert_eq!(adds, vec![0, 1]);
    }

    #[test]
    fn limits() {
        assert!(enumerate_small(5, Mode::Exhaustive).is_err());
        assert!(enumerate_small(7, Mode::Random { seed: 1, count: 1 }).is_err());
        assert_eq!(enumerate_small(0, Mode::Exhaustive).unwrap_err(), EnumerateError::ZeroOrder);
    }

    #[test]
    fn random_is_seed_deterministic_and_valid() {
        let a = enumerate_small(5, Mode::Random { seed: 7, count: 5 }).unwrap();
        let b = enumerate_small(5, Mode::Random { seed: 7, count: 5 }).unwrap();
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            assert!(validate(&x.table).ok);
            assert_eq!(x.table.add_rows(), y.table.add_rows());
            assert_eq!(x.table.mul_rows(), y.table.mul_rows());
        }
    }

    #[test]
    fn canonical_forms_are_distinct() {
        for n in 1..=MAX_EXHAUSTIVE_ORDER {
            let all = enumerate_small(n, Mode::Exhaustive).unwrap();
            let mut codes: Vec<Vec<usize>> = all
                .iter()
                .map(|e| {
                    let t = &e.table;
                    let flat = |rows: Vec<Vec<usize>>| rows.concat();
                    canonical_form(n, &flat(t.add_rows()), &flat(t.mul_rows()))
                })
                .collect();
            let len = codes.len();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), len);
        }
    }
}
