//! Finite commutative semirings presented by Cayley tables.
//!
//! Elements are the indices `0..n`. The additive identity is always index 0;
//! the multiplicative identity is recorded in [`SemiringTable::one`]. Tables
//! are stored row-major, so `add[i * n + j]` holds `i + j`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the order of tables produced by [`direct_product`].
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Default cap on the order accepted by the ideal subset scan.
pub const DEFAULT_SCAN_MAX_ORDER: usize = 22;

/// Size knobs shared by table construction and ideal enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order a product construction may produce.
    pub max_order: usize,
    /// Largest order for which `Id(S)` is enumerated by subset scan.
    pub scan_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            scan_max_order: DEFAULT_SCAN_MAX_ORDER,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("range error: {0}")]
    Range(String),
    #[error("product order {order} exceeds the configured maximum {max}")]
    Overflow { order: usize, max: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemiringTable {
    name: String,
    order: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl SemiringTable {
    /// Builds a table from row lists. Fails with [`TableError::Malformed`]
    /// when the rows are not `n × n` or hold entries outside `0..n`.
    /// The semiring axioms are not checked here; see [`validate`].
    pub fn from_rows(
        name: impl Into<String>,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        let n = add.len();
        if n == 0 {
            return Err(TableError::Malformed("order must be positive".into()));
        }
        for (label, rows) in [("add", &add), ("mul", &mul)] {
            if rows.len() != n {
                return Err(TableError::Malformed(format!(
                    "{label} has {} rows, expected {n}",
                    rows.len()
                )));
            }
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(TableError::Malformed(format!(
                        "{label} row {i} has length {}, expected {n}",
                        row.len()
                    )));
                }
                if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                    return Err(TableError::Malformed(format!(
                        "{label} row {i} holds entry {bad} outside 0..{n}"
                    )));
                }
            }
        }
        if one >= n {
            return Err(TableError::Malformed(format!(
                "identity index {one} outside 0..{n}"
            )));
        }
        Ok(SemiringTable {
            name: name.into(),
            order: n,
            one,
            add: add.into_iter().flatten().collect(),
            mul: mul.into_iter().flatten().collect(),
        })
    }

    /// Builds a table of order `n` by evaluating the two operations.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, TableError> {
        let rows = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..order)
                .map(|i| (0..order).map(|j| f(i, j)).collect())
                .collect()
        };
        Self::from_rows(name, one, rows(&add), rows(&mul))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub const fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    /// `x^k` for `k ≥ 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        debug_assert!(k >= 1);
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// The one-element semiring in which `0 = 1`.
    pub fn is_zero_semiring(&self) -> bool {
        self.order == 1
    }

    /// `x·x = x` for every element.
    pub fn is_idempotent(&self) -> bool {
        self.elements().all(|x| self.mul(x, x) == x)
    }
}

impl fmt::Debug for SemiringTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiringTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("one", &self.one)
            .field("add", &self.add_rows())
            .field("mul", &self.mul_rows())
            .finish()
    }
}

/// Axioms checked by [`validate`], grouped as commutative monoid under
/// addition, commutative monoid under multiplication, absorption by zero, and
/// distributivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    IdentityIndex,
    Absorption,
    Distributive,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::IdentityIndex => "identity-index",
            Axiom::Absorption => "absorption",
            Axiom::Distributive => "distributive",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// The elements instantiating the failed law, in the order they appear
    /// in it.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Set for the order-1 semiring; accepted, but claims that need a
    /// nonzero semiring gate on it.
    pub zero_semiring: bool,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            write!(f, "ok")?;
            if self.zero_semiring {
                write!(f, " (zero semiring)")?;
            }
            return writeln!(f);
        }
        writeln!(f, "invalid: {} violated axiom(s)", self.violations.len())?;
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(usize::to_string).collect();
            writeln!(f, "  {} at ({})", v.axiom, w.join(","))?;
        }
        Ok(())
    }
}

/// Checks the commutative semiring axioms exhaustively, reporting one
/// witness per violated axiom. Runs in `O(n³)` table probes.
pub fn validate(table: &SemiringTable) -> ValidationReport {
    let n = table.order();
    let mut violations = Vec::new();
    let mut report = |axiom: Axiom, witness: Option<Vec<usize>>| {
        if let Some(witness) = witness {
            violations.push(Violation { axiom, witness });
        }
    };
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples = || {
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    };
    let s = table;

    report(
        Axiom::AddAssociative,
        triples()
            .find(|&(a, b, c)| s.add(s.add(a, b), c) != s.add(a, s.add(b, c)))
            .map(|(a, b, c)| vec![a, b, c]),
    );
    report(
        Axiom::AddCommutative,
        pairs()
            .find(|&(a, b)| s.add(a, b) != s.add(b, a))
            .map(|(a, b)| vec![a, b]),
    );
    report(
        Axiom::AddIdentity,
        (0..n)
            .find(|&x| s.add(0, x) != x || s.add(x, 0) != x)
            .map(|x| vec![0, x]),
    );
    report(
        Axiom::MulAssociative,
        triples()
            .find(|&(a, b, c)| s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
            .map(|(a, b, c)| vec![a, b, c]),
    );
    report(
        Axiom::MulCommutative,
        pairs()
            .find(|&(a, b)| s.mul(a, b) != s.mul(b, a))
            .map(|(a, b)| vec![a, b]),
    );
    let one = s.one();
    report(
        Axiom::MulIdentity,
        (0..n)
            .find(|&x| s.mul(one, x) != x || s.mul(x, one) != x)
            .map(|x| vec![one, x]),
    );
    report(
        Axiom::IdentityIndex,
        (n > 1 && one == 0).then(|| vec![one]),
    );
    report(
        Axiom::Absorption,
        (0..n)
            .find(|&x| s.mul(0, x) != 0 || s.mul(x, 0) != 0)
            .map(|x| vec![0, x]),
    );
    report(
        Axiom::Distributive,
        triples()
            .find(|&(a, b, c)| s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
            .map(|(a, b, c)| vec![a, b, c]),
    );

    ValidationReport {
        ok: violations.is_empty(),
        violations,
        zero_semiring: n == 1,
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    #[serde(default)]
    name: String,
    order: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

/// Parses the JSON semiring file format. Dimension errors are reported as
/// [`TableError::Syntax`] with a position; out-of-range entries as
/// [`TableError::Range`]. The axioms are not checked.
pub fn parse_semiring(text: &str) -> Result<SemiringTable, TableError> {
    let raw: RawTable = serde_json::from_str(text).map_err(|e| TableError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = raw.order;
    if n == 0 {
        return Err(TableError::Range("order must be at least 1".into()));
    }
    for (label, rows) in [("add", &raw.add), ("mul", &raw.mul)] {
        let shape_error = |message: String| {
            let (line, column) = key_position(text, label);
            TableError::Syntax {
                line,
                column,
                message,
            }
        };
        if rows.len() != n {
            return Err(shape_error(format!(
                "`{label}` has {} rows but order is {n}",
                rows.len()
            )));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(shape_error(format!(
                "`{label}` row {i} has length {} but order is {n}",
                row.len()
            )));
        }
    }
    if raw.one >= n {
        return Err(TableError::Range(format!(
            "`one` = {} is outside 0..{n}",
            raw.one
        )));
    }
    for (label, rows) in [("add", &raw.add), ("mul", &raw.mul)] {
        for (i, row) in rows.iter().enumerate() {
            if let Some((j, &x)) = row.iter().enumerate().find(|(_, &x)| x >= n) {
                return Err(TableError::Range(format!(
                    "`{label}`[{i}][{j}] = {x} is outside 0..{n}"
                )));
            }
        }
    }
    SemiringTable::from_rows(raw.name, raw.one, raw.add, raw.mul)
}

/// 1-based line and column of the first `"key"` occurrence, or (1, 1).
fn key_position(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    match text.find(&needle) {
        Some(offset) => {
            let before = &text[..offset];
            let line = before.matches('\n').count() + 1;
            let column = offset - before.rfind('\n').map_or(0, |p| p + 1) + 1;
            (line, column)
        }
        None => (1, 1),
    }
}

/// Canonical text form: fields in the order name, order, one, add, mul; one
/// table per line; newline-terminated.
pub fn serialize_semiring(table: &SemiringTable) -> String {
    let rows = |rows: Vec<Vec<usize>>| -> String {
        let inner: Vec<String> = rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", inner.join(","))
    };
    let name = serde_json::to_string(table.name()).expect("strings always serialize");
    format!(
        "{{ \"name\": {name}, \"order\": {}, \"one\": {},\n  \"add\": {},\n  \"mul\": {} }}\n",
        table.order(),
        table.one(),
        rows(table.add_rows()),
        rows(table.mul_rows()),
    )
}

/// Componentwise product. Element `(i, j)` is encoded as `i·|t| + j`, so the
/// zero stays at index 0.
pub fn direct_product(
    s: &SemiringTable,
    t: &SemiringTable,
    max_order: usize,
) -> Result<SemiringTable, TableError> {
    let (n, m) = (s.order(), t.order());
    let order = n * m;
    if order > max_order {
        return Err(TableError::Overflow {
            order,
            max: max_order,
        });
    }
    let split = |x: usize| (x / m, x % m);
    let join = |i: usize, j: usize| i * m + j;
    SemiringTable::from_fn(
        format!("{}x{}", s.name(), t.name()),
        order,
        join(s.one(), t.one()),
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(s.add(a, c), t.add(b, d))
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(s.mul(a, c), t.mul(b, d))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean() -> SemiringTable {
        SemiringTable::from_fn("B", 2, 1, |a, b| a | b, |a, b| a & b).unwrap()
    }

    fn zmod(n: usize) -> SemiringTable {
        SemiringTable::from_fn(format!("Z{n}"), n, 1 % n, |a, b| (a + b) % n, |a, b| (a * b) % n)
            .unwrap()
    }

    #[test]
    fn boolean_validates() {
        let r = validate(&boolean());
        assert!(r.ok, "{r}");
        assert!(!r.zero_semiring);
    }

    #[test]
    fn boolean_with_xor_addition_is_z2() {
        // Flipping add[1][1] to 0 yields the field with two elements, which
        // satisfies every axiom.
        let t = SemiringTable::from_rows("B'", 1, vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 1]])
            .unwrap();
        assert!(validate(&t).ok);
        assert_eq!(t.add_rows(), zmod(2).add_rows());
        assert_eq!(t.mul_rows(), zmod(2).mul_rows());
    }

    #[test]
    fn broken_identity_is_reported() {
        // add[1][1] = 0 but add[0][1] = 0 as well: 0 is no longer an identity.
        let t = SemiringTable::from_rows("bad", 1, vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]])
            .unwrap();
        let r = validate(&t);
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::AddIdentity));
    }

    #[test]
    fn non_associative_addition_is_reported() {
        // 1+1 = 2, 1+2 = 1, 2+2 = 0: (1+1)+2 = 0 but 1+(1+2) = 2.
        let add = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 0]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let r = validate(&SemiringTable::from_rows("x", 1, add, mul).unwrap());
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::AddAssociative));
    }

    #[test]
    fn absorption_witness() {
        let t = SemiringTable::from_rows("bad", 1, vec![vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![0, 1]])
            .unwrap();
        let r = validate(&t);
        let v = r
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::Absorption)
            .expect("absorption violation");
        assert_eq!(v.witness, vec![0, 1]);
    }

    #[test]
    fn zero_semiring_is_flagged() {
        let t = SemiringTable::from_rows("0", 0, vec![vec![0]], vec![vec![0]]).unwrap();
        let r = validate(&t);
        assert!(r.ok && r.zero_semiring);
    }

    #[test]
    fn one_at_zero_is_rejected_for_nontrivial_order() {
        let t = SemiringTable::from_rows("x", 0, vec![vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![1, 1]])
            .unwrap();
        let r = validate(&t);
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::IdentityIndex));
    }

    #[test]
    fn malformed_rows_are_rejected_at_construction() {
        let err = SemiringTable::from_rows("x", 1, vec![vec![0, 1], vec![1]], vec![vec![0, 0], vec![0, 1]]);
        assert!(matches!(err, Err(TableError::Malformed(_))));
        let err = SemiringTable::from_rows("x", 1, vec![vec![0, 1], vec![1, 2]], vec![vec![0, 0], vec![0, 1]]);
        assert!(matches!(err, Err(TableError::Malformed(_))));
    }

    #[test]
    fn serialized_boolean_round_trips() {
        let text = serialize_semiring(&boolean());
        assert_eq!(
            text,
            "{ \"name\": \"B\", \"order\": 2, \"one\": 1,\n  \"add\": [[0,1],[1,1]],\n  \"mul\": [[0,0],[0,1]] }\n"
        );
        let back = parse_semiring(&text).unwrap();
        assert_eq!(back.order(), 2);
        assert_eq!(back.one(), 1);
        assert_eq!(back, boolean());
    }

    #[test]
    fn z4_file_example_parses() {
        let text = r#"{ "name": "Z4", "order": 4, "one": 1,
  "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
  "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]] }
"#;
        let t = parse_semiring(text).unwrap();
        assert_eq!(t, zmod(4).with_name("Z4"));
        assert_eq!(serialize_semiring(&t), text);
    }

    #[test]
    fn short_row_is_a_syntax_error() {
        let text = "{ \"name\": \"x\", \"order\": 2, \"one\": 1,\n  \"add\": [[0,1],[1]],\n  \"mul\": [[0,0],[0,1]] }\n";
        match parse_semiring(text) {
            Err(TableError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_field_is_a_syntax_error_on_its_line() {
        let text = "{ \"name\": \"x\", \"order\": 2,\n \"order\": 2, \"one\": 1,\n  \"add\": [[0,1],[1,1]],\n  \"mul\": [[0,0],[0,1]] }\n";
        match parse_semiring(text) {
            Err(TableError::Syntax { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains("duplicate"), "{message}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_entry_is_a_range_error() {
        let text = r#"{ "name": "x", "order": 2, "one": 1, "add": [[0,1],[1,2]], "mul": [[0,0],[0,1]] }"#;
        assert!(matches!(parse_semiring(text), Err(TableError::Range(_))));
        let text = r#"{ "name": "x", "order": 2, "one": 2, "add": [[0,1],[1,1]], "mul": [[0,0],[0,1]] }"#;
        assert!(matches!(parse_semiring(text), Err(TableError::Range(_))));
    }

    #[test]
    fn parse_does_not_validate() {
        let text = r#"{ "name": "x", "order": 2, "one": 1, "add": [[0,0],[0,0]], "mul": [[0,1],[1,1]] }"#;
        let t = parse_semiring(text).unwrap();
        assert!(!validate(&t).ok);
    }

    #[test]
    fn product_of_booleans() {
        let bb = direct_product(&boolean(), &boolean(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(bb.order(), 4);
        assert_eq!(bb.one(), 3);
        assert!(bb.is_idempotent());
        assert!(validate(&bb).ok);
    }

    #[test]
    fn product_with_zero_semiring_is_identity() {
        let zero = SemiringTable::from_rows("0", 0, vec![vec![0]], vec![vec![0]]).unwrap();
        let z6 = zmod(6);
        let p = direct_product(&z6, &zero, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(p.add_rows(), z6.add_rows());
        assert_eq!(p.mul_rows(), z6.mul_rows());
        assert_eq!(p.one(), z6.one());
    }

    #[test]
    fn product_overflow() {
        let err = direct_product(&zmod(9), &zmod(8), DEFAULT_MAX_ORDER).unwrap_err();
        assert_eq!(err, TableError::Overflow { order: 72, max: 64 });
        assert!(direct_product(&zmod(9), &zmod(8), 72).is_ok());
    }
}
