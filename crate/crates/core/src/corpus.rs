//! Builtin semiring families, the default corpus, and loading semiring files
//! from disk.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::semiring::{
    direct_product, parse_semiring, validate, Limits, SemiringTable, TableError, ValidationReport,
};
use crate::z::ZContext;

pub const MAX_CHAIN: usize = 12;
pub const MAX_ZMOD: usize = 30;
pub const MAX_TRUNCNAT: usize = 12;
pub const MAX_SQUARE_ZERO: usize = 4;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown builtin `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    TooLarge(TableError),
    #[error("{name}: not a semiring\n{report}")]
    Invalid { name: String, report: ValidationReport },
    #[error("{}: {error}", path.display())]
    Table { path: PathBuf, error: TableError },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Source {
    Builtin,
    File,
    Enumerated,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Builtin => "BUILTIN",
            Source::File => "FILE",
            Source::Enumerated => "ENUMERATED",
        })
    }
}

/// Precomputed structural flags. The lattice-derived ones are `None` when
/// the semiring is too large to enumerate its ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tags {
    pub idempotent: bool,
    pub zero_semiring: bool,
    pub bzi: Option<bool>,
    pub arithmetical: Option<bool>,
    pub semisimple: Option<bool>,
}

impl Tags {
    pub fn compute(table: &SemiringTable, limits: &Limits) -> Tags {
        let ctx = ZContext::build(table.clone(), limits).ok();
        Tags {
            idempotent: table.is_idempotent(),
            zero_semiring: table.is_zero_semiring(),
            bzi: ctx.as_ref().map(|c| c.is_bzi()),
            arithmetical: ctx.as_ref().map(|c| c.lattice().is_arithmetical()),
            semisimple: ctx.as_ref().map(|c| c.lattice().is_semisimple()),
        }
    }

    /// Names of the flags that hold, e.g. `["bzi", "semisimple"]`.
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.bzi == Some(true) {
            out.push("bzi");
        }
        if self.arithmetical == Some(true) {
            out.push("arithmetical");
        }
        if self.semisimple == Some(true) {
            out.push("semisimple");
        }
        if self.idempotent {
            out.push("idempotent");
        }
        if self.zero_semiring {
            out.push("zero-semiring");
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    pub table: SemiringTable,
    pub tags: Tags,
}

impl CorpusEntry {
    /// Validates `table` and computes its tags.
    pub fn new(source: Source, table: SemiringTable, limits: &Limits) -> Result<Self, CorpusError> {
        let report = validate(&table);
        if !report.ok {
            return Err(CorpusError::Invalid {
                name: table.name().to_string(),
                report,
            });
        }
        Ok(CorpusEntry {
            name: table.name().to_string(),
            source,
            tags: Tags::compute(&table, limits),
            table,
        })
    }
}

pub fn boolean() -> SemiringTable {
    SemiringTable::from_fn("B", 2, 1, |a, b| a | b, |a, b| a & b).expect("well-formed")
}

/// `{0, .., k}` under `(max, min)`: bottom is 0, top is 1.
pub fn chain(k: usize) -> Result<SemiringTable, CorpusError> {
    if !(1..=MAX_CHAIN).contains(&k) {
        return Err(CorpusError::BadParameter(format!(
            "chain length must be in 1..={MAX_CHAIN}, got {k}"
        )));
    }
    Ok(SemiringTable::from_fn(format!("C{}", k + 1), k + 1, k, usize::max, usize::min)
        .expect("well-formed"))
}

pub fn zmod(n: usize) -> Result<SemiringTable, CorpusError> {
    if !(1..=MAX_ZMOD).contains(&n) {
        return Err(CorpusError::BadParameter(format!(
            "modulus must be in 1..={MAX_ZMOD}, got {n}"
        )));
    }
    Ok(SemiringTable::from_fn(
        format!("Z{n}"),
        n,
        1 % n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )
    .expect("well-formed"))
}

/// `{0, .., k}` with addition and multiplication saturating at `k`.
pub fn truncnat(k: usize) -> Result<SemiringTable, CorpusError> {
    if !(1..=MAX_TRUNCNAT).contains(&k) {
        return Err(CorpusError::BadParameter(format!(
            "truncation point must be in 1..={MAX_TRUNCNAT}, got {k}"
        )));
    }
    Ok(SemiringTable::from_fn(
        format!("TN{k}"),
        k + 1,
        1,
        |a, b| (a + b).min(k),
        |a, b| (a * b).min(k),
    )
    .expect("well-formed"))
}

/// `F2[x1, .., xk] / (x1, .., xk)²`. Bit 0 of an element is its constant
/// term and bit `i` the coefficient of `xi`.
pub fn square_zero(k: usize) -> Result<SemiringTable, CorpusError> {
    if !(1..=MAX_SQUARE_ZERO).contains(&k) {
        return Err(CorpusError::BadParameter(format!(
            "number of variables must be in 1..={MAX_SQUARE_ZERO}, got {k}"
        )));
    }
    let mul = |a: usize, b: usize| {
        let (a0, b0) = (a & 1, b & 1);
        let linear = (if a0 == 1 { b & !1 } else { 0 }) ^ (if b0 == 1 { a & !1 } else { 0 });
        (a0 & b0) | linear
    };
    Ok(SemiringTable::from_fn(format!("SZ{k}"), 1 << (k + 1), 1, |a, b| a ^ b, mul)
        .expect("well-formed"))
}

pub fn product(
    a: &SemiringTable,
    b: &SemiringTable,
    limits: &Limits,
) -> Result<SemiringTable, CorpusError> {
    direct_product(a, b, limits.max_order).map_err(CorpusError::TooLarge)
}

/// Parses a builtin expression and returns the table.
///
/// Accepted forms: `boolean`, `chain(k)`, `zmod(n)`, `truncnat(k)`,
/// `square_zero(k)`, `product(X,Y)`, the short names `B`, `C{k+1}`, `Z{n}`,
/// `TN{k}`, `SZ{k}`, and
/// products written `XxY`.
pub fn builtin_table(expr: &str, limits: &Limits) -> Result<SemiringTable, CorpusError> {
    let expr = expr.trim();
    let factors = split_top_level(expr, 'x');
    if factors.len() > 1 {
        let mut acc = builtin_table(factors[0], limits)?;
        for f in &factors[1..] {
            acc = product(&acc, &builtin_table(f, limits)?, limits)?;
        }
        return Ok(acc);
    }
    if let Some((head, args)) = call(expr) {
        let parts = split_top_level(args, ',');
        let one_int = || -> Result<usize, CorpusError> {
            match parts.as_slice() {
                [p] => p.trim().parse().map_err(|_| {
                    CorpusError::BadParameter(format!("`{p}` is not a non-negative integer"))
                }),
                _ => Err(CorpusError::BadParameter(format!(
                    "{head} takes one integer argument"
                ))),
            }
        };
        return match head {
            "chain" => chain(one_int()?),
            "zmod" => zmod(one_int()?),
            "truncnat" => truncnat(one_int()?),
            "square_zero" => square_zero(one_int()?),
            "product" => match parts.as_slice() {
                [a, b] => product(&builtin_table(a, limits)?, &builtin_table(b, limits)?, limits),
                _ => Err(CorpusError::BadParameter(
                    "product takes two arguments".to_string(),
                )),
            },
            _ => Err(CorpusError::UnknownName(expr.to_string())),
        };
    }
    if expr == "boolean" || expr == "B" {
        return Ok(boolean());
    }
    let short = |prefix: &str| -> Option<Result<usize, CorpusError>> {
        let rest = expr.strip_prefix(prefix)?;
        (!rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())).then(|| {
            rest.parse()
                .map_err(|_| CorpusError::BadParameter(format!("`{rest}` is out of range")))
        })
    };
    if let Some(k) = short("SZ") {
        return square_zero(k?);
    }
    if let Some(k) = short("TN") {
        return truncnat(k?);
    }
    if let Some(n) = short("Z") {
        return zmod(n?);
    }
    if let Some(m) = short("C") {
        let m = m?;
        if m == 0 {
            return Err(CorpusError::BadParameter("C0 is not a chain".to_string()));
        }
        return chain(m - 1);
    }
    Err(CorpusError::UnknownName(expr.to_string()))
}

pub fn builtin(expr: &str, limits: &Limits) -> Result<CorpusEntry, CorpusError> {
    CorpusEntry::new(Source::Builtin, builtin_table(expr, limits)?, limits)
}

/// `name(args)` split into `("name", "args")`.
fn call(expr: &str) -> Option<(&str, &str)> {
    let open = expr.find('(')?;
    let inner = expr[open + 1..].strip_suffix(')')?;
    Some((expr[..open].trim(), inner))
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Builtin expressions that make up [`default_corpus`], in order.
pub const DEFAULT_CORPUS: &[&str] = &[
    "B", "C2", "C3", "C4", "C5", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11",
    "Z12", "TN2", "TN3", "TN4", "SZ2", "BxB", "Z2xZ3", "Z4xB", "C3xC3",
];

pub fn default_corpus() -> Vec<CorpusEntry> {
    let limits = Limits::default();
    DEFAULT_CORPUS
        .iter()
        .map(|e| builtin(e, &limits).expect("default corpus entries are valid"))
        .collect()
}

/// Documentation lines for `catalog --list`.
pub fn builtin_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("boolean | B", "({0,1}, or, and)"),
        ("chain(k) | C<k+1>", "({0..k}, max, min), 1 <= k <= 12"),
        ("zmod(n) | Z<n>", "integers mod n, 1 <= n <= 30"),
        ("truncnat(k) | TN<k>", "{0..k}, + and * saturating at k, 1 <= k <= 12"),
        ("square_zero(k) | SZ<k>", "F2[x1..xk]/(x1..xk)^2, 1 <= k <= 4"),
        ("product(X,Y) | XxY", "direct product, order <= 64"),
    ]
}

pub fn load_file(path: &Path, limits: &Limits) -> Result<CorpusEntry, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut table = parse_semiring(&text).map_err(|error| CorpusError::Table {
        path: path.to_path_buf(),
        error,
    })?;
    if table.name().is_empty() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        table = table.with_name(stem);
    }
    CorpusEntry::new(Source::File, table, limits).map_err(|e| match e {
        CorpusError::Invalid { report, .. } => CorpusError::Invalid {
            name: path.display().to_string(),
            report,
        },
        other => other,
    })
}

/// Every `*.json` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path, limits: &Limits) -> Result<Vec<CorpusEntry>, CorpusError> {
    let io = |source| CorpusError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"));
    paths.sort();
    paths.iter().map(|p| load_file(p, limits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IdealLattice;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn zmod4_matches_file_example() {
        let z4 = zmod(4).unwrap();
        assert_eq!(
            z4.add_rows(),
            vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 3, 0, 1], vec![3, 0, 1, 2]]
        );
        assert_eq!(
            z4.mul_rows(),
            vec![vec![0, 0, 0, 0], vec![0, 1, 2, 3], vec![0, 2, 0, 2], vec![0, 3, 2, 1]]
        );
    }

    #[test]
    fn chain_ideals_are_downsets() {
        let l = IdealLattice::build(chain(2).unwrap(), &limits()).unwrap();
        let got: Vec<Vec<usize>> = l.ideals().iter().map(|a| a.to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn every_builtin_in_range_validates() {
        for k in 1..=MAX_CHAIN {
            assert!(validate(&chain(k).unwrap()).ok);
            assert!(validate(&truncnat(k).unwrap()).ok, "TN{k}");
        }
        for n in 1..=MAX_ZMOD {
            assert!(validate(&zmod(n).unwrap()).ok);
        }
        for k in 1..=MAX_SQUARE_ZERO {
            assert!(validate(&square_zero(k).unwrap()).ok, "SZ{k}");
        }
        assert_eq!(truncnat(3).unwrap().order(), 4);
    }

    #[test]
    fn square_zero_two_is_not_arithmetical() {
        let l = IdealLattice::build(square_zero(2).unwrap(), &limits()).unwrap();
        assert_eq!(l.len(), 6);
        assert!(!l.is_arithmetical());
        let sz1 = IdealLattice::build(square_zero(1).unwrap(), &limits()).unwrap();
        assert!(sz1.is_arithmetical());
    }

    #[test]
    fn parameter_ranges() {
        assert!(matches!(chain(13), Err(CorpusError::BadParameter(_))));
        assert!(matches!(zmod(31), Err(CorpusError::BadParameter(_))));
        assert!(matches!(zmod(0), Err(CorpusError::BadParameter(_))));
        assert!(matches!(truncnat(0), Err(CorpusError::BadParameter(_))));
        assert!(matches!(
            builtin_table("Z8xZ8xB", &limits()),
            Err(CorpusError::TooLarge(TableError::Overflow { order: 128, max: 64 }))
        ));
        assert!(matches!(
            builtin_table("quaternions", &limits()),
            Err(CorpusError::UnknownName(_))
        ));
    }

    #[test]
    fn expression_forms_agree() {
        let l = limits();
        let pairs = [
            ("boolean", "B"),
            ("chain(2)", "C3"),
            ("zmod(6)", "Z6"),
            ("truncnat(3)", "TN3"),
            ("square_zero(2)", "SZ2"),
            ("product(zmod(2),zmod(3))", "Z2xZ3"),
            ("product(chain(2), chain(2))", "C3xC3"),
        ];
        for (long, short) in pairs {
            let a = builtin_table(long, &l).unwrap();
            let b = builtin_table(short, &l).unwrap();
            assert_eq!(a.add_rows(), b.add_rows(), "{long}");
            assert_eq!(a.mul_rows(), b.mul_rows(), "{long}");
            assert_eq!(a.name(), b.name(), "{long}");
        }
    }

    #[test]
    fn default_corpus_contents() {
        let corpus = default_corpus();
        assert_eq!(corpus.len(), DEFAULT_CORPUS.len());
        let names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, DEFAULT_CORPUS);
        assert!(corpus.iter().all(|e| e.table.order() <= 16));
        let z6 = corpus.iter().find(|e| e.name == "Z6").unwrap();
        assert_eq!(z6.tags.bzi, Some(true));
        assert_eq!(z6.tags.semisimple, Some(true));
        let z4 = corpus.iter().find(|e| e.name == "Z4").unwrap();
        assert_eq!(z4.tags.bzi, Some(false));
        assert_eq!(z4.tags.semisimple, Some(false));
        let c3 = corpus.iter().find(|e| e.name == "C3").unwrap();
        assert!(c3.tags.idempotent);
        assert_eq!(c3.tags.arithmetical, Some(true));
        // Tags agree with recomputation.
        for e in &corpus {
            assert_eq!(e.tags, Tags::compute(&e.table, &limits()));
        }
    }

    #[test]
    fn z2_times_z3_has_the_lattice_of_z6() {
        let l = limits();
        let p = IdealLattice::build(builtin_table("Z2xZ3", &l).unwrap(), &l).unwrap();
        let z6 = IdealLattice::build(zmod(6).unwrap(), &l).unwrap();
        assert_eq!(p.len(), 4);
        let sizes = |l: &IdealLattice| l.ideals().iter().map(|a| a.len()).collect::<Vec<_>>();
        assert_eq!(sizes(&p), sizes(&z6));
    }

    #[test]
    fn load_dir_sorted_and_aborts_on_invalid() {
        let dir = tempfile::tempdir().unwrap();
        let write = |name: &str, text: &str| std::fs::write(dir.path().join(name), text).unwrap();
        write("b.json", &crate::semiring::serialize_semiring(&zmod(3).unwrap()));
        write("a.json", &crate::semiring::serialize_semiring(&boolean()));
        write("notes.txt", "ignored");
        let entries = load_dir(dir.path(), &limits()).unwrap();
        let names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, vec!["B", "Z3"]);
        assert!(entries.iter().all(|e| e.source == Source::File));

        write(
            "c.json",
            r#"{ "name": "bad", "order": 2, "one": 1, "add": [[0,1],[1,1]], "mul": [[0,1],[1,1]] }"#,
        );
        let err = load_dir(dir.path(), &limits()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("c.json"), "{msg}");
        assert!(msg.contains("absorption"), "{msg}");
    }
}
