//! Executable claims about finite semirings, evaluated over corpora.
//!
//! A [`ClaimSpec`] pairs a finite domain of instantiations with a pure check.
//! Evaluating a claim on a semiring either passes on every instantiation or
//! fails with the first failing one as a [`Witness`], which can be replayed
//! through [`ClaimSpec::reproduces_failure`].

mod hunt;
mod registry;
mod report;

use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::CorpusEntry;
use crate::elemset::ElemSet;
use crate::enumerate::EnumerateError;
use crate::ideal::{self, IdealError};
use crate::lattice::IdealLattice;
use crate::semiring::{Limits, SemiringTable};
use crate::z::ZContext;

pub use hunt::{hunt, Finding, HuntOutcome};
pub use registry::{find_claim, registry, select_claims};
pub use report::{render_text, Report, Summary, Tally};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("witness does not fit claim {claim}: {reason}")]
    BadWitness { claim: String, reason: String },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimClass {
    /// Must pass wherever applicable.
    Assert,
    /// Recorded; failures are listed as discrepancies.
    Survey,
}

impl fmt::Display for ClaimClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimClass::Assert => "ASSERT",
            ClaimClass::Survey => "SURVEY",
        })
    }
}

/// Precondition on the semiring for a claim to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    None,
    Bzi,
    BziNonzero,
    Arithmetical,
    MaxOrder(usize),
}

impl Hypothesis {
    /// `Err(reason)` when the semiring falls outside the hypothesis.
    pub fn admits(self, s: &Subject) -> Result<(), String> {
        let ctx = s.ctx();
        match self {
            Hypothesis::None => Ok(()),
            Hypothesis::Bzi if !ctx.is_bzi() => Err("not a bzi-semiring".into()),
            Hypothesis::Bzi => Ok(()),
            Hypothesis::BziNonzero if ctx.table().is_zero_semiring() => {
                Err("zero semiring".into())
            }
            Hypothesis::BziNonzero => Hypothesis::Bzi.admits(s),
            Hypothesis::Arithmetical if !ctx.lattice().is_arithmetical() => {
                Err("not arithmetical".into())
            }
            Hypothesis::Arithmetical => Ok(()),
            Hypothesis::MaxOrder(k) if ctx.table().order() > k => {
                Err(format!("order {} exceeds {k}", ctx.table().order()))
            }
            Hypothesis::MaxOrder(_) => Ok(()),
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::None => f.write_str("none"),
            Hypothesis::Bzi => f.write_str("bzi"),
            Hypothesis::BziNonzero => f.write_str("bzi, nonzero"),
            Hypothesis::Arithmetical => f.write_str("arithmetical"),
            Hypothesis::MaxOrder(k) => write!(f, "order <= {k}"),
        }
    }
}

/// One bound variable of a claim instantiation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Element(usize),
    Ideal(ElemSet),
    Subset(ElemSet),
    Family(Vec<ElemSet>),
    Exponent(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Element,
    Ideal,
    Subset,
    Family,
    Exponent,
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Element(_) => Kind::Element,
            Value::Ideal(_) => Kind::Ideal,
            Value::Subset(_) => Kind::Subset,
            Value::Family(_) => Kind::Family,
            Value::Exponent(_) => Kind::Exponent,
        }
    }

    pub(crate) fn set(&self) -> ElemSet {
        match self {
            Value::Ideal(a) | Value::Subset(a) => *a,
            other => panic!("expected a set, got {other:?}"),
        }
    }

    pub(crate) fn element(&self) -> usize {
        match self {
            Value::Element(x) | Value::Exponent(x) => *x,
            other => panic!("expected an element, got {other:?}"),
        }
    }

    pub(crate) fn family(&self) -> &[ElemSet] {
        match self {
            Value::Family(f) => f,
            other => panic!("expected a family, got {other:?}"),
        }
    }

    fn fits(&self, n: usize) -> bool {
        let full = ElemSet::full(n);
        match self {
            Value::Element(x) => *x < n,
            Value::Ideal(a) | Value::Subset(a) => a.is_subset(full),
            Value::Family(f) => f.iter().all(|a| a.is_subset(full)),
            Value::Exponent(k) => *k >= 1,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(x) | Value::Exponent(x) => write!(f, "{x}"),
            Value::Ideal(a) | Value::Subset(a) => write!(f, "{a}"),
            Value::Family(fam) => {
                f.write_str("[")?;
                for (i, a) in fam.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Param {
    pub name: &'static str,
    pub kind: Kind,
}

pub type Domain<'a> = Box<dyn Iterator<Item = Vec<Value>> + 'a>;

/// An executable claim.
pub struct ClaimSpec {
    pub id: &'static str,
    pub class: ClaimClass,
    pub hypothesis: Hypothesis,
    /// Plain-language statement of what is checked.
    pub statement: &'static str,
    pub params: &'static [Param],
    /// Every instantiation of `params` the claim quantifies over.
    pub domain: for<'a> fn(&'a Subject) -> Domain<'a>,
    /// Whether the claim holds for one instantiation.
    pub check: fn(&Subject, &[Value]) -> bool,
}

impl fmt::Debug for ClaimSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClaimSpec")
            .field("id", &self.id)
            .field("class", &self.class)
            .field("hypothesis", &self.hypothesis)
            .finish_non_exhaustive()
    }
}

impl ClaimSpec {
    /// Re-evaluates a witness. `Ok(true)` means the claim fails on it.
    pub fn reproduces_failure(&self, s: &Subject, w: &Witness) -> Result<bool, HarnessError> {
        let bad = |reason: String| HarnessError::BadWitness {
            claim: self.id.to_string(),
            reason,
        };
        if w.bindings.len() != self.params.len() {
            return Err(bad(format!(
                "expected {} bindings, got {}",
                self.params.len(),
                w.bindings.len()
            )));
        }
        for (p, b) in self.params.iter().zip(&w.bindings) {
            if p.name != b.name || p.kind != b.value.kind() {
                return Err(bad(format!("binding `{}` does not match `{}`", b.name, p.name)));
            }
            if !b.value.fits(s.table().order()) {
                return Err(bad(format!("binding `{}` is out of range", b.name)));
            }
        }
        let values: Vec<Value> = w.bindings.iter().map(|b| b.value.clone()).collect();
        Ok(!(self.check)(s, &values))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gate {
    #[serde(rename = "APPLICABLE")]
    Applicable,
    #[serde(rename = "GATED-OUT")]
    GatedOut,
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gate::Applicable => "APPLICABLE",
            Gate::GatedOut => "GATED-OUT",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub name: String,
    pub value: Value,
}

/// The failing instantiation of a claim, or the reason it was gated out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub bindings: Vec<Binding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(reason) = &self.reason {
            return write!(f, "({reason})");
        }
        if self.bindings.is_empty() {
            return f.write_str("(no bindings)");
        }
        for (i, b) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", b.name, b.value)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub semiring: String,
    pub gate: Gate,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub ms: Option<f64>,
}

/// A semiring prepared for claim evaluation: its z-context plus lazily
/// computed subset families shared by several claims.
pub struct Subject {
    name: String,
    ctx: ZContext,
    mc_sets: OnceLock<Vec<ElemSet>>,
    stable_sets: OnceLock<Vec<ElemSet>>,
}

impl fmt::Debug for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subject").field("name", &self.name).finish_non_exhaustive()
    }
}

impl Subject {
    pub fn new(table: SemiringTable, limits: &Limits) -> Result<Self, IdealError> {
        let name = table.name().to_string();
        Ok(Subject {
            name,
            ctx: ZContext::build(table, limits)?,
            mc_sets: OnceLock::new(),
            stable_sets: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &ZContext {
        &self.ctx
    }

    pub fn lattice(&self) -> &IdealLattice {
        self.ctx.lattice()
    }

    pub fn table(&self) -> &SemiringTable {
        self.ctx.table()
    }

    /// Every multiplicatively closed subset (containing 1), in canonical
    /// order.
    pub fn multiplicatively_closed_sets(&self) -> &[ElemSet] {
        self.mc_sets.get_or_init(|| {
            let s = self.table();
            let one = s.one();
            let others: Vec<usize> = s.elements().filter(|&x| x != one).collect();
            let mut out: Vec<ElemSet> = (0u128..1 << others.len())
                .map(|mask| {
                    let mut set = ElemSet::singleton(one);
                    for (i, &x) in others.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            set.insert(x);
                        }
                    }
                    set
                })
                .filter(|&set| ideal::is_multiplicatively_closed(s, set))
                .collect();
            out.sort();
            out
        })
    }

    /// Every nonempty subset closed under addition and multiplication, in
    /// canonical order.
    pub fn stable_sets(&self) -> &[ElemSet] {
        self.stable_sets.get_or_init(|| {
            let s = self.table();
            let mut out: Vec<ElemSet> = (1u128..1 << s.order())
                .map(ElemSet::from_bits)
                .filter(|&set| {
                    set.iter().all(|a| {
                        set.iter()
                            .all(|b| set.contains(s.add(a, b)) && set.contains(s.mul(a, b)))
                    })
                })
                .collect();
            out.sort();
            out
        })
    }
}

/// Evaluates one claim on one semiring.
pub fn verify_claim(spec: &ClaimSpec, s: &Subject, timings: bool) -> ClaimResult {
    let start = Instant::now();
    let mut result = ClaimResult {
        claim: spec.id.to_string(),
        semiring: s.name().to_string(),
        gate: Gate::Applicable,
        verdict: Verdict::Pass,
        witness: None,
        ms: None,
    };
    match spec.hypothesis.admits(s) {
        Err(reason) => {
            result.gate = Gate::GatedOut;
            result.verdict = Verdict::Skip;
            result.witness = Some(Witness {
                bindings: Vec::new(),
                reason: Some(reason),
            });
        }
        Ok(()) => {
            if let Some(values) = (spec.domain)(s).find(|v| !(spec.check)(s, v)) {
                result.verdict = Verdict::Fail;
                result.witness = Some(Witness {
                    bindings: spec
                        .params
                        .iter()
                        .zip(values)
                        .map(|(p, value)| Binding {
                            name: p.name.to_string(),
                            value,
                        })
                        .collect(),
                    reason: None,
                });
            }
        }
    }
    if timings {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        result.ms = Some((ms * 1e3).round() / 1e3);
    }
    result
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Worker threads; 1 evaluates serially on the calling thread.
    pub parallelism: usize,
    /// Record per-cell wall time in `ms`. Off keeps reports byte-stable.
    pub timings: bool,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            parallelism: 1,
            timings: false,
            limits: Limits::default(),
        }
    }
}

/// Evaluates every claim on every corpus entry. Results are ordered by
/// entry, then by claim, whatever the parallelism.
pub fn verify_corpus(
    specs: &[&ClaimSpec],
    entries: &[CorpusEntry],
    opts: &VerifyOptions,
) -> Result<Report, HarnessError> {
    let run = || -> Result<Vec<ClaimResult>, HarnessError> {
        let build = |e: &CorpusEntry| {
            Subject::new(e.table.clone().with_name(e.name.clone()), &opts.limits)
        };
        let cells = |subjects: &[Subject]| -> Vec<(usize, usize)> {
            (0..subjects.len())
                .flat_map(|i| (0..specs.len()).map(move |j| (i, j)))
                .collect()
        };
        if opts.parallelism <= 1 {
            let subjects = entries.iter().map(build).collect::<Result<Vec<_>, _>>()?;
            Ok(cells(&subjects)
                .into_iter()
                .map(|(i, j)| verify_claim(specs[j], &subjects[i], opts.timings))
                .collect())
        } else {
            let subjects = entries.par_iter().map(build).collect::<Result<Vec<_>, _>>()?;
            Ok(cells(&subjects)
                .into_par_iter()
                .map(|(i, j)| verify_claim(specs[j], &subjects[i], opts.timings))
                .collect())
        }
    };
    let results = if opts.parallelism <= 1 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.parallelism)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?
            .install(run)?
    };
    Ok(Report::assemble(specs, entries.len(), results))
}
