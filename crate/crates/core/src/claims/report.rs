use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ClaimClass, ClaimResult, ClaimSpec, Verdict};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skip => self.skip += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub semirings: usize,
    pub claims: usize,
    pub cells: usize,
    #[serde(rename = "ASSERT")]
    pub assert: Tally,
    #[serde(rename = "SURVEY")]
    pub survey: Tally,
    /// 2 if any ASSERT claim failed, else 0.
    pub status: i32,
}

/// The full result matrix of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub summary: Summary,
    pub results: Vec<ClaimResult>,
    /// SURVEY failures.
    pub discrepancies: Vec<ClaimResult>,
}

impl Report {
    pub(crate) fn assemble(specs: &[&ClaimSpec], semirings: usize, results: Vec<ClaimResult>) -> Self {
        let class: HashMap<&str, ClaimClass> = specs.iter().map(|s| (s.id, s.class)).collect();
        let mut assert = Tally::default();
        let mut survey = Tally::default();
        let mut discrepancies = Vec::new();
        for r in &results {
            match class[r.claim.as_str()] {
                ClaimClass::Assert => assert.add(r.verdict),
                ClaimClass::Survey => {
                    survey.add(r.verdict);
                    if r.verdict == Verdict::Fail {
                        discrepancies.push(r.clone());
                    }
                }
            }
        }
        Report {
            summary: Summary {
                semirings,
                claims: specs.len(),
                cells: results.len(),
                assert,
                survey,
                status: if assert.fail > 0 { 2 } else { 0 },
            },
            results,
            discrepancies,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Human-readable rendering. Depends only on the report's contents, so a
/// report read back from JSON renders identically.
pub fn render_text(report: &Report) -> String {
    let timed = report.results.iter().any(|r| r.ms.is_some());
    let mut rows: Vec<Vec<String>> = vec![{
        let mut h = vec!["CLAIM", "SEMIRING", "GATE", "VERDICT"];
        if timed {
            h.push("MS");
        }
        h.push("WITNESS");
        h.into_iter().map(String::from).collect()
    }];
    for r in &report.results {
        let mut row = vec![
            r.claim.clone(),
            r.semiring.clone(),
            r.gate.to_string(),
            r.verdict.to_string(),
        ];
        if timed {
            row.push(r.ms.map(|m| format!("{m:.3}")).unwrap_or_else(|| "-".into()));
        }
        row.push(r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default());
        rows.push(row);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == cols {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let s = &report.summary;
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "summary: {} semirings, {} claims, {} cells",
        s.semirings, s.claims, s.cells
    );
    for (label, t) in [("ASSERT", s.assert), ("SURVEY", s.survey)] {
        let _ = writeln!(out, "  {label}  pass {}  fail {}  skip {}", t.pass, t.fail, t.skip);
    }
    let _ = writeln!(out, "status: {}", s.status);
    let _ = writeln!(out);
    let _ = writeln!(out, "discrepancies: {}", report.discrepancies.len());
    for d in &report.discrepancies {
        let w = d.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        let _ = writeln!(out, "  {} on {}: {}", d.claim, d.semiring, w);
    }
    out
}
