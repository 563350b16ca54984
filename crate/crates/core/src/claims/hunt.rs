use crate::enumerate::{enumerate_small, Mode, MAX_EXHAUSTIVE_ORDER};
use crate::semiring::{Limits, SemiringTable};

use super::{find_claim, verify_claim, ClaimResult, HarnessError, Subject, Verdict};

/// A failing claim together with the semiring it failed on.
#[derive(Debug, Clone)]
pub struct Finding {
    pub table: SemiringTable,
    pub result: ClaimResult,
}

#[derive(Debug, Clone)]
pub struct HuntOutcome {
    /// Semirings evaluated.
    pub examined: usize,
    pub failures: Vec<Finding>,
}

/// Searches semirings of one order for failures of a claim.
///
/// Orders up to [`MAX_EXHAUSTIVE_ORDER`] are enumerated exhaustively up to
/// isomorphism and `seed` is ignored; larger orders are sampled with the
/// seeded random mode. At most `budget` semirings are examined.
pub fn hunt(order: usize, claim: &str, budget: usize, seed: u64) -> Result<HuntOutcome, HarnessError> {
    let spec = find_claim(claim).ok_or_else(|| HarnessError::UnknownClaim(claim.to_string()))?;
    if budget == 0 {
        return Ok(HuntOutcome {
            examined: 0,
            failures: Vec::new(),
        });
    }
    let mode = if order <= MAX_EXHAUSTIVE_ORDER {
        Mode::Exhaustive
    } else {
        Mode::Random { seed, count: budget }
    };
    let limits = Limits::default();
    let mut outcome = HuntOutcome {
        examined: 0,
        failures: Vec::new(),
    };
    for entry in enumerate_small(order, mode)?.into_iter().take(budget) {
        let subject = Subject::new(entry.table.clone(), &limits)?;
        let result = verify_claim(spec, &subject, false);
        outcome.examined += 1;
        if result.verdict == Verdict::Fail {
            outcome.failures.push(Finding {
                table: entry.table,
                result,
            });
        }
    }
    Ok(outcome)
}
