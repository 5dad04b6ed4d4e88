//! Enumeration budgets for the brute-force oracles.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default number of elementary steps an oracle may take.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable that overrides the default budget.
pub const BUDGET_ENV: &str = "WCOPRIME_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    /// Reads `WCOPRIME_BUDGET`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse().ok())
            .map(Budget)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &str, needed: &BigUint) -> Result<()> {
        if *needed > BigUint::from(self.0) {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                needed: needed.to_string(),
                budget: self.0,
            });
        }
        Ok(())
    }

    /// Checks `base^exp` without materializing absurdly large powers.
    pub fn check_pow(&self, what: &str, base: u64, exp: u64) -> Result<()> {
        let bits = (64 - base.leading_zeros() as u64).saturating_mul(exp);
        if base > 1 && bits > 4096 {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                needed: format!("{base}^{exp}"),
                budget: self.0,
            });
        }
        self.check(what, &BigUint::from(base).pow(exp as u32))
    }
}
