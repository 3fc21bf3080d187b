//! Search budgets.
//!
//! Every unbounded scan in the crate (prime streams, branch-point scans,
//! twist-candidate loops, point searches) draws from a [`Budget`], so a
//! pathological configuration fails with an explicit error instead of
//! spinning.  The `HASSE_FORGE_BUDGET` environment variable caps all
//! searches launched through [`Budget::from_env`].

use crate::{Error, Result};

pub const ENV_VAR: &str = "HASSE_FORGE_BUDGET";
pub const DEFAULT_STEPS: u64 = 10_000_000;

/// A decrementing step counter shared by one search.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(steps: u64) -> Self {
        Budget { remaining: steps }
    }

    /// Budget from `HASSE_FORGE_BUDGET`, falling back to a generous default.
    pub fn from_env() -> Self {
        let steps = std::env::var(ENV_VAR)
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .unwrap_or(DEFAULT_STEPS);
        Budget::new(steps)
    }

    /// Consume `n` steps; errors once the budget is gone.
    pub fn spend(&mut self, n: u64, context: &str) -> Result<()> {
        if self.remaining < n {
            return Err(Error::BudgetExhausted {
                context: context.to_string(),
            });
        }
        self.remaining -= n;
        Ok(())
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustion_is_an_error() {
        let mut b = Budget::new(2);
        assert!(b.spend(1, "x").is_ok());
        assert!(b.spend(1, "x").is_ok());
        assert!(matches!(
            b.spend(1, "x"),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
