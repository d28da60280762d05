//! Work bounds for the brute-force enumeration entry points.
//!
//! Every enumerator receives a [`Limits`] record instead of consulting
//! constants, so callers (and the CLI) can widen or tighten the search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Bound on `p^(n*n)` when listing the subspaces of `F_p^n`.
    pub subspace_work: u64,
    /// Bound on the product of per-vertex subspace counts when listing subrepresentations.
    pub subrep_product: u64,
    /// Bound on `p^dim End(X)` for the idempotent search.
    pub endomorphism_search: u64,
    /// Bound on the number of candidate tables scanned when listing preradicals.
    pub preradical_product: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            // ambient dimension 4 over F_5
            subspace_work: 5u64.pow(16),
            subrep_product: 1 << 20,
            endomorphism_search: 1 << 16,
            preradical_product: 1 << 22,
        }
    }
}

impl Limits {
    pub fn from_json(text: &str) -> Result<Self> {
        let limits: Limits = serde_json::from_str(text)?;
        limits.validate()?;
        Ok(limits)
    }

    pub fn validate(&self) -> Result<()> {
        if self.subspace_work == 0
            || self.subrep_product == 0
            || self.endomorphism_search == 0
            || self.preradical_product == 0
        {
            return Err(Error::Input("work limits must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn check(what: impl Into<String>, needed: u128, limit: u64) -> Result<()> {
        if needed > limit as u128 {
            Err(Error::Capacity { what: what.into(), needed, limit })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_json_keeps_defaults() {
        let l = Limits::from_json(r#"{"subrep_product": 10}"#).unwrap();
        assert_eq!(l.subrep_product, 10);
        assert_eq!(l.subspace_work, Limits::default().subspace_work);
    }

    #[test]
    fn zero_limit_rejected() {
        assert!(Limits::from_json(r#"{"subspace_work": 0}"#).is_err());
        assert!(Limits::from_json(r#"{"bogus": 3}"#).is_err());
    }

    #[test]
    fn pow_saturates() {
        assert_eq!(saturating_pow(5, 16), 152_587_890_625);
        assert_eq!(saturating_pow(97, 100), u128::MAX);
    }
}
