use crate::error::{Error, Result};

/// Default cap on the number of objects any single enumeration may produce.
pub const DEFAULT_GUARD_LIMIT: u64 = 10_000_000;

/// Environment variable consulted by [`Guard::from_env`].
pub const GUARD_ENV_VAR: &str = "LGVLAB_GUARD_LIMIT";

/// Enumeration cap shared by every exhaustive operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub limit: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            limit: DEFAULT_GUARD_LIMIT,
        }
    }
}

impl Guard {
    pub fn new(limit: u64) -> Self {
        Guard { limit }
    }

    /// Reads [`GUARD_ENV_VAR`], falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(GUARD_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Guard::new)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &str, needed: u128) -> Result<()> {
        if needed > u128::from(self.limit) {
            return Err(Error::GuardExceeded {
                what: what.to_string(),
                needed: needed.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}
