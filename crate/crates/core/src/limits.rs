//! Resource limits shared by graph materialization, brute-force group
//! searches, and exact enumeration.

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::nodes`] and [`Limits::search`].
pub const BUDGET_ENV: &str = "BRUIJN_MIS_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `d^D` a graph may materialize.
    pub nodes: u128,
    /// Largest number of search-tree nodes the exact oracle may visit.
    pub search: u64,
    /// Largest alphabet for which stabilizers are computed over all `d!`
    /// permutations.
    pub brute_force_d: usize,
    /// Largest alphabet for which whole orbits are expanded.
    pub expansion_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            nodes: 1_000_000,
            search: 200_000_000,
            brute_force_d: 8,
            expansion_d: 8,
        }
    }
}

impl Limits {
    /// Defaults, with `BRUIJN_MIS_BUDGET` (a positive integer) replacing both
    /// the node and the search budget when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            let value: u64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{BUDGET_ENV}={raw:?} is not an integer")))?;
            limits.nodes = value as u128;
            limits.search = value;
        }
        Ok(limits)
    }

    pub(crate) fn check_nodes(&self, needed: u128) -> Result<()> {
        if needed > self.nodes {
            return Err(Error::Budget {
                what: "graph nodes",
                needed,
                limit: self.nodes,
            });
        }
        Ok(())
    }

    pub(crate) fn check_brute_force(&self, d: usize) -> Result<()> {
        if d > self.brute_force_d {
            return Err(Error::Budget {
                what: "alphabet size for permutation search",
                needed: d as u128,
                limit: self.brute_force_d as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_expansion(&self, d: usize) -> Result<()> {
        if d > self.expansion_d {
            return Err(Error::Budget {
                what: "alphabet size for orbit expansion",
                needed: d as u128,
                limit: self.expansion_d as u128,
            });
        }
        Ok(())
    }
}
