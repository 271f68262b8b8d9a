//! Exact reference computations: clique number, chromatic number, weighted
//! covering, bipartite matching with a König certificate, clique cutsets,
//! and strong stable sets.
//!
//! These are desk-scale solvers used both inside the constructive colorers
//! and as acceptance oracles; none of them approximates.

mod chromatic;
mod clique;
mod covering;
mod decompose;
mod matching;
mod strong;

pub use chromatic::{chromatic_number_exact, color_within, CHROMATIC_MAX_VERTICES};
pub use clique::{clique_number, maximal_cliques, CliqueReport};
pub use covering::{
    blowup_chromatic_exact, cover_to_coloring, covering_number, maximal_stable_sets,
    StableSetCover, COVERING_MAX_BASE,
};
pub use decompose::{find_clique_cutset, find_universal_vertex};
pub use matching::{max_bipartite_matching, MatchingCertificate};
pub use strong::{
    find_strong_stable_set, find_strong_stable_set_filtered, find_strong_stable_set_spec,
};

pub use crate::coloring::verify_coloring;

use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("{what} limited to {limit} vertices, got {got}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
}

/// A node counter for the exponential searches. The default limit can be
/// overridden with the `CHROMA_NODE_BUDGET` environment variable.
pub struct SearchBudget {
    limit: u64,
    used: AtomicU64,
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

impl SearchBudget {
    pub fn new(limit: u64) -> Self {
        SearchBudget { limit, used: AtomicU64::new(0) }
    }

    pub fn from_env() -> Self {
        let limit = std::env::var("CHROMA_NODE_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Self::new(limit)
    }

    #[inline]
    pub fn tick(&self) -> Result<(), OracleError> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit {
            Err(OracleError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::from_env()
    }
}
