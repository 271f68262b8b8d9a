//! Constructive coloring procedures, one per structural case, each verified
//! against its color budget.
//!
//! Blowup colorers work at the bag level ([`BagColors`]: one color list per
//! base vertex) and are flattened into vertex colorings of the canonical
//! realization at the API boundary. Bracelet colorers work directly on
//! realized vertex ids.

mod bracelet;
mod c7;
mod driver;
mod emerald;

pub use bracelet::{color_bracelet, color_bracelet_equal, color_bracelet_one_pair};
pub use c7::{color_c7_equal, color_c7_plus_2f, color_c7_plus_2t, color_c7_plus_v, color_gx};
pub use driver::color_graph;
pub use emerald::{
    color_blowup, color_e_minus_8, color_emerald_p_ge_3, color_emerald_p_le_2, color_g9,
    ek3_stable_system,
};

use crate::coloring::Coloring;
use crate::freeness::FreenessReport;
use crate::oracle::OracleError;
use crate::structure::StructureError;

#[derive(Debug, thiserror::Error)]
pub enum ColorError {
    #[error("input graph is not (P7,C4,C5)-free: induced {kind:?} found")]
    NotInClass { kind: crate::freeness::ForbiddenKind, report: FreenessReport },
    #[error("no recognizable structure (bracelet coloring requires an explicit spec)")]
    StructureUnavailable,
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn internal(msg: impl Into<String>) -> ColorError {
    ColorError::Internal(msg.into())
}

/// Per-bag color lists for a blowup: `colors[v]` holds one color per slot of
/// base vertex `v`. Flattening in bag order matches the realization's
/// vertex numbering.
#[derive(Clone, Debug)]
pub(crate) struct BagColors {
    pub colors: Vec<Vec<u32>>,
}

impl BagColors {
    pub fn empty(weights: &[u32]) -> Self {
        BagColors {
            colors: weights.iter().map(|&w| vec![0; w as usize]).collect(),
        }
    }

    pub fn max_color(&self) -> u32 {
        self.colors
            .iter()
            .flat_map(|c| c.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn shift(&mut self, offset: u32) {
        for bag in &mut self.colors {
            for c in bag {
                *c += offset;
            }
        }
    }

    /// Copies a sub-coloring (on reduced weights) into the first slots of
    /// each bag; the caller fills the remaining (peeled) slots.
    pub fn adopt_prefix(&mut self, sub: &BagColors) {
        for (bag, sub_bag) in self.colors.iter_mut().zip(&sub.colors) {
            assert!(sub_bag.len() <= bag.len());
            bag[..sub_bag.len()].copy_from_slice(sub_bag);
        }
    }

    pub fn into_coloring(self) -> Coloring {
        let mut raw = Vec::new();
        for bag in self.colors {
            for c in bag {
                assert!(c >= 1, "unassigned slot");
                raw.push(c);
            }
        }
        Coloring::from_assignment(raw)
    }
}

/// Checks a bag coloring for properness against a base graph: distinct
/// colors within a bag, disjoint color sets across base edges.
pub(crate) fn bag_colors_proper(base: &crate::graph::Graph, bc: &BagColors) -> bool {
    for (u, bag) in bc.colors.iter().enumerate() {
        let mut seen = bag.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != bag.len() {
            return false;
        }
        for v in base.neighbors(u).iter() {
            if v > u && bag.iter().any(|c| bc.colors[v].contains(c)) {
                return false;
            }
        }
    }
    true
}
