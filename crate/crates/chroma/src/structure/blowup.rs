//! Blowup specifications over the fixed base catalog.

use super::bases;
use super::StructureError;
use crate::graph::Graph;
use crate::iso::find_induced_embedding;
use crate::twins::{quotient_by_true_twins, realize_weights};

/// Which fixed base a blowup is over. `Gx`, `SpecialEmerald` and `G9` share
/// the graphs of `C72T`/`Emerald` but carry different weight-pattern
/// contracts, so they are distinct ids for serialization and dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseId {
    Emerald,
    C7,
    C7V,
    C72T,
    C72F,
    EMinus8,
    Gx,
    SpecialEmerald,
    G9,
}

impl BaseId {
    pub fn as_str(&self) -> &'static str {
        match self {
            BaseId::Emerald => "emerald",
            BaseId::C7 => "c7",
            BaseId::C7V => "c7v",
            BaseId::C72T => "c7_2t",
            BaseId::C72F => "c7_2f",
            BaseId::EMinus8 => "e_minus_8",
            BaseId::Gx => "gx",
            BaseId::SpecialEmerald => "special_emerald",
            BaseId::G9 => "g9",
        }
    }

    pub fn from_str_id(s: &str) -> Option<BaseId> {
        Some(match s {
            "emerald" => BaseId::Emerald,
            "c7" => BaseId::C7,
            "c7v" => BaseId::C7V,
            "c7_2t" => BaseId::C72T,
            "c7_2f" => BaseId::C72F,
            "e_minus_8" => BaseId::EMinus8,
            "gx" => BaseId::Gx,
            "special_emerald" => BaseId::SpecialEmerald,
            "g9" => BaseId::G9,
            _ => return None,
        })
    }

    pub fn graph(&self) -> Graph {
        match self {
            BaseId::Emerald | BaseId::SpecialEmerald => bases::emerald(),
            BaseId::C7 => bases::c7(),
            BaseId::C7V => bases::c7_plus_v(),
            BaseId::C72T | BaseId::Gx | BaseId::G9 => bases::c7_plus_2t(),
            BaseId::C72F => bases::c7_plus_2f(),
            BaseId::EMinus8 => bases::e_minus_8(),
        }
    }
}

/// A base graph plus one nonnegative clique weight per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    base: BaseId,
    weights: Vec<u32>,
}

impl BlowupSpec {
    pub fn new(base: BaseId, weights: Vec<u32>) -> Result<Self, StructureError> {
        let n = base.graph().n();
        if weights.len() != n {
            return Err(StructureError::InvalidSpec(format!(
                "base {} has {} vertices, got {} weights",
                base.as_str(),
                n,
                weights.len()
            )));
        }
        Ok(BlowupSpec { base, weights })
    }

    pub fn base(&self) -> BaseId {
        self.base
    }

    pub fn base_graph(&self) -> Graph {
        self.base.graph()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_of_label(&self, label: &str) -> u32 {
        let g = self.base_graph();
        let idx = (0..g.n())
            .find(|&v| g.label(v) == label)
            .unwrap_or_else(|| panic!("no base vertex labeled {label}"));
        self.weights[idx]
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// Concrete graph: all copies of base vertex 0 first, then 1, and so on.
    pub fn realize(&self) -> Graph {
        realize_weights(&self.base_graph(), &self.weights)
    }

    /// Realization slot range of a base vertex.
    pub fn bag_range(&self, v: usize) -> std::ops::Range<usize> {
        let start: usize = self.weights[..v].iter().map(|&w| w as usize).sum();
        start..start + self.weights[v] as usize
    }

    /// Clique number of the realization, from the weighted maximal cliques
    /// of the base.
    pub fn omega(&self) -> u32 {
        let base = self.base_graph();
        let support: Vec<usize> = (0..base.n()).filter(|&v| self.weights[v] > 0).collect();
        if support.is_empty() {
            return 0;
        }
        let (sub, back) = base.induced(&support);
        crate::oracle::maximal_cliques(&sub, &crate::oracle::SearchBudget::default())
            .expect("small base")
            .iter()
            .map(|c| c.iter().map(|&v| self.weights[back[v]]).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> BlowupSpec {
        BlowupSpec { base: self.base, weights }
    }
}

/// Minimum bag size of an emerald blowup.
pub fn p_value(spec: &BlowupSpec) -> Result<u32, StructureError> {
    match spec.base() {
        BaseId::Emerald | BaseId::SpecialEmerald => {
            Ok(spec.weights().iter().copied().min().unwrap_or(0))
        }
        other => Err(StructureError::WrongBase { expected: "emerald", got: other.as_str() }),
    }
}

/// Recognizes graphs that are blowups of induced subgraphs of the emerald.
///
/// The true-twin quotient is matched against the emerald by induced
/// embedding; missing base vertices get weight zero. Realizing the result
/// reproduces the input up to isomorphism.
pub fn recognize_emerald_blowup(g: &Graph) -> Option<BlowupSpec> {
    if g.n() == 0 {
        return Some(BlowupSpec { base: BaseId::Emerald, weights: vec![0; 11] });
    }
    let q = quotient_by_true_twins(g);
    if q.base.n() > 11 {
        return None;
    }
    let emerald = bases::emerald();
    let map = find_induced_embedding(&q.base, &emerald)?;
    let mut weights = vec![0u32; 11];
    for (c, &img) in map.iter().enumerate() {
        weights[img] = q.weights[c];
    }
    Some(BlowupSpec { base: BaseId::Emerald, weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic_small;
    use crate::structure::bases::ev;

    #[test]
    fn realize_c7_all_ones() {
        let spec = BlowupSpec::new(BaseId::C7, vec![1; 7]).unwrap();
        let g = spec.realize();
        assert!(is_isomorphic_small(&g, &bases::c7()).is_some());
    }

    #[test]
    fn emerald_k2_realization() {
        let spec = BlowupSpec::new(BaseId::Emerald, vec![2; 11]).unwrap();
        let g = spec.realize();
        assert_eq!(g.n(), 22);
        assert_eq!(spec.omega(), 6);
        assert_eq!(crate::oracle::clique_number(&g).unwrap().omega, 6);
    }

    #[test]
    fn recognize_round_trips_emerald_k2() {
        let spec = BlowupSpec::new(BaseId::Emerald, vec![2; 11]).unwrap();
        let g = spec.realize();
        let found = recognize_emerald_blowup(&g).unwrap();
        assert_eq!(found.weights(), &[2; 11]);
    }

    #[test]
    fn recognize_c7_k3_lands_on_an_induced_7_cycle() {
        let c7spec = BlowupSpec::new(BaseId::C7, vec![3; 7]).unwrap();
        let g = c7spec.realize();
        let found = recognize_emerald_blowup(&g).unwrap();
        let support: Vec<usize> = (0..11).filter(|&v| found.weights()[v] > 0).collect();
        assert_eq!(support.len(), 7);
        assert!(support.iter().all(|&v| found.weights()[v] == 3));
        // the support induces a 7-cycle in the emerald
        let (sub, _) = bases::emerald().induced(&support);
        assert!(is_isomorphic_small(&sub, &bases::c7()).is_some());
        // and the realization reproduces the input
        let h = found.realize();
        assert_eq!(h.n(), g.n());
        assert_eq!(crate::oracle::clique_number(&h).unwrap().omega, 6);
    }

    #[test]
    fn petersen_not_recognized() {
        // outer 5-cycle 0..4, inner 5-star 5..9, spokes i -> i+5
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let g = Graph::from_edges(10, &edges);
        assert!(recognize_emerald_blowup(&g).is_none());
    }

    #[test]
    fn p_values() {
        let s = |w: Vec<u32>| BlowupSpec::new(BaseId::Emerald, w).unwrap();
        assert_eq!(p_value(&s(vec![3; 11])).unwrap(), 3);
        let mut w = vec![2u32; 11];
        w[ev(1)] = 1;
        assert_eq!(p_value(&s(w)).unwrap(), 1);
        assert_eq!(p_value(&s(vec![0; 11])).unwrap(), 0);
        let c7 = BlowupSpec::new(BaseId::C7, vec![1; 7]).unwrap();
        assert!(p_value(&c7).is_err());
    }
}
