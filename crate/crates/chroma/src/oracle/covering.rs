//! Exact weighted coloring of blowups as integer covering by stable sets.
//!
//! A proper coloring of a blowup is the same thing as a multiset of stable
//! sets of the base that covers each base vertex at least its weight many
//! times; the minimum multiset size is the chromatic number.

use super::clique::maximal_cliques;
use super::{OracleError, SearchBudget};
use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::structure::blowup::BlowupSpec;
use std::collections::HashMap;

pub const COVERING_MAX_BASE: usize = 16;

/// A multiset of stable sets covering a demand vector.
#[derive(Clone, Debug)]
pub struct StableSetCover {
    pub sets: Vec<(Vec<usize>, u32)>,
}

impl StableSetCover {
    pub fn size(&self) -> u32 {
        self.sets.iter().map(|(_, m)| m).sum()
    }

    pub fn verify(&self, base: &Graph, demands: &[u32]) -> bool {
        let mut covered = vec![0u32; base.n()];
        for (s, m) in &self.sets {
            if !base.is_stable_set(s) {
                return false;
            }
            for &v in s {
                covered[v] += m;
            }
        }
        covered.iter().zip(demands).all(|(c, d)| c >= d)
    }
}

/// Maximal stable sets = maximal cliques of the complement.
pub fn maximal_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    maximal_cliques(&g.complement(), &SearchBudget::default())
        .expect("stable set enumeration within budget")
}

/// Exact minimum number of stable sets of `base` covering `demands`.
///
/// Iterative deepening on the target size with memoized infeasibility;
/// exact for bases up to [`COVERING_MAX_BASE`] vertices.
pub fn covering_number(
    base: &Graph,
    demands: &[u32],
    budget: &SearchBudget,
) -> Result<(u32, StableSetCover), OracleError> {
    let n = base.n();
    assert_eq!(demands.len(), n);
    if n > COVERING_MAX_BASE {
        return Err(OracleError::SizeGuard {
            what: "covering_number",
            limit: COVERING_MAX_BASE,
            got: n,
        });
    }
    if demands.iter().all(|&d| d == 0) {
        return Ok((0, StableSetCover { sets: vec![] }));
    }
    let support: Vec<usize> = (0..n).filter(|&v| demands[v] > 0).collect();
    let (sub, back) = base.induced(&support);
    let sets: Vec<Vec<usize>> = maximal_stable_sets(&sub)
        .into_iter()
        .map(|s| s.into_iter().map(|v| back[v]).collect())
        .collect();
    let set_masks: Vec<VertexSet> = sets
        .iter()
        .map(|s| VertexSet::from_members(n, s.iter().copied()))
        .collect();
    let cliques: Vec<Vec<usize>> = maximal_cliques(&sub, budget)?
        .into_iter()
        .map(|c| c.into_iter().map(|v| back[v]).collect())
        .collect();

    let lower = |d: &[u32]| -> u32 {
        let clique_lb = cliques
            .iter()
            .map(|c| c.iter().map(|&v| d[v]).sum::<u32>())
            .max()
            .unwrap_or(0);
        let total: u32 = d.iter().sum();
        let alpha = sets.iter().map(|s| s.len() as u32).max().unwrap_or(1);
        clique_lb.max(total.div_ceil(alpha))
    };

    // memo[state] = proven minimum number of sets needed is > stored value
    let mut infeasible: HashMap<Box<[u32]>, u32> = HashMap::new();

    #[allow(clippy::too_many_arguments)]
    fn search(
        d: &mut Vec<u32>,
        k: u32,
        sets: &[Vec<usize>],
        set_masks: &[VertexSet],
        lower: &dyn Fn(&[u32]) -> u32,
        infeasible: &mut HashMap<Box<[u32]>, u32>,
        budget: &SearchBudget,
        chosen: &mut Vec<usize>,
    ) -> Result<bool, OracleError> {
        budget.tick()?;
        if d.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if lower(d) > k {
            return Ok(false);
        }
        if let Some(&proven) = infeasible.get(d.as_slice()) {
            if proven > k {
                return Ok(false);
            }
        }
        let v = d.iter().position(|&x| x > 0).unwrap();
        for (i, s) in sets.iter().enumerate() {
            if !set_masks[i].contains(v) {
                continue;
            }
            let touched: Vec<usize> = s.iter().copied().filter(|&u| d[u] > 0).collect();
            for &u in &touched {
                d[u] -= 1;
            }
            chosen.push(i);
            if search(d, k - 1, sets, set_masks, lower, infeasible, budget, chosen)? {
                return Ok(true);
            }
            chosen.pop();
            for &u in &touched {
                d[u] += 1;
            }
        }
        let entry = infeasible.entry(d.clone().into_boxed_slice()).or_insert(0);
        *entry = (*entry).max(k + 1);
        Ok(false)
    }

    let mut k = lower(demands);
    loop {
        let mut d = demands.to_vec();
        let mut chosen = Vec::new();
        if search(
            &mut d,
            k,
            &sets,
            &set_masks,
            &lower,
            &mut infeasible,
            budget,
            &mut chosen,
        )? {
            let mut mult: HashMap<usize, u32> = HashMap::new();
            for i in chosen {
                *mult.entry(i).or_insert(0) += 1;
            }
            let mut listed: Vec<(Vec<usize>, u32)> = mult
                .into_iter()
                .map(|(i, m)| (sets[i].clone(), m))
                .collect();
            listed.sort();
            let cover = StableSetCover { sets: listed };
            debug_assert_eq!(cover.size(), k);
            debug_assert!(cover.verify(base, demands));
            return Ok((k, cover));
        }
        k += 1;
    }
}

/// Exact chromatic number of a realized blowup, via covering.
pub fn blowup_chromatic_exact(spec: &BlowupSpec) -> Result<(u32, StableSetCover), OracleError> {
    let base = spec.base_graph();
    covering_number(&base, spec.weights(), &SearchBudget::default())
}

/// Turns a cover into a proper coloring of the realized blowup
/// (vertex order: all copies of base vertex 0, then 1, ...).
pub fn cover_to_coloring(base_n: usize, weights: &[u32], cover: &StableSetCover) -> Coloring {
    assert_eq!(weights.len(), base_n);
    // color id = index of the set instance in flattened multiset order
    let mut per_vertex_colors: Vec<Vec<u32>> = vec![Vec::new(); base_n];
    let mut color = 0u32;
    for (s, m) in &cover.sets {
        for _ in 0..*m {
            color += 1;
            for &v in s {
                per_vertex_colors[v].push(color);
            }
        }
    }
    let mut raw = Vec::new();
    for v in 0..base_n {
        let w = weights[v] as usize;
        assert!(per_vertex_colors[v].len() >= w, "cover does not meet demand");
        raw.extend_from_slice(&per_vertex_colors[v][..w]);
    }
    Coloring::from_assignment(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::structure::bases;
    use crate::twins::realize_weights;

    #[test]
    fn emerald_k3_needs_11() {
        let (k, cover) =
            covering_number(&bases::emerald(), &[3; 11], &SearchBudget::default()).unwrap();
        assert_eq!(k, 11);
        assert!(cover.verify(&bases::emerald(), &[3; 11]));
    }

    #[test]
    fn c7_equal_blowups() {
        let c7 = bases::c7();
        for t in 1..=6u32 {
            let (k, _) = covering_number(&c7, &[t; 7], &SearchBudget::default()).unwrap();
            assert_eq!(k, (7 * t).div_ceil(3), "t={t}");
        }
    }

    #[test]
    fn zero_demands() {
        let (k, cover) =
            covering_number(&bases::emerald(), &[0; 11], &SearchBudget::default()).unwrap();
        assert_eq!(k, 0);
        assert!(cover.sets.is_empty());
    }

    #[test]
    fn cover_realizes_to_proper_coloring() {
        let e = bases::emerald();
        let w = [2u32; 11];
        let (k, cover) = covering_number(&e, &w, &SearchBudget::default()).unwrap();
        assert_eq!(k, 8);
        let coloring = cover_to_coloring(11, &w, &cover);
        let g = realize_weights(&e, &w);
        assert!(verify_coloring(&g, &coloring).is_ok());
        assert_eq!(coloring.num_colors(), 8);
    }

    #[test]
    fn matches_exact_chromatic_on_small_realizations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let c7v = bases::c7_plus_v();
        for _ in 0..15 {
            let w: Vec<u32> = (0..8).map(|_| rng.gen_range(0..=2)).collect();
            let total: u32 = w.iter().sum();
            if total == 0 || total > 16 {
                continue;
            }
            let (k, _) = covering_number(&c7v, &w, &SearchBudget::default()).unwrap();
            let g = realize_weights(&c7v, &w);
            let (chi, _) = crate::oracle::chromatic_number_exact(&g).unwrap();
            assert_eq!(k, chi);
        }
    }
}
