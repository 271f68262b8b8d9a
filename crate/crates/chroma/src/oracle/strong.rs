//! Strong stable sets: stable sets meeting every maximum clique, so their
//! removal drops the clique number by exactly one.

use super::clique::{clique_number_with, maximal_cliques};
use super::{OracleError, SearchBudget};
use crate::graph::Graph;
use crate::structure::blowup::BlowupSpec;

pub const STRONG_MAX_VERTICES: usize = 64;

/// Smallest strong stable set in (size, lex) order, or `None`.
pub fn find_strong_stable_set(g: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    find_strong_stable_set_filtered(g, &vec![true; g.n()])
}

/// As [`find_strong_stable_set`], but the set may use only vertices marked
/// `true` in `allowed`.
pub fn find_strong_stable_set_filtered(
    g: &Graph,
    allowed: &[bool],
) -> Result<Option<Vec<usize>>, OracleError> {
    let n = g.n();
    if n > STRONG_MAX_VERTICES {
        return Err(OracleError::SizeGuard {
            what: "find_strong_stable_set",
            limit: STRONG_MAX_VERTICES,
            got: n,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let budget = SearchBudget::default();
    let report = clique_number_with(g, &budget)?;
    let maximum = report.all_maximum.expect("n <= 64");
    smallest_hitting_stable_set(n, |u, v| g.has_edge(u, v), allowed, &maximum, &budget)
}

/// Spec-level search for emerald blowups and friends: a stable set of the
/// base meeting every maximum-weight maximal clique of the weighted base.
/// Zero-weight vertices cannot be picked. Returns base vertices.
pub fn find_strong_stable_set_spec(spec: &BlowupSpec) -> Option<Vec<usize>> {
    let base = spec.base_graph();
    let w = spec.weights();
    let support: Vec<usize> = (0..base.n()).filter(|&v| w[v] > 0).collect();
    if support.is_empty() {
        return None;
    }
    let (sub, back) = base.induced(&support);
    let budget = SearchBudget::default();
    let cliques = maximal_cliques(&sub, &budget).ok()?;
    let omega: u32 = cliques
        .iter()
        .map(|c| c.iter().map(|&v| w[back[v]]).sum())
        .max()
        .unwrap_or(0);
    let maximum: Vec<Vec<usize>> = cliques
        .into_iter()
        .filter(|c| c.iter().map(|&v| w[back[v]]).sum::<u32>() == omega)
        .collect();
    let allowed = vec![true; sub.n()];
    let found =
        smallest_hitting_stable_set(sub.n(), |u, v| sub.has_edge(u, v), &allowed, &maximum, &budget)
            .ok()
            .flatten()?;
    Some(found.into_iter().map(|v| back[v]).collect())
}

/// Enumerates stable sets by increasing size, lexicographic within size,
/// and returns the first that intersects every listed clique.
fn smallest_hitting_stable_set(
    n: usize,
    adj: impl Fn(usize, usize) -> bool,
    allowed: &[bool],
    cliques: &[Vec<usize>],
    budget: &SearchBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    if cliques.is_empty() {
        return Ok(None);
    }
    // max useful size: a stable set bigger than the number of cliques is
    // never needed, and it cannot exceed n
    let max_size = cliques.len().min(n);
    for size in 1..=max_size {
        let mut cur: Vec<usize> = Vec::with_capacity(size);
        if dfs(n, &adj, allowed, cliques, size, 0, &mut cur, budget)? {
            return Ok(Some(cur));
        }
    }
    return Ok(None);

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        n: usize,
        adj: &impl Fn(usize, usize) -> bool,
        allowed: &[bool],
        cliques: &[Vec<usize>],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        budget: &SearchBudget,
    ) -> Result<bool, OracleError> {
        budget.tick()?;
        if cur.len() == size {
            return Ok(cliques.iter().all(|c| c.iter().any(|v| cur.contains(v))));
        }
        for v in start..n {
            if !allowed[v] || cur.iter().any(|&u| adj(u, v)) {
                continue;
            }
            cur.push(v);
            if dfs(n, adj, allowed, cliques, size, v + 1, cur, budget)? {
                return Ok(true);
            }
            cur.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::clique_number;
    use crate::structure::bases::{self, ev};
    use crate::structure::blowup::BaseId;
    use crate::twins::realize_weights;

    #[test]
    fn triangle_has_singleton_strong_set() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let s = find_strong_stable_set(&g).unwrap().unwrap();
        assert_eq!(s.len(), 1);
        let (sub, _) = g.induced(&(0..3).filter(|v| !s.contains(v)).collect::<Vec<_>>());
        assert_eq!(clique_number(&sub).unwrap().omega, 2);
    }

    #[test]
    fn emerald_k2_has_none() {
        let spec = BlowupSpec::new(BaseId::Emerald, vec![2; 11]).unwrap();
        assert!(find_strong_stable_set_spec(&spec).is_none());
        // also at the realized-graph level
        let g = realize_weights(&bases::emerald(), &[2; 11]);
        assert!(find_strong_stable_set(&g).unwrap().is_none());
    }

    #[test]
    fn demoted_end_triangles_admit_4_6_9() {
        // weights 2 everywhere except bag 8 of weight 1: triangles through
        // 8 are not maximum, everything else is
        let mut w = vec![2u32; 11];
        w[ev(8)] = 1;
        let spec = BlowupSpec::new(BaseId::Emerald, w.clone()).unwrap();
        let s = find_strong_stable_set_spec(&spec).unwrap();
        // the returned set is strong: removal drops omega by exactly 1
        let mut w2 = w.clone();
        for &v in &s {
            w2[v] -= 1;
        }
        let g1 = realize_weights(&bases::emerald(), &w);
        let g2 = realize_weights(&bases::emerald(), &w2);
        assert_eq!(
            clique_number(&g2).unwrap().omega,
            clique_number(&g1).unwrap().omega - 1
        );
        // {4,6,9} is also a valid answer here
        let candidate = vec![ev(4), ev(6), ev(9)];
        let e = bases::emerald();
        assert!(e.is_stable_set(&candidate));
        for t in bases::EMERALD_TRIANGLES {
            let weight: u32 = t.iter().map(|&x| w[ev(x)]).sum();
            if weight == 6 {
                assert!(t.iter().any(|&x| candidate.contains(&ev(x))));
            }
        }
    }

    #[test]
    fn strong_set_reduces_omega_on_graph_level() {
        let w = [1u32, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1];
        let g = realize_weights(&bases::emerald(), &w);
        if let Some(s) = find_strong_stable_set(&g).unwrap() {
            let keep: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
            let (sub, _) = g.induced(&keep);
            assert_eq!(
                clique_number(&sub).unwrap().omega,
                clique_number(&g).unwrap().omega - 1
            );
        }
    }
}
