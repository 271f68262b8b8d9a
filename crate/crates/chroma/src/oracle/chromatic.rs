//! Exact chromatic number for small graphs, by capped backtracking.

use super::clique::clique_number_with;
use super::{OracleError, SearchBudget};
use crate::coloring::Coloring;
use crate::graph::Graph;

pub const CHROMATIC_MAX_VERTICES: usize = 20;

/// Finds a proper coloring with at most `k` colors, or proves none exists.
/// Exact (complete backtracking with first-vertex symmetry breaking).
pub fn color_within(g: &Graph, k: u32, budget: &SearchBudget) -> Result<Option<Coloring>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::from_assignment(vec![])));
    }
    if k == 0 {
        return Ok(None);
    }
    // order vertices by degree, descending; helps pruning
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![0u32; n];

    fn go(
        g: &Graph,
        order: &[usize],
        idx: usize,
        colors: &mut Vec<u32>,
        used: u32,
        k: u32,
        budget: &SearchBudget,
    ) -> Result<bool, OracleError> {
        budget.tick()?;
        if idx == order.len() {
            return Ok(true);
        }
        let v = order[idx];
        // new colors are introduced in increasing order: at most used+1
        let cap = k.min(used + 1);
        for c in 1..=cap {
            if g.neighbors(v).iter().all(|u| colors[u] != c) {
                colors[v] = c;
                if go(g, order, idx + 1, colors, used.max(c), k, budget)? {
                    return Ok(true);
                }
                colors[v] = 0;
            }
        }
        Ok(false)
    }

    if go(g, &order, 0, &mut colors, 0, k, budget)? {
        Ok(Some(Coloring::from_assignment(colors)))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number with a witness coloring. Guarded at 20 vertices;
/// this is an oracle, not a production colorer.
pub fn chromatic_number_exact(g: &Graph) -> Result<(u32, Coloring), OracleError> {
    let n = g.n();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(OracleError::SizeGuard {
            what: "chromatic_number_exact",
            limit: CHROMATIC_MAX_VERTICES,
            got: n,
        });
    }
    if n == 0 {
        return Ok((0, Coloring::from_assignment(vec![])));
    }
    let budget = SearchBudget::default();
    let lb = clique_number_with(g, &budget)?.omega;
    for k in lb.. {
        if let Some(c) = color_within(g, k, &budget)? {
            debug_assert_eq!(c.num_colors(), k);
            return Ok((k, c));
        }
    }
    unreachable!("a graph on n vertices is n-colorable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::structure::bases;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn small_cycles() {
        assert_eq!(chromatic_number_exact(&cycle(7)).unwrap().0, 3);
        assert_eq!(chromatic_number_exact(&cycle(4)).unwrap().0, 2);
    }

    #[test]
    fn emerald_chi_4() {
        let (k, c) = chromatic_number_exact(&bases::emerald()).unwrap();
        assert_eq!(k, 4);
        assert!(verify_coloring(&bases::emerald(), &c).is_ok());
    }

    #[test]
    fn size_guard() {
        let g = Graph::new(21);
        assert!(matches!(
            chromatic_number_exact(&g),
            Err(OracleError::SizeGuard { .. })
        ));
    }
}
