//! Exact clique number by branch and bound, and maximal-clique enumeration.

use super::{OracleError, SearchBudget};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Exact clique number with a witness; all maximum cliques are enumerated
/// for graphs on at most 64 vertices.
#[derive(Clone, Debug)]
pub struct CliqueReport {
    pub omega: u32,
    pub witness: Vec<usize>,
    pub all_maximum: Option<Vec<Vec<usize>>>,
}

/// Bron-Kerbosch with pivoting; cliques come out sorted, in a deterministic
/// order.
pub fn maximal_cliques(g: &Graph, budget: &SearchBudget) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    fn expand(
        g: &Graph,
        r: &mut Vec<usize>,
        p: &VertexSet,
        x: &VertexSet,
        out: &mut Vec<Vec<usize>>,
        budget: &SearchBudget,
    ) -> Result<(), OracleError> {
        budget.tick()?;
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return Ok(());
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (g.neighbors(u).intersection_len(p), std::cmp::Reverse(u)))
            .unwrap();
        let mut p_cur = p.clone();
        let mut x_cur = x.clone();
        let candidates = p.difference(g.neighbors(pivot));
        for v in candidates.iter() {
            r.push(v);
            let pn = p_cur.intersection(g.neighbors(v));
            let xn = x_cur.intersection(g.neighbors(v));
            expand(g, r, &pn, &xn, out, budget)?;
            r.pop();
            p_cur.remove(v);
            x_cur.insert(v);
        }
        Ok(())
    }
    let p = VertexSet::full(n);
    let x = VertexSet::new(n);
    expand(g, &mut Vec::new(), &p, &x, &mut out, budget)?;
    out.sort();
    Ok(out)
}

/// Exact maximum clique with greedy-coloring upper bounds on the branch.
pub fn clique_number(g: &Graph) -> Result<CliqueReport, OracleError> {
    let budget = SearchBudget::default();
    clique_number_with(g, &budget)
}

pub fn clique_number_with(g: &Graph, budget: &SearchBudget) -> Result<CliqueReport, OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(CliqueReport { omega: 0, witness: vec![], all_maximum: Some(vec![]) });
    }
    let mut best: Vec<usize> = vec![0]; // any single vertex is a clique
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    fn bound(g: &Graph, cand: &VertexSet) -> u32 {
        // greedy coloring of the candidate set: number of classes bounds
        // the largest clique inside it
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in cand.iter() {
            match classes.iter_mut().find(|c| c.is_disjoint(g.neighbors(v))) {
                Some(c) => c.insert(v),
                None => {
                    let mut c = VertexSet::new(g.n());
                    c.insert(v);
                    classes.push(c);
                }
            }
        }
        classes.len() as u32
    }

    fn extend(
        g: &Graph,
        cur: &mut Vec<usize>,
        cand: &VertexSet,
        best: &mut Vec<usize>,
        budget: &SearchBudget,
    ) -> Result<(), OracleError> {
        budget.tick()?;
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if cand.is_empty() {
            return Ok(());
        }
        if cur.len() as u32 + bound(g, cand) <= best.len() as u32 {
            return Ok(());
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            if cur.len() + rest.len() <= best.len() {
                break;
            }
            rest.remove(v);
            cur.push(v);
            let next = rest.intersection(g.neighbors(v));
            // candidates are restricted to vertices after v to avoid
            // revisiting, which `rest` already encodes
            extend(g, cur, &next, best, budget)?;
            cur.pop();
        }
        Ok(())
    }

    let cand = VertexSet::full(n);
    extend(g, &mut Vec::new(), &cand, &mut best, budget)?;
    best.sort_unstable();
    let omega = best.len() as u32;

    let all_maximum = if n <= 64 {
        let maximal = maximal_cliques(g, budget)?;
        Some(
            maximal
                .into_iter()
                .filter(|c| c.len() as u32 == omega)
                .collect(),
        )
    } else {
        None
    };
    Ok(CliqueReport { omega, witness: best, all_maximum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::bases;
    use crate::twins::realize_weights;

    #[test]
    fn emerald_omega_3() {
        let r = clique_number(&bases::emerald()).unwrap();
        assert_eq!(r.omega, 3);
        assert!(bases::emerald().is_clique(&r.witness));
        // all 11 triangles are the maximum cliques
        assert_eq!(r.all_maximum.unwrap().len(), 11);
    }

    #[test]
    fn emerald_k2_omega_6() {
        let g = realize_weights(&bases::emerald(), &[2; 11]);
        let r = clique_number(&g).unwrap();
        assert_eq!(r.omega, 6);
    }

    #[test]
    fn single_vertex() {
        let r = clique_number(&Graph::new(1)).unwrap();
        assert_eq!(r.omega, 1);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let g = realize_weights(&bases::emerald(), &[3; 11]);
        let tiny = SearchBudget::new(5);
        assert!(matches!(
            clique_number_with(&g, &tiny),
            Err(OracleError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn maximal_cliques_of_triangle_plus_edge() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let cliques = maximal_cliques(&g, &SearchBudget::default()).unwrap();
        assert_eq!(cliques, vec![vec![0, 1, 2], vec![2, 3]]);
    }
}
