//! Exact isomorphism for graphs on at most 12 vertices.

use crate::graph::Graph;

pub const ISO_MAX_VERTICES: usize = 12;

#[derive(Debug, thiserror::Error)]
#[error("isomorphism check limited to {ISO_MAX_VERTICES} vertices, got {0}")]
pub struct TooLarge(pub usize);

/// Finds an edge-preserving bijection `g1 -> g2`, or `None`. Deterministic:
/// the lexicographically first mapping (by g1 vertex order) is returned.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    try_isomorphic(g1, g2).expect("size guard")
}

pub fn try_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>, TooLarge> {
    let n = g1.n();
    if n > ISO_MAX_VERTICES {
        return Err(TooLarge(n));
    }
    if g2.n() > ISO_MAX_VERTICES {
        return Err(TooLarge(g2.n()));
    }
    if g2.n() != n || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let (deg1, deg2) = (d1.clone(), d2.clone());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        g1: &Graph,
        g2: &Graph,
        deg1: &[usize],
        deg2: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = g1.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || deg1[v] != deg2[w] {
                continue;
            }
            let consistent = (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if backtrack(g1, g2, deg1, deg2, map, used, v + 1) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    if backtrack(g1, g2, &deg1, &deg2, &mut map, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Finds an injective map of `pat` onto an induced subgraph of `host`
/// (non-edges must map to non-edges). First match in lexicographic order.
pub fn find_induced_embedding(pat: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let np = pat.n();
    let nh = host.n();
    if np > nh {
        return None;
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    fn backtrack(
        pat: &Graph,
        host: &Graph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == pat.n() {
            return true;
        }
        for w in 0..host.n() {
            if used[w] || pat.degree(v) > host.degree(w) {
                continue;
            }
            let consistent =
                (0..v).all(|u| pat.has_edge(u, v) == host.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if backtrack(pat, host, map, used, v + 1) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    if backtrack(pat, host, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::bases;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn relabeled_c7() {
        let g = cycle(7);
        // relabel: shift all indices by 3
        let edges: Vec<_> = (0..7).map(|i| ((i + 3) % 7, (i + 4) % 7)).collect();
        let h = Graph::from_edges(7, &edges);
        let m = is_isomorphic_small(&g, &h).unwrap();
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(g.has_edge(u, v), h.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        let e = bases::emerald();
        // E-8 plus an isolated vertex has the same vertex count as E
        let keep: Vec<usize> = (0..11).filter(|&v| v != 7).collect();
        let (mut h, _) = e.induced(&keep);
        let mut g = Graph::new(11);
        for (u, v) in h.edges() {
            g.add_edge(u, v);
        }
        h = g;
        assert!(is_isomorphic_small(&e, &h).is_none());
    }

    #[test]
    fn symmetric_and_reflexive() {
        let e = bases::emerald();
        assert!(is_isomorphic_small(&e, &e).is_some());
        let c = cycle(7);
        assert_eq!(
            is_isomorphic_small(&e, &c).is_some(),
            is_isomorphic_small(&c, &e).is_some()
        );
    }

    #[test]
    fn size_guard() {
        let g = cycle(13);
        assert!(try_isomorphic(&g, &g).is_err());
    }

    #[test]
    fn quotient_of_emerald_minus_8_and_5_is_c7_plus_v() {
        // The 9-vertex graph E-{8,5} has true twins; its quotient is C7+v.
        let e = bases::emerald();
        let keep: Vec<usize> = (0..11).filter(|&v| v != 7 && v != 4).collect();
        let (h, _) = e.induced(&keep);
        let q = crate::twins::quotient_by_true_twins(&h);
        assert_eq!(q.base.n(), 8);
        assert!(is_isomorphic_small(&q.base, &bases::c7_plus_v()).is_some());
    }
}
