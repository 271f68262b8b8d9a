//! Clique cutsets and universal vertices.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Finds a clique whose removal increases the number of components, along
/// with the component partition of the remainder.
///
/// Candidate separators come from the neighborhood-component method: for
/// each vertex v and each component C of G - N[v], the boundary N(C) is a
/// minimal separator. The smallest clique candidate (by size, then lex
/// order) is returned.
pub fn find_clique_cutset(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let base_components = g.components().len();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let closed = g.closed_neighborhood(v);
        let rest = VertexSet::full(n).difference(&closed);
        for comp in g.components_within(&rest) {
            let comp_set = VertexSet::from_members(n, comp.iter().copied());
            let mut boundary: Vec<usize> = (0..n)
                .filter(|&u| !comp_set.contains(u) && g.neighbors(u).intersection_len(&comp_set) > 0)
                .collect();
            boundary.sort_unstable();
            if !boundary.is_empty() {
                candidates.push(boundary);
            }
        }
    }
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    candidates.dedup();
    for k in candidates {
        if !g.is_clique(&k) {
            continue;
        }
        let kset = VertexSet::from_members(n, k.iter().copied());
        let rest = VertexSet::full(n).difference(&kset);
        let comps = g.components_within(&rest);
        if comps.len() > base_components {
            return Some((k, comps));
        }
    }
    None
}

pub fn find_universal_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == g.n() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_cut_at_middle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let (k, comps) = find_clique_cutset(&g).unwrap();
        assert_eq!(k, vec![1]);
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn c4_has_no_clique_cutset() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(find_clique_cutset(&g).is_none());
    }

    #[test]
    fn bowtie_cut_at_center() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        let (k, comps) = find_clique_cutset(&g).unwrap();
        assert_eq!(k, vec![2]);
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn universal_vertices() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(find_universal_vertex(&k4).is_some());
        let c7: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        assert!(find_universal_vertex(&Graph::from_edges(7, &c7)).is_none());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_universal_vertex(&star), Some(0));
    }
}
