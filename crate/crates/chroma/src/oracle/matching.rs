//! Maximum bipartite matching with a minimum vertex cover certificate.

use crate::bitset::VertexSet;

/// A maximum matching together with a minimum vertex cover of equal size.
/// Left vertices are `0..left_n`, right vertices `0..right_n`.
#[derive(Clone, Debug)]
pub struct MatchingCertificate {
    pub left_n: usize,
    pub right_n: usize,
    pub matching: Vec<(usize, usize)>,
    pub cover_left: Vec<usize>,
    pub cover_right: Vec<usize>,
}

impl MatchingCertificate {
    pub fn size(&self) -> usize {
        self.matching.len()
    }

    pub fn cover_size(&self) -> usize {
        self.cover_left.len() + self.cover_right.len()
    }

    /// Matching edges disjoint, cover touches every edge, and the two have
    /// equal size.
    pub fn verify(&self, edges: &[(usize, usize)]) -> bool {
        let mut lt = vec![false; self.left_n];
        let mut rt = vec![false; self.right_n];
        for &(u, v) in &self.matching {
            if lt[u] || rt[v] || !edges.contains(&(u, v)) {
                return false;
            }
            lt[u] = true;
            rt[v] = true;
        }
        let cl = VertexSet::from_members(self.left_n.max(1), self.cover_left.iter().copied());
        let cr = VertexSet::from_members(self.right_n.max(1), self.cover_right.iter().copied());
        edges
            .iter()
            .all(|&(u, v)| cl.contains(u) || cr.contains(v))
            && self.size() == self.cover_size()
    }
}

/// Augmenting-path maximum matching; the cover comes from alternating
/// reachability (König).
pub fn max_bipartite_matching(
    left_n: usize,
    right_n: usize,
    edges: &[(usize, usize)],
) -> MatchingCertificate {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); left_n];
    for &(u, v) in edges {
        assert!(u < left_n && v < right_n, "edge out of range");
        adj[u].push(v);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }

    let mut match_l: Vec<Option<usize>> = vec![None; left_n];
    let mut match_r: Vec<Option<usize>> = vec![None; right_n];

    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        match_r: &mut Vec<Option<usize>>,
        match_l: &mut Vec<Option<usize>>,
        seen: &mut Vec<bool>,
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_r[v] {
                None => true,
                Some(w) => augment(w, adj, match_r, match_l, seen),
            };
            if free {
                match_r[v] = Some(u);
                match_l[u] = Some(v);
                return true;
            }
        }
        false
    }

    for u in 0..left_n {
        let mut seen = vec![false; right_n];
        augment(u, &adj, &mut match_r, &mut match_l, &mut seen);
    }

    // König: Z = vertices reachable from unmatched lefts by alternating
    // paths; cover = (L \ Z_L) ∪ (R ∩ Z_R).
    let mut zl = vec![false; left_n];
    let mut zr = vec![false; right_n];
    let mut queue: Vec<usize> = (0..left_n).filter(|&u| match_l[u].is_none()).collect();
    for &u in &queue {
        zl[u] = true;
    }
    while let Some(u) = queue.pop() {
        for &v in &adj[u] {
            if !zr[v] {
                zr[v] = true;
                if let Some(w) = match_r[v] {
                    if !zl[w] {
                        zl[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
    }

    let matching: Vec<(usize, usize)> = (0..left_n)
        .filter_map(|u| match_l[u].map(|v| (u, v)))
        .collect();
    let cover_left: Vec<usize> = (0..left_n).filter(|&u| !zl[u]).collect();
    let cover_right: Vec<usize> = (0..right_n).filter(|&v| zr[v]).collect();
    let cert = MatchingCertificate { left_n, right_n, matching, cover_left, cover_right };
    debug_assert_eq!(cert.size(), cert.cover_size());
    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force maximum matching size by subset enumeration.
    pub fn brute_force_matching(edges: &[(usize, usize)]) -> usize {
        fn go(edges: &[(usize, usize)], used_l: u64, used_r: u64, i: usize) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(edges, used_l, used_r, i + 1);
            let (u, v) = edges[i];
            if used_l >> u & 1 == 0 && used_r >> v & 1 == 0 {
                let take = 1 + go(edges, used_l | 1 << u, used_r | 1 << v, i + 1);
                skip.max(take)
            } else {
                skip
            }
        }
        go(edges, 0, 0, 0)
    }

    #[test]
    fn complete_3_by_3() {
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (0..3).map(move |v| (u, v))).collect();
        let cert = max_bipartite_matching(3, 3, &edges);
        assert_eq!(cert.size(), 3);
        assert!(cert.verify(&edges));
    }

    #[test]
    fn empty_edge_set() {
        let cert = max_bipartite_matching(4, 2, &[]);
        assert_eq!(cert.size(), 0);
        assert_eq!(cert.cover_size(), 0);
        assert!(cert.verify(&[]));
    }

    #[test]
    fn path_on_six_vertices() {
        // bipartite layout of P6: lefts 0,1,2 and rights 0,1,2 with edges
        // forming a path l0-r0-l1-r1-l2-r2
        let edges = vec![(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)];
        let cert = max_bipartite_matching(3, 3, &edges);
        assert_eq!(cert.size(), brute_force_matching(&edges));
        assert_eq!(cert.size(), 3);
        assert!(cert.verify(&edges));
    }

    #[test]
    fn random_graphs_have_valid_certificates() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let l = rng.gen_range(1..=7);
            let r = rng.gen_range(1..=7);
            let mut edges = Vec::new();
            for u in 0..l {
                for v in 0..r {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let cert = max_bipartite_matching(l, r, &edges);
            assert!(cert.verify(&edges));
            assert_eq!(cert.size(), brute_force_matching(&edges));
        }
    }
}
