//! Membership test for the hereditary class: no induced P7, C4, or C5.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ForbiddenKind {
    C4,
    C5,
    P7,
}

/// Result of the class-membership scan. When `is_free` is false, `witness`
/// lists the vertices of the forbidden subgraph in cycle/path order.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FreenessReport {
    pub is_free: bool,
    pub forbidden_kind: Option<ForbiddenKind>,
    pub witness: Option<Vec<usize>>,
}

impl FreenessReport {
    fn free() -> Self {
        FreenessReport { is_free: true, forbidden_kind: None, witness: None }
    }

    fn found(kind: ForbiddenKind, witness: Vec<usize>) -> Self {
        FreenessReport { is_free: false, forbidden_kind: Some(kind), witness: Some(witness) }
    }
}

/// Scans for an induced C4, then C5, then P7, in a fixed deterministic
/// order, so witnesses are stable across runs.
pub fn check_freeness(g: &Graph) -> FreenessReport {
    if let Some(w) = find_induced_c4(g) {
        return FreenessReport::found(ForbiddenKind::C4, w);
    }
    if let Some(w) = find_induced_c5(g) {
        return FreenessReport::found(ForbiddenKind::C5, w);
    }
    if let Some(w) = find_induced_path(g, 7) {
        return FreenessReport::found(ForbiddenKind::P7, w);
    }
    FreenessReport::free()
}

/// Re-checks that a witness actually induces the claimed subgraph.
pub fn verify_witness(g: &Graph, kind: ForbiddenKind, witness: &[usize]) -> bool {
    let (len, cyclic) = match kind {
        ForbiddenKind::C4 => (4, true),
        ForbiddenKind::C5 => (5, true),
        ForbiddenKind::P7 => (7, false),
    };
    if witness.len() != len {
        return false;
    }
    let mut distinct = witness.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != len {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (cyclic && i == 0 && j == len - 1);
            if g.has_edge(witness[i], witness[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Induced C4 = a non-adjacent pair with two non-adjacent common neighbors.
fn find_induced_c4(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common = g.neighbors(u).intersection(g.neighbors(v));
            let cs = common.to_vec();
            for (i, &a) in cs.iter().enumerate() {
                for &b in &cs[i + 1..] {
                    if !g.has_edge(a, b) {
                        return Some(vec![u, a, v, b]);
                    }
                }
            }
        }
    }
    None
}

/// Induced C5: extend an induced path a-b-c-d and close it with a common
/// neighbor of a and d avoiding N[b] and N[c].
fn find_induced_c5(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for a in 0..n {
        for b in g.neighbors(a).iter() {
            for c in g.neighbors(b).iter() {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for d in g.neighbors(c).iter() {
                    if d == a || d == b || g.has_edge(a, d) || g.has_edge(b, d) {
                        continue;
                    }
                    let mut closing = g.neighbors(d).intersection(g.neighbors(a));
                    for x in [a, b, c, d] {
                        if closing.contains(x) {
                            closing.remove(x);
                        }
                    }
                    for e in closing.iter() {
                        if !g.has_edge(e, b) && !g.has_edge(e, c) {
                            return Some(vec![a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Depth-first induced-path extension: a new vertex must be adjacent to the
/// current endpoint and to no earlier path vertex.
pub fn find_induced_path(g: &Graph, len: usize) -> Option<Vec<usize>> {
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        blocked: &VertexSet,
        len: usize,
    ) -> bool {
        if path.len() == len {
            return true;
        }
        let end = *path.last().unwrap();
        for v in g.neighbors(end).difference(blocked).iter() {
            // v may touch only the current endpoint among path vertices
            if path[..path.len() - 1].iter().any(|&p| g.has_edge(v, p)) {
                continue;
            }
            path.push(v);
            let mut blocked2 = blocked.clone();
            blocked2.insert(v);
            if extend(g, path, &blocked2, len) {
                return true;
            }
            path.pop();
        }
        false
    }

    for s in 0..g.n() {
        let mut path = vec![s];
        let blocked = VertexSet::from_members(g.n(), [s]);
        if extend(g, &mut path, &blocked, len) {
            return Some(path);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::bases;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Naive oracle: check every ordered candidate arrangement of every
    /// subset of the right size.
    pub fn naive_is_free(g: &Graph) -> bool {
        fn has_induced(g: &Graph, len: usize, cyclic: bool) -> bool {
            let n = g.n();
            if n < len {
                return false;
            }
            let mut idx: Vec<usize> = (0..len).collect();
            // iterate subsets via simple recursion
            fn subsets(
                n: usize,
                len: usize,
                start: usize,
                cur: &mut Vec<usize>,
                g: &Graph,
                cyclic: bool,
            ) -> bool {
                if cur.len() == len {
                    return arrangements(g, cur, cyclic);
                }
                for v in start..n {
                    cur.push(v);
                    if subsets(n, len, v + 1, cur, g, cyclic) {
                        return true;
                    }
                    cur.pop();
                }
                false
            }
            fn arrangements(g: &Graph, set: &[usize], cyclic: bool) -> bool {
                let mut perm = set.to_vec();
                permute(&mut perm, 0, g, cyclic)
            }
            fn permute(perm: &mut Vec<usize>, k: usize, g: &Graph, cyclic: bool) -> bool {
                let len = perm.len();
                if k == len {
                    for i in 0..len {
                        for j in i + 1..len {
                            let consecutive = j == i + 1 || (cyclic && i == 0 && j == len - 1);
                            if g.has_edge(perm[i], perm[j]) != consecutive {
                                return false;
                            }
                        }
                    }
                    return true;
                }
                for i in k..len {
                    perm.swap(k, i);
                    if permute(perm, k + 1, g, cyclic) {
                        return true;
                    }
                    perm.swap(k, i);
                }
                false
            }
            idx.clear();
            subsets(n, len, 0, &mut idx, g, cyclic)
        }
        !has_induced(g, 4, true) && !has_induced(g, 5, true) && !has_induced(g, 7, false)
    }

    #[test]
    fn c7_is_free() {
        assert!(check_freeness(&cycle(7)).is_free);
    }

    #[test]
    fn c4_witnessed() {
        let r = check_freeness(&cycle(4));
        assert!(!r.is_free);
        assert_eq!(r.forbidden_kind, Some(ForbiddenKind::C4));
        assert!(verify_witness(&cycle(4), ForbiddenKind::C4, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn c5_and_p7_witnessed() {
        let r = check_freeness(&cycle(5));
        assert_eq!(r.forbidden_kind, Some(ForbiddenKind::C5));
        assert!(verify_witness(&cycle(5), ForbiddenKind::C5, r.witness.as_ref().unwrap()));
        let r = check_freeness(&path(7));
        assert_eq!(r.forbidden_kind, Some(ForbiddenKind::P7));
        assert!(verify_witness(&path(7), ForbiddenKind::P7, r.witness.as_ref().unwrap()));
        // P8 contains an induced P7
        assert!(!check_freeness(&path(8)).is_free);
    }

    #[test]
    fn emerald_is_free() {
        assert!(check_freeness(&bases::emerald()).is_free);
        assert!(naive_is_free(&bases::emerald()));
    }

    #[test]
    fn agrees_with_naive_on_random_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..120 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.9);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let report = check_freeness(&g);
            assert_eq!(report.is_free, naive_is_free(&g));
            if let (Some(k), Some(w)) = (report.forbidden_kind, report.witness.as_ref()) {
                assert!(verify_witness(&g, k, w));
            }
        }
    }
}
