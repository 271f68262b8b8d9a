//! True-twin contraction: the inverse direction of a blowup.

use crate::graph::Graph;

/// The quotient of a graph by its maximal true-twin classes.
///
/// Vertices in one class are pairwise adjacent with identical closed
/// neighborhoods, so each class realizes as a clique substituted into the
/// base. `realize` with `weights` reproduces the original graph.
#[derive(Clone, Debug)]
pub struct TwinQuotient {
    pub base: Graph,
    pub weights: Vec<u32>,
    pub class_of: Vec<usize>,
}

pub fn quotient_by_true_twins(g: &Graph) -> TwinQuotient {
    let n = g.n();
    // Group by closed neighborhood. Equal N[v] implies the class is a clique.
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let nv = g.closed_neighborhood(v);
        let found = reps
            .iter()
            .position(|&r| g.closed_neighborhood(r) == nv);
        match found {
            Some(c) => class_of[v] = c,
            None => {
                reps.push(v);
                class_of[v] = reps.len() - 1;
            }
        }
    }
    let k = reps.len();
    let mut base = Graph::new(k);
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(reps[a], reps[b]) {
                base.add_edge(a, b);
            }
        }
    }
    let mut weights = vec![0u32; k];
    for v in 0..n {
        weights[class_of[v]] += 1;
    }
    let labels: Vec<String> = (0..k)
        .map(|c| {
            let members: Vec<String> = (0..n)
                .filter(|&v| class_of[v] == c)
                .map(|v| g.label(v))
                .collect();
            members.join(",")
        })
        .collect();
    base.set_labels(labels);
    TwinQuotient { base, weights, class_of }
}

/// Expands a base graph by substituting a clique of the given size for each
/// vertex. Vertex order: all copies of base vertex 0, then 1, and so on.
pub fn realize_weights(base: &Graph, weights: &[u32]) -> Graph {
    assert_eq!(weights.len(), base.n());
    let offsets: Vec<usize> = weights
        .iter()
        .scan(0usize, |acc, &w| {
            let o = *acc;
            *acc += w as usize;
            Some(o)
        })
        .collect();
    let total: usize = weights.iter().map(|&w| w as usize).sum();
    let mut g = Graph::new(total);
    for u in 0..base.n() {
        let wu = weights[u] as usize;
        for i in 0..wu {
            for j in i + 1..wu {
                g.add_edge(offsets[u] + i, offsets[u] + j);
            }
        }
        for v in u + 1..base.n() {
            if base.has_edge(u, v) {
                for i in 0..wu {
                    for j in 0..weights[v] as usize {
                        g.add_edge(offsets[u] + i, offsets[v] + j);
                    }
                }
            }
        }
    }
    let labels: Vec<String> = (0..base.n())
        .flat_map(|u| {
            (0..weights[u]).map(move |i| (u, i))
        })
        .map(|(u, i)| format!("{}.{}", base.label(u), i))
        .collect();
    g.set_labels(labels);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic_small;
    use crate::structure::bases;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn c7_k3_quotients_to_c7() {
        let g = realize_weights(&cycle(7), &[3; 7]);
        assert_eq!(g.n(), 21);
        let q = quotient_by_true_twins(&g);
        assert_eq!(q.weights, vec![3; 7]);
        assert!(is_isomorphic_small(&q.base, &cycle(7)).is_some());
    }

    #[test]
    fn emerald_has_no_true_twins() {
        let e = bases::emerald();
        let q = quotient_by_true_twins(&e);
        assert_eq!(q.base.n(), 11);
        assert!(q.weights.iter().all(|&w| w == 1));
    }

    #[test]
    fn emerald_k2_quotients_back() {
        let e = bases::emerald();
        let g = realize_weights(&e, &[2; 11]);
        let q = quotient_by_true_twins(&g);
        assert_eq!(q.weights, vec![2; 11]);
        assert!(is_isomorphic_small(&q.base, &e).is_some());
    }

    #[test]
    fn realize_quotient_round_trip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let mut base = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        base.add_edge(u, v);
                    }
                }
            }
            let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
            let g = realize_weights(&base, &weights);
            let q = quotient_by_true_twins(&g);
            let h = realize_weights(&q.base, &q.weights);
            if g.n() <= 12 {
                assert!(is_isomorphic_small(&g, &h).is_some());
            } else {
                // same degree multiset and size; quotient classes re-realize
                assert_eq!(g.n(), h.n());
                let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
                let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
                dg.sort_unstable();
                dh.sort_unstable();
                assert_eq!(dg, dh);
            }
        }
    }
}
