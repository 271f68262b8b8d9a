//! The fixed base-graph catalog: the emerald, the C7 family, and the
//! distinguished induced subgraphs the colorers reduce to.
//!
//! Vertex ids are 0-based; labels carry the conventional 1-based names.

use crate::graph::Graph;

/// Emerald edges, 1-based labels.
const EMERALD_EDGES: [(usize, usize); 22] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (1, 6),
    (1, 7),
    (6, 7),
    (7, 8),
    (7, 11),
    (1, 8),
    (2, 8),
    (8, 9),
    (2, 9),
    (3, 9),
    (9, 10),
    (3, 10),
    (4, 10),
    (5, 10),
    (4, 11),
    (5, 11),
    (6, 11),
];

/// The 11 triangles of the emerald, listed in the cyclic order of the
/// triangle graph (which is an 11-cycle). 1-based labels.
pub const EMERALD_TRIANGLES: [[usize; 3]; 11] = [
    [1, 2, 8],
    [2, 8, 9],
    [2, 3, 9],
    [3, 9, 10],
    [3, 4, 10],
    [4, 5, 10],
    [4, 5, 11],
    [5, 6, 11],
    [6, 7, 11],
    [1, 6, 7],
    [1, 7, 8],
];

/// Circulant coordinate of each emerald vertex: the emerald is the graph on
/// Z11 with differences {1,2}, and this is one such numbering. Index by
/// 0-based vertex id.
const CIRCULANT_POS: [usize; 11] = [0, 2, 4, 6, 7, 9, 10, 1, 3, 5, 8];

/// Eleven stable triples of the emerald covering each vertex exactly three
/// times; the color classes of an optimal coloring of the weight-3 blowup.
/// 1-based labels.
pub const EK3_STABLE_SYSTEM: [[usize; 3]; 11] = [
    [1, 3, 5],
    [2, 5, 7],
    [4, 6, 9],
    [1, 3, 11],
    [3, 8, 11],
    [6, 8, 10],
    [2, 4, 6],
    [4, 7, 9],
    [1, 5, 9],
    [2, 7, 10],
    [8, 10, 11],
];

fn with_labels(n: usize, edges: &[(usize, usize)], labels: &[&str]) -> Graph {
    let e0: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    let mut g = Graph::from_edges(n, &e0);
    g.set_labels(labels.iter().map(|s| s.to_string()).collect());
    g
}

/// The emerald: 11 vertices, 4-regular, the extremal structure for the
/// 11/9 bound.
pub fn emerald() -> Graph {
    with_labels(
        11,
        &EMERALD_EDGES,
        &["1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"],
    )
}

pub fn c7() -> Graph {
    with_labels(
        7,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1)],
        &["1", "2", "3", "4", "5", "6", "7"],
    )
}

/// C7 plus a vertex adjacent to four consecutive cycle vertices {3,4,5,6}.
pub fn c7_plus_v() -> Graph {
    with_labels(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 1),
            (8, 3),
            (8, 4),
            (8, 5),
            (8, 6),
        ],
        &["1", "2", "3", "4", "5", "6", "7", "v"],
    )
}

/// C7 plus two adjacent vertices t2 ~ {1,2,3} and t7 ~ {1,6,7}.
/// Vertex order: 1..7, t2 (id 7), t7 (id 8).
pub fn c7_plus_2t() -> Graph {
    with_labels(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 1),
            (8, 1),
            (8, 2),
            (8, 3),
            (9, 1),
            (9, 6),
            (9, 7),
            (8, 9),
        ],
        &["1", "2", "3", "4", "5", "6", "7", "t2", "t7"],
    )
}

/// C7 plus two non-adjacent vertices f2 ~ {4,5,6,7} and f7 ~ {2,3,4,5}.
/// Vertex order: 1..7, f2 (id 7), f7 (id 8).
pub fn c7_plus_2f() -> Graph {
    with_labels(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 1),
            (8, 4),
            (8, 5),
            (8, 6),
            (8, 7),
            (9, 2),
            (9, 3),
            (9, 4),
            (9, 5),
        ],
        &["1", "2", "3", "4", "5", "6", "7", "f2", "f7"],
    )
}

/// The emerald with vertex 8 removed. Vertex order: 1..7, 9, 10, 11
/// (ids 0..9).
pub fn e_minus_8() -> Graph {
    let keep: Vec<usize> = (0..11).filter(|&v| v != 7).collect();
    let (g, _) = emerald().induced(&keep);
    g
}

/// 0-based id of an emerald vertex from its 1-based label.
pub const fn ev(label: usize) -> usize {
    label - 1
}

/// Triangle-graph distance between two emerald triangles (indices into
/// `EMERALD_TRIANGLES`), measured around the 11-cycle.
pub fn triangle_distance(i: usize, j: usize) -> usize {
    let d = (i as i32 - j as i32).unsigned_abs() as usize % 11;
    d.min(11 - d)
}

/// All 22 automorphisms of the emerald as permutations of 0-based ids.
pub fn emerald_automorphisms() -> Vec<[usize; 11]> {
    let mut id_by_pos = [0usize; 11];
    for (id, &p) in CIRCULANT_POS.iter().enumerate() {
        id_by_pos[p] = id;
    }
    let mut out = Vec::with_capacity(22);
    for flip in [false, true] {
        for c in 0..11usize {
            let mut perm = [0usize; 11];
            for (id, &p) in CIRCULANT_POS.iter().enumerate() {
                let q = if flip { (22 - p + c) % 11 } else { (p + c) % 11 };
                perm[id] = id_by_pos[q];
            }
            out.push(perm);
        }
    }
    out
}

/// An automorphism sending vertex `from` to vertex `to` (0-based ids).
pub fn emerald_automorphism_sending(from: usize, to: usize) -> [usize; 11] {
    emerald_automorphisms()
        .into_iter()
        .find(|p| p[from] == to)
        .expect("emerald is vertex-transitive")
}

/// The reflection fixing vertex 8: swaps (1 2)(3 6)(4 5)(7 9)(10 11).
pub fn emerald_reflection_fixing_8() -> [usize; 11] {
    let mut perm = [0usize; 11];
    for (a, b) in [(1, 2), (3, 6), (4, 5), (7, 9), (10, 11)] {
        perm[ev(a)] = ev(b);
        perm[ev(b)] = ev(a);
    }
    perm[ev(8)] = ev(8);
    perm
}

/// The middle triangle of an emerald vertex: its neighborhood induces a P4,
/// and the middle triangle consists of the vertex plus the middle edge.
pub fn middle_triangle(v: usize) -> [usize; 3] {
    let g = emerald();
    let nb = g.neighbors(v).to_vec();
    // the middle edge endpoints each have two neighbors inside N(v)
    let mids: Vec<usize> = nb
        .iter()
        .copied()
        .filter(|&x| nb.iter().filter(|&&y| g.has_edge(x, y)).count() == 2)
        .collect();
    debug_assert_eq!(mids.len(), 2);
    let mut t = [v, mids[0], mids[1]];
    t.sort_unstable();
    t
}

/// The two end triangles of an emerald vertex.
pub fn end_triangles(v: usize) -> [[usize; 3]; 2] {
    let g = emerald();
    let mid = middle_triangle(v);
    let mut out = vec![];
    for t in EMERALD_TRIANGLES {
        let t0: Vec<usize> = t.iter().map(|&x| ev(x)).collect();
        if t0.contains(&v) {
            let mut s = [t0[0], t0[1], t0[2]];
            s.sort_unstable();
            if s != mid {
                out.push(s);
            }
        }
    }
    debug_assert_eq!(out.len(), 2);
    let _ = g;
    [out[0], out[1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::check_freeness;

    #[test]
    fn emerald_shape() {
        let e = emerald();
        assert_eq!(e.n(), 11);
        assert_eq!(e.edge_count(), 22);
        assert!((0..11).all(|v| e.degree(v) == 4));
        assert!(check_freeness(&e).is_free);
    }

    #[test]
    fn emerald_triangle_graph_is_an_11_cycle() {
        let e = emerald();
        // the listed triangles are exactly the triangles of E
        for t in EMERALD_TRIANGLES {
            assert!(e.is_clique(&[ev(t[0]), ev(t[1]), ev(t[2])]));
        }
        // consecutive triangles share an edge, non-consecutive do not
        for i in 0..11 {
            for j in i + 1..11 {
                let a: Vec<usize> = EMERALD_TRIANGLES[i].to_vec();
                let b = EMERALD_TRIANGLES[j];
                let shared = a.iter().filter(|x| b.contains(x)).count();
                let adjacent = triangle_distance(i, j) == 1;
                assert_eq!(shared == 2, adjacent, "triangles {i} {j}");
            }
        }
    }

    #[test]
    fn emerald_alpha_is_3() {
        let e = emerald();
        let n = 11;
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if e.is_stable_set(&vs) {
                best = best.max(vs.len());
            }
        }
        assert_eq!(best, 3);
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let e = emerald();
        let autos = emerald_automorphisms();
        assert_eq!(autos.len(), 22);
        for p in &autos {
            for u in 0..11 {
                for v in 0..11 {
                    if u != v {
                        assert_eq!(e.has_edge(u, v), e.has_edge(p[u], p[v]));
                    }
                }
            }
        }
        // vertex-transitivity
        for v in 0..11 {
            assert_eq!(emerald_automorphism_sending(v, ev(8))[v], ev(8));
        }
        let refl = emerald_reflection_fixing_8();
        assert!(autos.contains(&refl));
    }

    #[test]
    fn ek3_system_is_a_valid_cover() {
        let e = emerald();
        let mut count = [0usize; 11];
        for s in EK3_STABLE_SYSTEM {
            let vs: Vec<usize> = s.iter().map(|&x| ev(x)).collect();
            assert!(e.is_stable_set(&vs), "{s:?} not stable");
            for v in vs {
                count[v] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 3));
        assert_eq!(EK3_STABLE_SYSTEM[0], [1, 3, 5]);
    }

    #[test]
    fn middle_triangle_of_8() {
        assert_eq!(middle_triangle(ev(8)), [ev(1), ev(2), ev(8)]);
        let ends = end_triangles(ev(8));
        assert!(ends.contains(&[ev(1), ev(7), ev(8)]));
        assert!(ends.contains(&[ev(2), ev(8), ev(9)]));
    }

    #[test]
    fn family_bases_are_free() {
        for g in [c7(), c7_plus_v(), c7_plus_2t(), c7_plus_2f(), e_minus_8()] {
            assert!(check_freeness(&g).is_free);
        }
    }
}
