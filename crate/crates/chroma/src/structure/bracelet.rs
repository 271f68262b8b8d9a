//! 7-bracelets: seven cliques in a ring, complete between neighbors, with
//! three constrained bipartite relations between signed sub-bags.

use crate::freeness::check_freeness;
use crate::graph::Graph;

/// Sub-bag roles. `Plus` exists for A1, A6, A7; `Minus` for A1, A2, A3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubBag {
    Zero,
    Plus,
    Minus,
}

/// Sizes of the three sub-bags of one ring position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bag {
    pub zero: usize,
    pub plus: usize,
    pub minus: usize,
}

impl Bag {
    pub fn zero_only(n: usize) -> Bag {
        Bag { zero: n, plus: 0, minus: 0 }
    }

    pub fn total(&self) -> usize {
        self.zero + self.plus + self.minus
    }
}

/// A 7-bracelet specification. Bags are indexed 0..6 for ring positions
/// A1..A7; cross relations are index pairs into the respective sub-bags.
///
/// Realized vertex order: for each ring position in order, the zero
/// sub-bag, then plus, then minus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceletSpec {
    pub bags: [Bag; 7],
    /// (index into A7+, index into A2-)
    pub e72: Vec<(usize, usize)>,
    /// (index into A1+, index into A3-)
    pub e13: Vec<(usize, usize)>,
    /// (index into A6+, index into A1-)
    pub e61: Vec<(usize, usize)>,
}

pub const A1: usize = 0;
pub const A2: usize = 1;
pub const A3: usize = 2;
pub const A4: usize = 3;
pub const A5: usize = 4;
pub const A6: usize = 5;
pub const A7: usize = 6;

impl BraceletSpec {
    /// A bracelet with all sub-structure empty: a blowup of C7.
    pub fn ring(sizes: [usize; 7]) -> BraceletSpec {
        BraceletSpec {
            bags: sizes.map(Bag::zero_only),
            e72: vec![],
            e13: vec![],
            e61: vec![],
        }
    }

    pub fn n(&self) -> usize {
        self.bags.iter().map(|b| b.total()).sum()
    }

    pub fn bag_start(&self, i: usize) -> usize {
        self.bags[..i].iter().map(|b| b.total()).sum()
    }

    pub fn bag_range(&self, i: usize) -> std::ops::Range<usize> {
        let s = self.bag_start(i);
        s..s + self.bags[i].total()
    }

    pub fn sub_range(&self, i: usize, sub: SubBag) -> std::ops::Range<usize> {
        let s = self.bag_start(i);
        let b = &self.bags[i];
        match sub {
            SubBag::Zero => s..s + b.zero,
            SubBag::Plus => s + b.zero..s + b.zero + b.plus,
            SubBag::Minus => s + b.zero + b.plus..s + b.total(),
        }
    }

    /// (ring position, sub-bag, index within sub-bag) of a realized vertex.
    pub fn locate(&self, v: usize) -> (usize, SubBag, usize) {
        for i in 0..7 {
            for sub in [SubBag::Zero, SubBag::Plus, SubBag::Minus] {
                let r = self.sub_range(i, sub);
                if r.contains(&v) {
                    return (i, sub, v - r.start);
                }
            }
        }
        panic!("vertex {v} out of range");
    }

    fn cross_edges_global(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (p7, m2) = (self.sub_range(A7, SubBag::Plus), self.sub_range(A2, SubBag::Minus));
        for &(a, b) in &self.e72 {
            out.push((p7.start + a, m2.start + b));
        }
        let (p1, m3) = (self.sub_range(A1, SubBag::Plus), self.sub_range(A3, SubBag::Minus));
        for &(a, b) in &self.e13 {
            out.push((p1.start + a, m3.start + b));
        }
        let (p6, m1) = (self.sub_range(A6, SubBag::Plus), self.sub_range(A1, SubBag::Minus));
        for &(a, b) in &self.e61 {
            out.push((p6.start + a, m1.start + b));
        }
        out
    }

    pub fn realize(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for i in 0..7 {
            let r = self.bag_range(i);
            let vs: Vec<usize> = r.clone().collect();
            for (a, &u) in vs.iter().enumerate() {
                for &v in &vs[a + 1..] {
                    g.add_edge(u, v);
                }
            }
            let next = self.bag_range((i + 1) % 7);
            for u in r {
                for v in next.clone() {
                    g.add_edge(u, v);
                }
            }
        }
        for (u, v) in self.cross_edges_global() {
            g.add_edge(u, v);
        }
        let mut labels = Vec::with_capacity(n);
        for i in 0..7 {
            for (sub, tag) in [(SubBag::Zero, "0"), (SubBag::Plus, "+"), (SubBag::Minus, "-")] {
                for (j, _) in self.sub_range(i, sub).enumerate() {
                    labels.push(format!("a{}{}.{}", i + 1, tag, j));
                }
            }
        }
        g.set_labels(labels);
        g
    }

    /// Cross-relation neighbor indices of a plus/minus vertex.
    pub fn cross_neighbors(&self, i: usize, sub: SubBag, idx: usize) -> Vec<usize> {
        let pick = |rel: &Vec<(usize, usize)>, left: bool| -> Vec<usize> {
            rel.iter()
                .filter(|&&(a, b)| if left { a == idx } else { b == idx })
                .map(|&(a, b)| if left { b } else { a })
                .collect()
        };
        match (i, sub) {
            (A7, SubBag::Plus) => pick(&self.e72, true),
            (A2, SubBag::Minus) => pick(&self.e72, false),
            (A1, SubBag::Plus) => pick(&self.e13, true),
            (A3, SubBag::Minus) => pick(&self.e13, false),
            (A6, SubBag::Plus) => pick(&self.e61, true),
            (A1, SubBag::Minus) => pick(&self.e61, false),
            _ => vec![],
        }
    }

    /// The reflected bracelet (the ring symmetry fixing A1), plus the map
    /// from this spec's realized ids to the mirror's realized ids.
    pub fn mirror(&self) -> (BraceletSpec, Vec<usize>) {
        // position map: A1->A1, A2<->A7, A3<->A6, A4<->A5
        let pos = [A1, A7, A6, A5, A4, A3, A2];
        let mut bags = [Bag::default(); 7];
        bags[A1] = Bag { zero: self.bags[A1].zero, plus: self.bags[A1].minus, minus: self.bags[A1].plus };
        bags[A7] = Bag { zero: self.bags[A2].zero, plus: self.bags[A2].minus, minus: 0 };
        bags[A6] = Bag { zero: self.bags[A3].zero, plus: self.bags[A3].minus, minus: 0 };
        bags[A5] = Bag::zero_only(self.bags[A4].zero);
        bags[A4] = Bag::zero_only(self.bags[A5].zero);
        bags[A3] = Bag { zero: self.bags[A6].zero, plus: 0, minus: self.bags[A6].plus };
        bags[A2] = Bag { zero: self.bags[A7].zero, plus: 0, minus: self.bags[A7].plus };
        let mirrored = BraceletSpec {
            bags,
            // new (A7+, A2-) = old (A2-, A7+)
            e72: self.e72.iter().map(|&(a, b)| (b, a)).collect(),
            // new (A1+, A3-) = old (A1-, A6+)
            e13: self.e61.iter().map(|&(a, b)| (b, a)).collect(),
            // new (A6+, A1-) = old (A3-, A1+)
            e61: self.e13.iter().map(|&(a, b)| (b, a)).collect(),
        };
        let sub_map = |sub: SubBag| match sub {
            SubBag::Zero => SubBag::Zero,
            SubBag::Plus => SubBag::Minus,
            SubBag::Minus => SubBag::Plus,
        };
        let mut map = vec![0usize; self.n()];
        for (v, m) in map.iter_mut().enumerate() {
            let (i, sub, idx) = self.locate(v);
            let ni = pos[i];
            let nsub = if sub == SubBag::Zero { SubBag::Zero } else { sub_map(sub) };
            *m = mirrored.sub_range(ni, nsub).start + idx;
        }
        (mirrored, map)
    }

    /// Removes realized vertices, reclassifying plus/minus vertices that
    /// lose all cross neighbors into the zero sub-bag. Returns the new spec
    /// and the old-id -> new-id map (`None` for removed vertices).
    pub fn remove_vertices(&self, removed: &[usize]) -> (BraceletSpec, Vec<Option<usize>>) {
        let n = self.n();
        let gone = |v: usize| removed.contains(&v);
        // survivors per (bag, sub) in old order, with old sub indices
        let mut survivors: Vec<(usize, usize, SubBag, usize)> = Vec::new(); // (old id, bag, sub, old sub idx)
        for v in 0..n {
            if gone(v) {
                continue;
            }
            let (i, sub, idx) = self.locate(v);
            survivors.push((v, i, sub, idx));
        }
        // surviving cross pairs, in old sub indices
        let survives_pair = |i_p: usize, s_p: SubBag, a: usize, i_m: usize, s_m: SubBag, b: usize| {
            let pv = self.sub_range(i_p, s_p).start + a;
            let mv = self.sub_range(i_m, s_m).start + b;
            !gone(pv) && !gone(mv)
        };
        let e72: Vec<(usize, usize)> = self
            .e72
            .iter()
            .copied()
            .filter(|&(a, b)| survives_pair(A7, SubBag::Plus, a, A2, SubBag::Minus, b))
            .collect();
        let e13: Vec<(usize, usize)> = self
            .e13
            .iter()
            .copied()
            .filter(|&(a, b)| survives_pair(A1, SubBag::Plus, a, A3, SubBag::Minus, b))
            .collect();
        let e61: Vec<(usize, usize)> = self
            .e61
            .iter()
            .copied()
            .filter(|&(a, b)| survives_pair(A6, SubBag::Plus, a, A1, SubBag::Minus, b))
            .collect();
        let has_cross = |i: usize, sub: SubBag, idx: usize| -> bool {
            let check = |rel: &Vec<(usize, usize)>, left: bool| {
                rel.iter().any(|&(a, b)| if left { a == idx } else { b == idx })
            };
            match (i, sub) {
                (A7, SubBag::Plus) => check(&e72, true),
                (A2, SubBag::Minus) => check(&e72, false),
                (A1, SubBag::Plus) => check(&e13, true),
                (A3, SubBag::Minus) => check(&e13, false),
                (A6, SubBag::Plus) => check(&e61, true),
                (A1, SubBag::Minus) => check(&e61, false),
                _ => false,
            }
        };
        // decide new sub-bag per survivor: orphaned signed vertices become zero
        let final_sub: Vec<SubBag> = survivors
            .iter()
            .map(|&(_, i, sub, idx)| {
                if sub != SubBag::Zero && !has_cross(i, sub, idx) {
                    SubBag::Zero
                } else {
                    sub
                }
            })
            .collect();
        let mut bags = [Bag::default(); 7];
        for (s, &fs) in survivors.iter().zip(&final_sub) {
            let b = &mut bags[s.1];
            match fs {
                SubBag::Zero => b.zero += 1,
                SubBag::Plus => b.plus += 1,
                SubBag::Minus => b.minus += 1,
            }
        }
        // new sub indices, assigned in old-vertex order within (bag, new sub)
        let mut counters: Vec<[usize; 3]> = vec![[0; 3]; 7];
        let sub_ix = |s: SubBag| match s {
            SubBag::Zero => 0,
            SubBag::Plus => 1,
            SubBag::Minus => 2,
        };
        let mut new_sub_idx: Vec<usize> = Vec::with_capacity(survivors.len());
        for (s, &fs) in survivors.iter().zip(&final_sub) {
            let c = &mut counters[s.1][sub_ix(fs)];
            new_sub_idx.push(*c);
            *c += 1;
        }
        // old sub index -> new sub index, for surviving signed vertices
        let mut remap: std::collections::HashMap<(usize, u8, usize), usize> = Default::default();
        for ((s, &fs), &ni) in survivors.iter().zip(&final_sub).zip(&new_sub_idx) {
            if fs != SubBag::Zero {
                remap.insert((s.1, sub_ix(fs) as u8, s.3), ni);
            }
        }
        let remap_rel = |rel: &[(usize, usize)], ip: usize, im: usize| -> Vec<(usize, usize)> {
            rel.iter()
                .map(|&(a, b)| {
                    (
                        remap[&(ip, 1u8, a)],
                        remap[&(im, 2u8, b)],
                    )
                })
                .collect()
        };
        let spec = BraceletSpec {
            bags,
            e72: remap_rel(&e72, A7, A2),
            e13: remap_rel(&e13, A1, A3),
            e61: remap_rel(&e61, A6, A1),
        };
        let mut map = vec![None; n];
        for ((s, &fs), &ni) in survivors.iter().zip(&final_sub).zip(&new_sub_idx) {
            map[s.0] = Some(spec.sub_range(s.1, fs).start + ni);
        }
        (spec, map)
    }
}

/// Checks every structural bullet plus realized freeness. An empty list
/// means the spec is a valid 7-bracelet.
pub fn validate_bracelet(spec: &BraceletSpec) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..7 {
        if spec.bags[i].total() == 0 {
            out.push(format!("bags-nonempty: A{} is empty", i + 1));
        }
    }
    for (i, name) in [(A2, "A2"), (A3, "A3")] {
        if spec.bags[i].plus > 0 {
            out.push(format!("sub-bag-roles: {name} admits no plus part"));
        }
    }
    for (i, name) in [(A6, "A6"), (A7, "A7")] {
        if spec.bags[i].minus > 0 {
            out.push(format!("sub-bag-roles: {name} admits no minus part"));
        }
    }
    for (i, name) in [(A4, "A4"), (A5, "A5")] {
        if spec.bags[i].plus > 0 || spec.bags[i].minus > 0 {
            out.push(format!("sub-bag-roles: {name} admits no signed part"));
        }
    }
    let rels: [(&str, &Vec<(usize, usize)>, usize, usize); 3] = [
        ("e72", &spec.e72, spec.bags[A7].plus, spec.bags[A2].minus),
        ("e13", &spec.e13, spec.bags[A1].plus, spec.bags[A3].minus),
        ("e61", &spec.e61, spec.bags[A6].plus, spec.bags[A1].minus),
    ];
    for (name, rel, pn, mn) in rels {
        for &(a, b) in rel.iter() {
            if a >= pn || b >= mn {
                out.push(format!("cross-range: {name} pair ({a},{b}) out of range"));
            }
        }
    }
    if !out.is_empty() {
        return out; // index errors make the coverage checks meaningless
    }
    let coverage: [(&str, &Vec<(usize, usize)>, usize, usize, &str, &str); 3] = [
        ("e72", &spec.e72, spec.bags[A7].plus, spec.bags[A2].minus, "A7+", "A2-"),
        ("e13", &spec.e13, spec.bags[A1].plus, spec.bags[A3].minus, "A1+", "A3-"),
        ("e61", &spec.e61, spec.bags[A6].plus, spec.bags[A1].minus, "A6+", "A1-"),
    ];
    for (name, rel, pn, mn, pname, mname) in coverage {
        if (pn == 0) != (mn == 0) {
            out.push(format!(
                "coverage: {pname} nonempty requires {mname} nonempty (and conversely); relation {name}"
            ));
            continue;
        }
        for a in 0..pn {
            if !rel.iter().any(|&(x, _)| x == a) {
                out.push(format!("coverage: {pname} vertex {a} has no {name} neighbor"));
            }
        }
        for b in 0..mn {
            if !rel.iter().any(|&(_, y)| y == b) {
                out.push(format!("coverage: {mname} vertex {b} has no {name} neighbor"));
            }
        }
    }
    if out.is_empty() {
        let g = spec.realize();
        let report = check_freeness(&g);
        if !report.is_free {
            out.push(format!(
                "freeness: realization contains an induced {:?} on vertices {:?}",
                report.forbidden_kind.unwrap(),
                report.witness.unwrap()
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic_small;
    use crate::structure::bases;

    #[test]
    fn singleton_ring_is_c7() {
        let spec = BraceletSpec::ring([1; 7]);
        assert!(validate_bracelet(&spec).is_empty());
        let g = spec.realize();
        assert!(is_isomorphic_small(&g, &bases::c7()).is_some());
    }

    #[test]
    fn orphan_plus_vertex_is_flagged() {
        let mut spec = BraceletSpec::ring([1; 7]);
        spec.bags[A7] = Bag { zero: 0, plus: 1, minus: 0 };
        let violations = validate_bracelet(&spec);
        assert!(violations.iter().any(|v| v.contains("A7+ nonempty requires A2-")));
    }

    #[test]
    fn crossing_incomparable_neighborhoods_create_c4() {
        // A7+ = {u0,u1}, A2- = {w0,w1}, edges u0-w1 and u1-w0 only:
        // u0-u1-w0-w1-u0 is an induced C4 in the realization
        let mut spec = BraceletSpec::ring([1; 7]);
        spec.bags[A7] = Bag { zero: 0, plus: 2, minus: 0 };
        spec.bags[A2] = Bag { zero: 0, plus: 0, minus: 2 };
        spec.e72 = vec![(0, 1), (1, 0)];
        let violations = validate_bracelet(&spec);
        assert!(violations.iter().any(|v| v.contains("freeness") && v.contains("C4")));
    }

    #[test]
    fn nested_cross_is_valid() {
        let mut spec = BraceletSpec::ring([2; 7]);
        spec.bags[A7] = Bag { zero: 1, plus: 1, minus: 0 };
        spec.bags[A2] = Bag { zero: 1, plus: 0, minus: 1 };
        spec.e72 = vec![(0, 0)];
        assert!(validate_bracelet(&spec).is_empty());
    }

    #[test]
    fn mirror_is_an_isomorphism() {
        let mut spec = BraceletSpec::ring([2; 7]);
        spec.bags[A6] = Bag { zero: 1, plus: 1, minus: 0 };
        spec.bags[A1] = Bag { zero: 1, plus: 0, minus: 1 };
        spec.e61 = vec![(0, 0)];
        assert!(validate_bracelet(&spec).is_empty());
        let (m, map) = spec.mirror();
        assert!(validate_bracelet(&m).is_empty());
        let g = spec.realize();
        let h = m.realize();
        assert_eq!(g.n(), h.n());
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    assert_eq!(g.has_edge(u, v), h.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn removal_reclassifies_orphans() {
        let mut spec = BraceletSpec::ring([2; 7]);
        spec.bags[A7] = Bag { zero: 1, plus: 1, minus: 0 };
        spec.bags[A2] = Bag { zero: 1, plus: 0, minus: 1 };
        spec.e72 = vec![(0, 0)];
        // remove the A2- vertex: the A7+ vertex must fall back to zero
        let a2_minus = spec.sub_range(A2, SubBag::Minus).start;
        let (reduced, map) = spec.remove_vertices(&[a2_minus]);
        assert_eq!(reduced.bags[A7], Bag { zero: 2, plus: 0, minus: 0 });
        assert_eq!(reduced.bags[A2], Bag { zero: 1, plus: 0, minus: 0 });
        assert!(reduced.e72.is_empty());
        assert!(map[a2_minus].is_none());
        assert!(validate_bracelet(&reduced).is_empty());
        // removal map preserves adjacency
        let g = spec.realize();
        let h = reduced.realize();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if let (Some(nu), Some(nv)) = (map[u], map[v]) {
                    if u != v {
                        assert_eq!(g.has_edge(u, v), h.has_edge(nu, nv));
                    }
                }
            }
        }
    }
}
