//! Colorings and the color budgets the constructive procedures must meet.

use crate::graph::Graph;

/// A total assignment of colors `1..=k` to vertices, with every color used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Builds from a raw assignment (colors ≥ 1), renumbering so the used
    /// colors are exactly `1..=k` in order of first appearance.
    pub fn from_assignment(raw: Vec<u32>) -> Self {
        let mut remap: Vec<u32> = Vec::new();
        let mut map = std::collections::HashMap::new();
        let assignment: Vec<u32> = raw
            .iter()
            .map(|&c| {
                assert!(c >= 1, "colors are 1-based");
                *map.entry(c).or_insert_with(|| {
                    remap.push(c);
                    remap.len() as u32
                })
            })
            .collect();
        Coloring { assignment, k: remap.len() as u32 }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Self {
        let mut raw = vec![0u32; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                assert_eq!(raw[v], 0, "vertex {v} colored twice");
                raw[v] = i as u32 + 1;
            }
        }
        assert!(raw.iter().all(|&c| c > 0), "partial coloring");
        Coloring::from_assignment(raw)
    }

    pub fn num_colors(&self) -> u32 {
        self.k
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Color classes indexed by color - 1.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k as usize];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c as usize - 1].push(v);
        }
        out
    }
}

/// Checks properness; on failure returns the first violating edge in
/// lexicographic order.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> Result<(), (usize, usize)> {
    assert_eq!(coloring.len(), g.n(), "coloring not total");
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            if v > u && coloring.color(u) == coloring.color(v) {
                return Err((u, v));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    ElevenNinths,
    SevenSixths,
    SevenSixthsPlusOne,
    Exact,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundKind::ElevenNinths => "11/9",
            BoundKind::SevenSixths => "7/6",
            BoundKind::SevenSixthsPlusOne => "7/6+1",
            BoundKind::Exact => "exact",
        };
        f.write_str(s)
    }
}

/// The number of colors a procedure is allowed for a target with clique
/// number `omega`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorBudget {
    pub omega: u32,
    pub kind: BoundKind,
    pub budget: u32,
}

impl ColorBudget {
    pub fn new(kind: BoundKind, omega: u32) -> Self {
        let budget = match kind {
            BoundKind::ElevenNinths => ceil_ratio(11 * omega, 9),
            BoundKind::SevenSixths => ceil_ratio(7 * omega, 6),
            BoundKind::SevenSixthsPlusOne => ceil_ratio(7 * omega, 6) + 1,
            BoundKind::Exact => omega,
        };
        ColorBudget { omega, kind, budget }
    }

    pub fn exact(omega: u32, chi: u32) -> Self {
        ColorBudget { omega, kind: BoundKind::Exact, budget: chi }
    }
}

pub fn ceil_ratio(a: u32, b: u32) -> u32 {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn verify_c7_three_coloring() {
        let g = cycle(7);
        let c = Coloring::from_assignment(vec![1, 2, 1, 2, 1, 2, 3]);
        assert_eq!(c.num_colors(), 3);
        assert!(verify_coloring(&g, &c).is_ok());
    }

    #[test]
    fn verify_reports_first_violation() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let c = Coloring::from_assignment(vec![1, 1]);
        assert_eq!(verify_coloring(&g, &c), Err((0, 1)));
    }

    #[test]
    fn compaction() {
        let c = Coloring::from_assignment(vec![5, 7, 5]);
        assert_eq!(c.num_colors(), 2);
        assert_eq!(c.assignment(), &[1, 2, 1]);
    }

    #[test]
    fn budgets() {
        assert_eq!(ColorBudget::new(BoundKind::ElevenNinths, 9).budget, 11);
        assert_eq!(ColorBudget::new(BoundKind::ElevenNinths, 3).budget, 4);
        assert_eq!(ColorBudget::new(BoundKind::SevenSixths, 6).budget, 7);
        assert_eq!(ColorBudget::new(BoundKind::SevenSixthsPlusOne, 6).budget, 8);
    }
}
