//! Simple undirected graphs over vertices `0..n-1`, with DIMACS `.col` I/O.

use crate::bitset::VertexSet;
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// A simple undirected graph. No self-loops, adjacency is symmetric.
///
/// Optional per-vertex labels carry provenance (base-vertex names, merged
/// twin classes); they never affect the algorithms.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Subgraph induced by `keep` (ascending order); returns the graph and
    /// the map from new ids to old ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.set_labels(keep.iter().map(|&u| l[u].clone()).collect());
        }
        (g, keep.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of the graph restricted to `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.adj[u].intersection(within).iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| {
            vs.iter().skip(i + 1).all(|&v| self.has_edge(u, v))
        })
    }

    pub fn is_stable_set(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| {
            vs.iter().skip(i + 1).all(|&v| !self.has_edge(u, v))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Parses DIMACS `.col` text: `p edge n m`, `e u v` with 1-indexed vertices.
/// Comment lines (`c ...`) are collected and returned alongside the graph.
pub fn read_dimacs(text: &str) -> Result<(Graph, Vec<String>), GraphError> {
    let mut graph: Option<Graph> = None;
    let mut comments = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lno = lineno + 1;
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next().unwrap() {
            "c" => comments.push(line[1..].trim_start().to_string()),
            "p" => {
                let kind = it.next().unwrap_or("");
                if kind != "edge" && kind != "edges" && kind != "col" {
                    return Err(GraphError::Parse {
                        line: lno,
                        msg: format!("expected 'p edge', got 'p {kind}'"),
                    });
                }
                let n: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: lno,
                        msg: "bad vertex count".into(),
                    })?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or_else(|| GraphError::Parse {
                    line: lno,
                    msg: "edge before problem line".into(),
                })?;
                let mut next = |what: &str| -> Result<usize, GraphError> {
                    it.next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| GraphError::Parse {
                            line: lno,
                            msg: format!("bad {what}"),
                        })
                };
                let u = next("endpoint")?;
                let v = next("endpoint")?;
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(GraphError::Parse {
                        line: lno,
                        msg: format!("endpoint out of range: {u} {v}"),
                    });
                }
                if u != v {
                    g.add_edge(u - 1, v - 1);
                }
            }
            other => {
                return Err(GraphError::Parse {
                    line: lno,
                    msg: format!("unknown record '{other}'"),
                })
            }
        }
    }
    graph
        .map(|g| (g, comments))
        .ok_or(GraphError::Parse { line: 0, msg: "missing problem line".into() })
}

/// Writes DIMACS `.col` text. Comments are not emitted.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "p edge {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn dimacs_round_trip() {
        let g = cycle(5);
        let text = write_dimacs(&g);
        let (h, comments) = read_dimacs(&text).unwrap();
        assert!(comments.is_empty());
        assert_eq!(h.n(), 5);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn dimacs_comments_and_errors() {
        let (g, comments) =
            read_dimacs("c hello\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(comments, vec!["hello"]);
        assert_eq!(g.edge_count(), 2);
        assert!(read_dimacs("e 1 2\n").is_err());
        assert!(read_dimacs("p edge 2 1\ne 1 5\n").is_err());
    }

    #[test]
    fn components_split() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }
}
