use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A graph with loops and parallel edges allowed. Edges are stored as
/// `(u, w)` with `u <= w`, in insertion order; edge `k` is element `k` of any
/// matroid built on the edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    v: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(v: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = MultiGraph { v, edges: Vec::new() };
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn empty(v: usize) -> Self {
        MultiGraph { v, edges: Vec::new() }
    }

    /// Complete graph `K_v`, edges in lexicographic order.
    pub fn complete(v: usize) -> Self {
        let edges = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
        MultiGraph { v, edges }
    }

    /// Path on `v` vertices `0 - 1 - ... - (v-1)`.
    pub fn path(v: usize) -> Self {
        let edges = (1..v).map(|i| (i - 1, i)).collect();
        MultiGraph { v, edges }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<usize> {
        if a >= self.v || b >= self.v {
            return Err(Error::input(format!(
                "edge ({a}, {b}) has an endpoint outside 0..{}",
                self.v
            )));
        }
        self.edges.push((a.min(b), a.max(b)));
        Ok(self.edges.len() - 1)
    }

    /// Appends a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.v += 1;
        self.v - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_loop(&self, k: usize) -> bool {
        let (a, b) = self.edges[k];
        a == b
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(a, b)| a != b && seen.insert((a, b)))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Vertices renamed by `perm[old] = new`; edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        MultiGraph {
            v: self.v,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
                .collect(),
        }
    }

    /// All simple graphs on `v` labeled vertices, edges in lexicographic
    /// order.
    pub fn all_simple(v: usize) -> Vec<MultiGraph> {
        let slots: Vec<(usize, usize)> = MultiGraph::complete(v).edges;
        (0u32..1 << slots.len())
            .map(|bits| MultiGraph {
                v,
                edges: slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect(),
            })
            .collect()
    }
}

/// `graph n=<v>` then one `u w` pair per line; `#` comments and blank lines
/// are skipped.
impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph n={}", self.v)?;
        for (a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut graph: Option<MultiGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match graph.as_mut() {
                None => {
                    let v = line
                        .strip_prefix("graph")
                        .map(str::trim)
                        .and_then(|rest| rest.strip_prefix("n="))
                        .and_then(|v| v.trim().parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `graph n=<v>`"))?;
                    graph = Some(MultiGraph::empty(v));
                }
                Some(g) => {
                    let nums: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::parse(line_no, format!("bad edge line `{line}`")))?;
                    if nums.len() != 2 {
                        return Err(Error::parse(line_no, "edge lines hold two vertices"));
                    }
                    g.add_edge(nums[0], nums[1])
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, "missing `graph n=<v>` header"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g: MultiGraph = "graph n=3\n0 1\n2 2\n1 0\n".parse().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 2), (0, 1)]);
        assert!(!g.is_simple());
        assert_eq!(g.to_string().parse::<MultiGraph>().unwrap(), g);
        assert!("graph n=2\n0 2\n".parse::<MultiGraph>().is_err());
        assert!(matches!(
            "graph\n".parse::<MultiGraph>(),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn simple_graph_enumeration() {
        assert_eq!(MultiGraph::all_simple(3).len(), 8);
        assert_eq!(MultiGraph::all_simple(4).len(), 64);
        assert!(MultiGraph::all_simple(4).iter().all(MultiGraph::is_simple));
    }
}
