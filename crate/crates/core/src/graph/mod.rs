//! Undirected simple graphs with the invariants the rest of the crate
//! relies on: sorted adjacency lists, a canonical edge list, and a dense
//! adjacency bitmatrix for O(1) edge queries during search.

mod graph6;
mod metrics;

pub use graph6::{decode_graph6, decode_graph6_file, encode_graph6, Graph6Error};
pub use metrics::{GraphMetrics, Infinite};

use thiserror::Error;

/// Errors from graph construction and the edge-list text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("bad edge-list input: {0}")]
    BadEdgeListText(String),
}

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Construction validates simplicity; afterwards the adjacency lists, the
/// `u < v` edge list and the bitmatrix all describe the same edge set.
/// Values are cheap to clone and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    bits: BitMatrix,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        g.finish_sort();
        Ok(g)
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
            bits: BitMatrix::new(n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits.get(u, v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(d)` when every vertex has degree exactly `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        if self.n > 0 && (0..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edge_list(self.n, &edges).expect("relabeling a valid graph")
    }

    /// Parses the plain text format `"n m\nu v\n..."`.
    pub fn from_edge_list_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::BadEdgeListText("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "edge endpoint")?;
            let v: usize = parse_field(it.next(), "edge endpoint")?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::BadEdgeListText(format!(
                "header promised {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the plain text format parsed by [`Graph::from_edge_list_text`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    // -- mutation used by builders and the search module ---------------

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::OutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.bits.get(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.bits.set(u, v, true);
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("edge addition must be legal");
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.bits.get(u, v));
        self.bits.set(u, v, false);
        self.adjacency[u].retain(|&w| w != v);
        self.adjacency[v].retain(|&w| w != u);
        let key = (u.min(v), u.max(v));
        let pos = self.edges.iter().position(|&e| e == key).expect("edge present");
        self.edges.swap_remove(pos);
    }

    /// Restores sorted adjacency and edge order after a batch of mutations.
    pub(crate) fn finish_sort(&mut self) {
        for a in &mut self.adjacency {
            a.sort_unstable();
        }
        self.edges.sort_unstable();
    }
}

fn parse_field(tok: Option<&str>, what: &str) -> Result<usize, GraphError> {
    tok.ok_or_else(|| GraphError::BadEdgeListText(format!("missing {what}")))?
        .parse()
        .map_err(|_| GraphError::BadEdgeListText(format!("unparsable {what}")))
}

/// Symmetric adjacency bits, one row of `ceil(n/64)` words per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            n,
            words_per_row,
            words: vec![0; words_per_row * n],
        }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, value: bool) {
        for (a, b) in [(u, v), (v, u)] {
            let idx = a * self.words_per_row + b / 64;
            let mask = 1u64 << (b % 64);
            if value {
                self.words[idx] |= mask;
            } else {
                self.words[idx] &= !mask;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_expected_shape() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.has_edge(2, 0));
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_and_edge_list_agree() {
        let g = Graph::from_edge_list(5, &[(3, 1), (0, 4), (2, 1)]).unwrap();
        let mut from_adj: Vec<(usize, usize)> = Vec::new();
        for v in 0..g.vertex_count() {
            for &w in g.neighbors(v) {
                if v < w {
                    from_adj.push((v, w));
                }
            }
        }
        from_adj.sort_unstable();
        assert_eq!(from_adj.as_slice(), g.edges());
        assert_eq!(g.neighbors(1), &[2, 3]);
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let text = g.to_edge_list_text();
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        let h = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(g, h);
        assert!(Graph::from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list_text("").is_err());
    }

    #[test]
    fn remove_edge_keeps_structures_in_sync() {
        let mut g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        g.remove_edge(1, 2);
        g.finish_sort();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.neighbors(1), &[0]);
    }
}
