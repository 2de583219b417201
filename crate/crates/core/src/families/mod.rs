//! Explicit graph families: complete and complete-bipartite graphs, the
//! modified bipartite diameter-3 family, Bethe/Moore trees, projective-plane
//! incidence graphs, and a few named constructions (LCF, generalized
//! Petersen, hypercubes) used as oracles.

mod field;
mod projective;

pub use field::{is_prime, prime_power, FieldError, FiniteField};
pub use projective::{normalized_triples, pg_incidence_graph, pg_minus_graph, ProjectiveTriple};

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("bad LCF pattern: {0}")]
    BadLcf(String),
    #[error("generalized Petersen requires n >= 3 and 1 <= k < n/2")]
    BadGeneralizedPetersen,
}

/// Complete graph K_{d+1}; attains the girth-3 bound with AC = d + 1.
pub fn complete_graph(d: usize) -> Graph {
    let n = d + 1;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("complete graph is simple")
}

/// Complete bipartite graph K_{d,d}; attains the girth-4 bound with AC = d.
pub fn complete_bipartite(d: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..d)
        .flat_map(|u| (0..d).map(move |v| (u, d + v)))
        .collect();
    Graph::from_edge_list(2 * d, &edges).expect("bipartite graph is simple")
}

/// The unique diameter-3 maximal graph on 2d + 2 vertices: K_{d,d} minus a
/// perfect matching, plus two vertices joined to all of one side each.
/// Spectrum +-d (once), +-1 (d times each); AC = d - 1.
pub fn modified_bipartite(d: usize) -> Result<Graph, FamilyError> {
    if d < 3 {
        return Err(FamilyError::DegreeTooSmall { min: 3, got: d });
    }
    let mut edges = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                edges.push((i, d + j));
            }
        }
    }
    let (left_apex, right_apex) = (2 * d, 2 * d + 1);
    for i in 0..d {
        edges.push((left_apex, i));
        edges.push((right_apex, d + i));
    }
    Ok(Graph::from_edge_list(2 * d + 2, &edges).expect("construction is simple"))
}

/// Which vertex a Bethe tree hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeRoot {
    /// Root of degree d; every internal vertex has degree d; leaves sit at
    /// distance K-1 from the root. Order 1 + d * sum_{j<K-1} (d-1)^j.
    Vertex,
    /// Two (d-1)-branching trees of depth K-1 joined by a root edge: the
    /// Moore tree for even girth 2K. Order 2 * sum_{j<K} (d-1)^j.
    Edge,
}

/// Bethe tree T_{K,d} with K levels.
pub fn bethe_tree(levels: usize, d: usize, root: TreeRoot) -> Graph {
    assert!(levels >= 1 && d >= 2);
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut frontier: Vec<usize> = Vec::new();
    match root {
        TreeRoot::Vertex => {
            next = 1;
            frontier.push(0);
            for level in 1..levels {
                let branching = if level == 1 { d } else { d - 1 };
                let mut new_frontier = Vec::new();
                for &parent in &frontier {
                    for _ in 0..branching {
                        edges.push((parent, next));
                        new_frontier.push(next);
                        next += 1;
                    }
                }
                frontier = new_frontier;
            }
        }
        TreeRoot::Edge => {
            next = 2;
            edges.push((0, 1));
            let mut frontiers = [vec![0usize], vec![1usize]];
            for _ in 1..levels {
                for side in &mut frontiers {
                    let mut new_frontier = Vec::new();
                    for &parent in side.iter() {
                        for _ in 0..d - 1 {
                            edges.push((parent, next));
                            new_frontier.push(next);
                            next += 1;
                        }
                    }
                    *side = new_frontier;
                }
            }
        }
    }
    Graph::from_edge_list(next.max(1), &edges).expect("trees are simple")
}

/// Order of the vertex-rooted Bethe tree T_{K,d}.
pub fn bethe_tree_order(levels: usize, d: usize) -> usize {
    if levels == 1 {
        return 1;
    }
    1 + d * (0..levels - 1).map(|j| (d - 1).pow(j as u32)).sum::<usize>()
}

/// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
/// {0..4} in lexicographic order, adjacent iff disjoint.
pub fn petersen() -> Graph {
    let subsets: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in subsets.iter().enumerate() {
        for (j, &(c, d)) in subsets.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(10, &edges).expect("Kneser graph is simple")
}

/// k-dimensional hypercube on 2^k vertices.
pub fn hypercube(k: u32) -> Graph {
    let n = 1usize << k;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w))
        .collect();
    Graph::from_edge_list(n, &edges).expect("hypercube is simple")
}

/// Cubic graph from LCF notation: an n-cycle plus the chord (i, i + p_i)
/// for each vertex, where p cycles through `pattern`.
pub fn lcf(n: usize, pattern: &[i64]) -> Result<Graph, FamilyError> {
    if n == 0 || n % pattern.len() != 0 {
        return Err(FamilyError::BadLcf(format!(
            "pattern length {} does not divide n={n}",
            pattern.len()
        )));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    for i in 0..n {
        let offset = pattern[i % pattern.len()].rem_euclid(n as i64) as usize;
        let j = (i + offset) % n;
        match g.try_add_edge(i, j) {
            Ok(()) | Err(GraphError::DuplicateEdge(..)) => {}
            Err(e) => return Err(FamilyError::BadLcf(e.to_string())),
        }
    }
    g.finish_sort();
    if g.regular_degree() != Some(3) {
        return Err(FamilyError::BadLcf("pattern does not describe a cubic graph".into()));
    }
    Ok(g)
}

/// Generalized Petersen graph GP(n, k): outer n-cycle, inner star polygon
/// {n/k}, and spokes.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(FamilyError::BadGeneralizedPetersen);
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::from_edge_list(2 * n, &edges).expect("GP graphs are simple")
}
