//! Girth, diameter, connectivity and bipartiteness via BFS.
//!
//! Disconnected graphs are legal inputs (the search works through them);
//! metric values that would diverge come back as [`Infinite::Infinity`].

use super::Graph;
use std::collections::VecDeque;
use std::fmt;

/// An integer metric that may be infinite (forests, disconnected graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Infinite {
    Finite(usize),
    Infinity,
}

impl Infinite {
    pub fn finite(self) -> Option<usize> {
        match self {
            Infinite::Finite(v) => Some(v),
            Infinite::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Infinite::Finite(_))
    }
}

impl fmt::Display for Infinite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infinite::Finite(v) => write!(f, "{v}"),
            Infinite::Infinity => write!(f, "inf"),
        }
    }
}

impl PartialEq<usize> for Infinite {
    fn eq(&self, other: &usize) -> bool {
        self.finite() == Some(*other)
    }
}

/// Summary of the metric invariants a certification cares about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub degree_sequence: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub girth: Infinite,
    pub diameter: Infinite,
    pub is_connected: bool,
    pub is_bipartite: bool,
}

impl Graph {
    /// Length of the shortest cycle, or infinity for forests.
    ///
    /// Per-vertex BFS with shortest-cycle-through-root detection: a non-tree
    /// edge seen at depth levels (a, b) closes a cycle of length a + b + 1
    /// through the root. O(n·m) worst case.
    pub fn girth(&self) -> Infinite {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // No cycle through root shorter than `b` can be found
                    // once 2*dist(u) + 1 >= b.
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        match best {
            Some(b) => Infinite::Finite(b),
            None => Infinite::Infinity,
        }
    }

    /// Maximum BFS eccentricity, or infinity when disconnected.
    pub fn diameter(&self) -> Infinite {
        let n = self.vertex_count();
        if n == 0 {
            return Infinite::Finite(0);
        }
        let mut diameter = 0;
        let mut dist = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            let reached = self.bfs_into(root, &mut dist);
            if reached < n {
                return Infinite::Infinity;
            }
            diameter = diameter.max(*dist.iter().max().expect("n >= 1"));
        }
        Infinite::Finite(diameter)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut dist = vec![usize::MAX; n];
        self.bfs_into(0, &mut dist) == n
    }

    /// Two-coloring BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// BFS distance from `u` to `v`, capped: returns `None` if `v` is not
    /// reached within distance `cap`. Used as the girth feasibility probe.
    pub fn distance_capped(&self, u: usize, v: usize, cap: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if dist[x] >= cap {
                return None;
            }
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    if y == v {
                        return Some(dist[x] + 1);
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn metrics(&self) -> GraphMetrics {
        GraphMetrics {
            degree_sequence: self.degrees(),
            regular_degree: self.regular_degree(),
            girth: self.girth(),
            diameter: self.diameter(),
            is_connected: self.is_connected(),
            is_bipartite: self.is_bipartite(),
        }
    }

    fn bfs_into(&self, root: usize, dist: &mut [usize]) -> usize {
        dist[root] = 0;
        let mut reached = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bethe_tree, hypercube, petersen, TreeRoot};

    #[test]
    fn petersen_metrics() {
        let g = petersen();
        assert_eq!(g.girth(), Infinite::Finite(5));
        assert_eq!(g.diameter(), Infinite::Finite(2));
        assert!(!g.is_bipartite());
    }

    #[test]
    fn heawood_girth_is_six() {
        let g = crate::families::lcf(14, &[5, -5]).unwrap();
        assert_eq!(g.girth(), Infinite::Finite(6));
        assert_eq!(g.diameter(), Infinite::Finite(3));
    }

    #[test]
    fn three_cube_diameter() {
        assert_eq!(hypercube(3).diameter(), Infinite::Finite(3));
    }

    #[test]
    fn desargues_diameter_is_five() {
        let g = crate::families::generalized_petersen(10, 3).unwrap();
        assert_eq!(g.diameter(), Infinite::Finite(5));
    }

    #[test]
    fn complete_graph_diameter_is_one() {
        let g = crate::families::complete_graph(3);
        assert_eq!(g.diameter(), Infinite::Finite(1));
    }

    #[test]
    fn trees_have_infinite_girth() {
        let t = bethe_tree(3, 4, TreeRoot::Vertex);
        assert_eq!(t.girth(), Infinite::Infinity);
        assert!(t.is_bipartite());
        assert!(t.is_connected());
    }

    #[test]
    fn path_p2_metrics() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let m = g.metrics();
        assert_eq!(m.girth, Infinite::Infinity);
        assert_eq!(m.diameter, Infinite::Finite(1));
        assert!(m.is_bipartite);
    }

    #[test]
    fn pappus_and_mobius_kantor_metrics() {
        let pappus = crate::families::lcf(18, &[5, 7, -7, 7, -7, -5]).unwrap();
        let mk = crate::families::generalized_petersen(8, 3).unwrap();
        for g in [&pappus, &mk] {
            let m = g.metrics();
            assert_eq!(m.regular_degree, Some(3));
            assert_eq!(m.girth, Infinite::Finite(6));
            assert_eq!(m.diameter, Infinite::Finite(4));
            assert!(m.is_bipartite);
        }
    }

    #[test]
    fn disconnected_graph_reports_infinite_diameter() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), Infinite::Infinity);
        assert!(!g.is_connected());
    }

    #[test]
    fn capped_distance_probe() {
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 7)).collect();
        let path = Graph::from_edge_list(7, &edges).unwrap();
        assert_eq!(path.distance_capped(0, 6, 6), Some(6));
        assert_eq!(path.distance_capped(0, 6, 5), None);
        assert_eq!(path.distance_capped(3, 3, 0), Some(0));
    }

    // Brute-force oracles for girth and diameter on small graphs.

    fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    fn dfs_girth_oracle(g: &Graph) -> Option<usize> {
        // Enumerates simple cycles by DFS from each start vertex.
        fn extend(
            g: &Graph,
            start: usize,
            current: usize,
            visited: &mut Vec<bool>,
            len: usize,
            best: &mut Option<usize>,
        ) {
            for &next in g.neighbors(current) {
                if next == start && len >= 3 {
                    if best.map_or(true, |b| len < b) {
                        *best = Some(len);
                    }
                } else if !visited[next] && next > start {
                    if best.map_or(true, |b| len + 1 < b) {
                        visited[next] = true;
                        extend(g, start, next, visited, len + 1, best);
                        visited[next] = false;
                    }
                }
            }
        }
        let mut best = None;
        for start in 0..g.vertex_count() {
            let mut visited = vec![false; g.vertex_count()];
            visited[start] = true;
            extend(g, start, start, &mut visited, 1, &mut best);
        }
        best
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn bfs_diameter_matches_floyd_warshall() {
        for seed in 0..40 {
            let g = random_graph(4 + (seed as usize * 7) % 29, 0.18, seed);
            let fw = floyd_warshall(&g);
            let inf = usize::MAX / 4;
            let fw_diam = fw.iter().flatten().copied().max().unwrap();
            match g.diameter() {
                Infinite::Finite(d) => assert_eq!(d, fw_diam, "seed {seed}"),
                Infinite::Infinity => assert!(fw_diam >= inf, "seed {seed}"),
            }
        }
    }

    #[test]
    fn bfs_girth_matches_dfs_enumeration() {
        for seed in 0..60 {
            let g = random_graph(4 + (seed as usize) % 9, 0.3, 1000 + seed);
            assert_eq!(g.girth().finite(), dfs_girth_oracle(&g), "seed {seed}");
        }
        // And on a few named graphs.
        assert_eq!(dfs_girth_oracle(&petersen()), Some(5));
    }

    #[test]
    fn girth_at_most_twice_diameter_plus_one() {
        for seed in 0..30 {
            let g = random_graph(6 + (seed as usize) % 20, 0.25, 500 + seed);
            if let (Infinite::Finite(girth), Infinite::Finite(diam)) = (g.girth(), g.diameter()) {
                assert!(girth <= 2 * diam + 1, "seed {seed}: g={girth} D={diam}");
            }
        }
    }
}
