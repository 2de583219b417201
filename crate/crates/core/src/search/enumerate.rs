//! Exhaustive enumeration of connected d-regular graphs with a girth
//! floor, exactly one representative per isomorphism class.
//!
//! Orderly generation over adjacency columns: vertex k chooses its
//! neighbors among 0..k, so the code (upper-triangle bits read column by
//! column) grows monotonically. A partial assignment survives only when
//! its induced prefix is lexicographically maximal over relabelings of
//! {0..k}; the test at the last column is full canonicity, so the stream
//! is duplicate-free by construction. Connectivity falls out of requiring
//! every column to be nonempty (a maximal code never parks an isolated
//! vertex early).

use super::SearchError;
use crate::graph::Graph;
use std::cmp::Ordering;

/// Every connected d-regular graph on n vertices with girth >= min_girth,
/// once per isomorphism class. Budget: d=3 with n <= 18 or d=4 with
/// n <= 12.
pub fn enumerate_regular(n: usize, d: usize, min_girth: usize) -> Result<Vec<Graph>, SearchError> {
    let mut out = Vec::new();
    enumerate_regular_with(n, d, min_girth, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Streaming form of [`enumerate_regular`].
pub fn enumerate_regular_with(
    n: usize,
    d: usize,
    min_girth: usize,
    emit: impl FnMut(&Graph),
) -> Result<(), SearchError> {
    let in_budget = (d == 3 && n <= 18) || (d == 4 && n <= 12);
    if !in_budget {
        return Err(SearchError::EnumerationBeyondBudget { n, d });
    }
    if n * d % 2 != 0 {
        return Err(SearchError::InvalidConfig(format!(
            "n*d must be even, got n={n} d={d}"
        )));
    }
    if min_girth < 3 {
        return Err(SearchError::InvalidConfig(format!(
            "girth floor must be at least 3, got {min_girth}"
        )));
    }
    if n < d + 1 {
        return Ok(());
    }
    let mut generator = Generator {
        n,
        d,
        min_girth,
        adjacency: vec![0u64; n],
        degree: vec![0usize; n],
        emit,
    };
    generator.extend(1);
    Ok(())
}

struct Generator<F> {
    n: usize,
    d: usize,
    min_girth: usize,
    adjacency: Vec<u64>,
    degree: Vec<usize>,
    emit: F,
}

impl<F: FnMut(&Graph)> Generator<F> {
    fn extend(&mut self, column: usize) {
        if column == self.n {
            self.emit_current();
            return;
        }
        // Vertex `column` must end with degree exactly d; columns after
        // this one can add at most one edge each.
        let later = self.n - 1 - column;
        let min_size = self.d.saturating_sub(later).max(1);
        self.choose(column, 0, 0, min_size);
    }

    /// Picks neighbors of `column` among `from..column` in ascending order;
    /// `count` already chosen. Closing the column is attempted before each
    /// extension so subsets enumerate exactly once.
    fn choose(&mut self, column: usize, from: usize, count: usize, min_size: usize) {
        if count >= min_size && self.column_complete(column) {
            self.extend(column + 1);
        }
        if count == self.d {
            return;
        }
        for u in from..column {
            if self.degree[u] < self.d && self.girth_safe(u, column) {
                self.add_edge(u, column);
                self.choose(column, u + 1, count + 1, min_size);
                self.remove_edge(u, column);
            }
        }
    }

    /// Capacity and canonicity checks once a column's neighbor set is
    /// fixed.
    fn column_complete(&mut self, column: usize) -> bool {
        let later = self.n - 1 - column;
        for v in 0..=column {
            if self.d - self.degree[v] > later {
                return false;
            }
        }
        self.prefix_canonical(column)
    }

    /// Adding (u, column) is girth-safe when their current distance is at
    /// least min_girth - 1. Bitmask BFS capped at min_girth - 2 layers.
    fn girth_safe(&self, u: usize, column: usize) -> bool {
        if self.adjacency[column] == 0 {
            return true;
        }
        let cap = self.min_girth - 2;
        let target = 1u64 << column;
        let mut visited = 1u64 << u;
        let mut frontier = visited;
        for _ in 0..cap {
            let mut next = 0u64;
            let mut scan = frontier;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                next |= self.adjacency[v];
            }
            next &= !visited;
            if next & target != 0 {
                return false;
            }
            if next == 0 {
                return true;
            }
            visited |= next;
            frontier = next;
        }
        true
    }

    /// Is the induced labeled prefix on {0..=k} lexicographically maximal
    /// over all relabelings? DFS over role assignments with three-way
    /// column comparison; a strictly larger candidate kills the branch.
    fn prefix_canonical(&self, k: usize) -> bool {
        let mut roles = [0usize; 20];
        self.canonical_dfs(k, 0, &mut roles, 0)
    }

    fn canonical_dfs(&self, k: usize, c: usize, roles: &mut [usize; 20], used: u32) -> bool {
        if c == k + 1 {
            return true;
        }
        for v in 0..=k {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut ordering = Ordering::Equal;
            for (r, &role_vertex) in roles.iter().enumerate().take(c) {
                let candidate = self.adjacency[v] >> role_vertex & 1;
                let current = self.adjacency[c] >> r & 1;
                if candidate != current {
                    ordering = if candidate > current { Ordering::Greater } else { Ordering::Less };
                    break;
                }
            }
            match ordering {
                Ordering::Greater => return false,
                Ordering::Less => {}
                Ordering::Equal => {
                    roles[c] = v;
                    if !self.canonical_dfs(k, c + 1, roles, used | 1 << v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
        self.degree[u] += 1;
        self.degree[v] += 1;
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        self.adjacency[u] &= !(1 << v);
        self.adjacency[v] &= !(1 << u);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
    }

    fn emit_current(&mut self) {
        debug_assert!(self.degree.iter().all(|&deg| deg == self.d));
        let mut edges = Vec::with_capacity(self.n * self.d / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacency[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(self.n, &edges).expect("generator builds simple graphs");
        debug_assert!(g.is_connected());
        (self.emit)(&g);
    }
}
