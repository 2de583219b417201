//! Double-tree completion: seed two disjoint vertex-rooted Moore trees and
//! join their leaves. Any maximal graph of odd diameter D = 2K - 1 has this
//! shape, so exhausting the cross-leaf completions exhausts the candidates.

use super::{
    stochastic_search, SearchConfig, SearchError, SearchStatus, SeedMode, StructuralRestriction,
};
use crate::families::{bethe_tree, TreeRoot};
use crate::graph::Graph;

/// Two disjoint Bethe trees plus their leaf sets.
#[derive(Debug, Clone)]
pub struct DoubleTreeSeed {
    pub graph: Graph,
    pub leaves_first: Vec<usize>,
    pub leaves_second: Vec<usize>,
}

/// Builds the 2 x T_{K,d} seed; tree two occupies the upper vertex range.
pub fn double_tree_seed(d: usize, levels: usize) -> DoubleTreeSeed {
    assert!(levels >= 2, "a double tree needs at least two levels");
    let tree = bethe_tree(levels, d, TreeRoot::Vertex);
    let t = tree.vertex_count();
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    edges.extend(tree.edges().iter().map(|&(u, v)| (u + t, v + t)));
    let graph = Graph::from_edge_list(2 * t, &edges).expect("disjoint union is simple");
    let leaves_first = (0..t).filter(|&v| graph.degree(v) == 1).collect();
    let leaves_second = (t..2 * t).filter(|&v| graph.degree(v) == 1).collect();
    DoubleTreeSeed {
        graph,
        leaves_first,
        leaves_second,
    }
}

#[derive(Debug, Clone, Copy)]
pub enum CompletionMode {
    /// Backtracking over all cross-leaf completions.
    Exhaustive,
    /// Repeated stochastic runs, one RNG stream per attempt.
    Stochastic {
        attempts: u64,
        rng_seed: u64,
        max_iterations_per_attempt: u64,
    },
}

/// Emits d-regular completions of the double tree with girth >= min_girth.
/// Exhaustive mode enumerates every labeled completion (isomorphic
/// duplicates included; dedup downstream); callers then filter by diameter
/// and certification.
pub fn double_tree_completion(
    d: usize,
    levels: usize,
    min_girth: usize,
    mode: CompletionMode,
) -> Result<Vec<Graph>, SearchError> {
    if d < 3 || levels < 2 {
        return Err(SearchError::InvalidConfig(
            "double-tree completion needs d >= 3 and K >= 2".into(),
        ));
    }
    let seed = double_tree_seed(d, levels);
    match mode {
        CompletionMode::Exhaustive => {
            let pairs = seed.leaves_first.len() * seed.leaves_second.len();
            if pairs > 1300 {
                return Err(SearchError::CompletionBeyondBudget { pairs });
            }
            let mut completions = Vec::new();
            let mut graph = seed.graph.clone();
            extend_leaf(
                &mut graph,
                &seed.leaves_first,
                &seed.leaves_second,
                0,
                0,
                d,
                min_girth,
                &mut completions,
            );
            Ok(completions)
        }
        CompletionMode::Stochastic {
            attempts,
            rng_seed,
            max_iterations_per_attempt,
        } => {
            let n = seed.graph.vertex_count();
            let mut out = Vec::new();
            for attempt in 0..attempts {
                let mut cfg = SearchConfig::new(n, d, min_girth);
                cfg.seed_mode = SeedMode::DoubleTree { levels };
                cfg.structural_restriction = StructuralRestriction::CrossLeafOnly;
                cfg.rng_seed = rng_seed.wrapping_add(attempt);
                cfg.max_iterations = max_iterations_per_attempt;
                let outcome = stochastic_search(&cfg)?;
                if outcome.status == SearchStatus::Found {
                    out.push(outcome.graph.expect("found implies graph"));
                }
            }
            Ok(out)
        }
    }
}

/// Backtracking: leaf `index` of the first tree picks its remaining
/// neighbors among the second tree's leaves, in ascending order from
/// `from`, keeping the girth floor after every single addition.
#[allow(clippy::too_many_arguments)]
fn extend_leaf(
    graph: &mut Graph,
    left: &[usize],
    right: &[usize],
    index: usize,
    from: usize,
    d: usize,
    min_girth: usize,
    out: &mut Vec<Graph>,
) {
    if index == left.len() {
        debug_assert_eq!(graph.regular_degree(), Some(d));
        let mut done = graph.clone();
        done.finish_sort();
        out.push(done);
        return;
    }
    let u = left[index];
    if graph.degree(u) == d {
        extend_leaf(graph, left, right, index + 1, 0, d, min_girth, out);
        return;
    }
    let needed = d - graph.degree(u);
    // Capacity: enough spare right-leaf slots must remain.
    let spare: usize = right.iter().map(|&v| d - graph.degree(v)).sum();
    let remaining_demand: usize =
        std::iter::once(needed)
            .chain(left[index + 1..].iter().map(|&w| d - graph.degree(w)))
            .sum();
    if spare < remaining_demand {
        return;
    }
    for j in from..right.len() {
        let v = right[j];
        if super::edge_feasible(graph, u, v, d, min_girth) {
            graph.add_edge(u, v);
            if needed == 1 {
                extend_leaf(graph, left, right, index + 1, 0, d, min_girth, out);
            } else {
                extend_leaf(graph, left, right, index, j + 1, d, min_girth, out);
            }
            graph.remove_edge(u, v);
        }
    }
}
