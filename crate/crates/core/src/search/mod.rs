//! Search for bound-attaining graphs: the stochastic degree-sum-sorted
//! edge-addition procedure, double-tree exhaustive completion, and a small
//! exhaustive enumerator of regular graphs.
//!
//! The stochastic loop: build the list of feasible edges (degree and girth
//! safe), sort it by descending endpoint degree sum with random tie order,
//! re-check each edge against the evolving graph and add it if still legal,
//! then remove a few random non-seed edges and repeat. The feasible list is
//! sorted once per pass; staleness is tolerated because every edge is
//! re-checked before insertion.

mod double_tree;
mod enumerate;

pub use double_tree::{double_tree_completion, double_tree_seed, CompletionMode, DoubleTreeSeed};
pub use enumerate::enumerate_regular;

use crate::bounds::{odd_diameter_exact_order, BoundConstraint};
use crate::catalog::{CatalogRecord, Provenance};
use crate::families::{bethe_tree, bethe_tree_order, TreeRoot};
use crate::graph::Graph;
use crate::iso::{Deduper, IsoError};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_chacha::rand_core::SeedableRng;
use std::cmp::Reverse;
use std::collections::HashSet;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error("enumeration supports d=3 with n <= 18 or d=4 with n <= 12; got d={d}, n={n}")]
    EnumerationBeyondBudget { n: usize, d: usize },
    #[error("double-tree completion budget is ~10^3 leaf pairs; got {pairs}")]
    CompletionBeyondBudget { pairs: usize },
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Bound(#[from] crate::bounds::BoundError),
}

/// How the working graph is initialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedMode {
    Empty,
    /// Vertex-rooted Moore tree with the given level count.
    VertexTree { levels: usize },
    /// Edge-rooted Moore tree (even girth seed).
    EdgeTree { levels: usize },
    /// Two disjoint vertex-rooted trees; the odd-diameter skeleton.
    DoubleTree { levels: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralRestriction {
    None,
    /// Only edges from leaves of one seed tree to leaves of the other.
    CrossLeafOnly,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub degree: usize,
    pub min_girth: usize,
    pub seed_mode: SeedMode,
    pub structural_restriction: StructuralRestriction,
    pub rng_seed: u64,
    /// Iterations without improvement before the removal count escalates.
    pub stall_window: u64,
    /// Cap on the escalating removal count.
    pub removal_max: usize,
    pub max_iterations: u64,
    pub wall_clock_budget: Option<Duration>,
    /// Full re-seed after this many iterations without improvement; each
    /// restart uses its own RNG stream.
    pub restart_after: Option<u64>,
}

impl SearchConfig {
    pub fn new(n: usize, degree: usize, min_girth: usize) -> Self {
        SearchConfig {
            n,
            degree,
            min_girth,
            seed_mode: SeedMode::Empty,
            structural_restriction: StructuralRestriction::None,
            rng_seed: 0,
            stall_window: 2000,
            removal_max: 8,
            max_iterations: 1_000_000,
            wall_clock_budget: None,
            restart_after: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.degree < 3 {
            return Err(SearchError::InvalidConfig(format!(
                "degree must be at least 3, got {}",
                self.degree
            )));
        }
        if self.n * self.degree % 2 != 0 {
            return Err(SearchError::InvalidConfig(format!(
                "n*d must be even (handshake), got n={} d={}",
                self.n, self.degree
            )));
        }
        if self.min_girth < 3 {
            return Err(SearchError::InvalidConfig(format!(
                "girth floor must be at least 3, got {}",
                self.min_girth
            )));
        }
        match self.seed_mode {
            SeedMode::Empty => {}
            SeedMode::VertexTree { levels } => {
                let order = bethe_tree_order(levels, self.degree);
                if order > self.n {
                    return Err(SearchError::InvalidConfig(format!(
                        "vertex tree needs {order} vertices but n={}",
                        self.n
                    )));
                }
            }
            SeedMode::EdgeTree { levels } => {
                let order = bethe_tree(levels, self.degree, TreeRoot::Edge).vertex_count();
                if order > self.n {
                    return Err(SearchError::InvalidConfig(format!(
                        "edge tree needs {order} vertices but n={}",
                        self.n
                    )));
                }
            }
            SeedMode::DoubleTree { levels } => {
                let required = odd_diameter_exact_order(self.degree, levels);
                if self.n != required {
                    return Err(SearchError::InvalidConfig(format!(
                        "double-tree mode requires n = {required} for d={} K={levels}, got {}",
                        self.degree, self.n
                    )));
                }
            }
        }
        if self.structural_restriction == StructuralRestriction::CrossLeafOnly
            && !matches!(self.seed_mode, SeedMode::DoubleTree { .. })
        {
            return Err(SearchError::InvalidConfig(
                "cross-leaf restriction requires a double-tree seed".into(),
            ));
        }
        Ok(())
    }
}

/// Working state of one search attempt.
pub struct SearchState {
    pub graph: Graph,
    pub target: usize,
    pub best_edgecount_seen: usize,
    pub iterations_since_improvement: u64,
    seed_edges: HashSet<(usize, usize)>,
    restriction: Option<(Vec<usize>, Vec<usize>)>,
}

impl SearchState {
    fn from_config(cfg: &SearchConfig) -> Self {
        let (graph, restriction) = seed_graph(cfg);
        let seed_edges = graph.edges().iter().copied().collect();
        let edgecount = graph.edge_count();
        SearchState {
            graph,
            target: cfg.n * cfg.degree / 2,
            best_edgecount_seen: edgecount,
            iterations_since_improvement: 0,
            seed_edges,
            restriction,
        }
    }
}

fn seed_graph(cfg: &SearchConfig) -> (Graph, Option<(Vec<usize>, Vec<usize>)>) {
    match cfg.seed_mode {
        SeedMode::Empty => (Graph::empty(cfg.n), None),
        SeedMode::VertexTree { levels } => {
            (pad_to(bethe_tree(levels, cfg.degree, TreeRoot::Vertex), cfg.n), None)
        }
        SeedMode::EdgeTree { levels } => {
            (pad_to(bethe_tree(levels, cfg.degree, TreeRoot::Edge), cfg.n), None)
        }
        SeedMode::DoubleTree { levels } => {
            let seed = double_tree_seed(cfg.degree, levels);
            let restriction = if cfg.structural_restriction == StructuralRestriction::CrossLeafOnly
            {
                Some((seed.leaves_first.clone(), seed.leaves_second.clone()))
            } else {
                None
            };
            (seed.graph, restriction)
        }
    }
}

/// Embeds a smaller seed graph into n vertices (extra vertices isolated).
fn pad_to(g: Graph, n: usize) -> Graph {
    if g.vertex_count() == n {
        return g;
    }
    Graph::from_edge_list(n, g.edges()).expect("padding preserves validity")
}

/// A single edge is addable when both endpoints have spare degree and the
/// endpoints are at distance >= min_girth - 1 (so the new cycle, if any,
/// has length >= min_girth).
pub fn edge_feasible(g: &Graph, u: usize, v: usize, degree: usize, min_girth: usize) -> bool {
    u != v
        && !g.has_edge(u, v)
        && g.degree(u) < degree
        && g.degree(v) < degree
        && g.distance_capped(u, v, min_girth.saturating_sub(2)).is_none()
}

/// All edges that could be added without violating the degree cap, the
/// girth floor, or the structural restriction.
pub fn make_feasible_list(state: &SearchState, cfg: &SearchConfig) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match &state.restriction {
        Some((left, right)) => {
            for &u in left {
                for &v in right {
                    if edge_feasible(&state.graph, u, v, cfg.degree, cfg.min_girth) {
                        out.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        None => {
            for u in 0..cfg.n {
                for v in u + 1..cfg.n {
                    if edge_feasible(&state.graph, u, v, cfg.degree, cfg.min_girth) {
                        out.push((u, v));
                    }
                }
            }
        }
    }
    out
}

/// Sorts by descending endpoint degree sum; ties land in uniformly random
/// order (shuffle before a stable sort).
pub fn sort_edges(edges: &mut Vec<(usize, usize)>, graph: &Graph, rng: &mut impl Rng) {
    edges.shuffle(rng);
    edges.sort_by_key(|&(u, v)| Reverse(graph.degree(u) + graph.degree(v)));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    BudgetExhausted,
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub iterations: u64,
    pub restarts: u64,
    pub removals: u64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub graph: Option<Graph>,
    pub stats: SearchStats,
}

/// Progress snapshot handed to the caller's callback once per iteration.
#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub iteration: u64,
    pub edges: usize,
    pub target: usize,
    pub removal_count: usize,
    pub restarts: u64,
}

pub fn stochastic_search(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    stochastic_search_with_progress(cfg, |_| {})
}

/// The main loop. Deterministic given the config and rng seed.
pub fn stochastic_search_with_progress(
    cfg: &SearchConfig,
    mut progress: impl FnMut(&Progress),
) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let mut state = SearchState::from_config(cfg);
    let mut rng = stream_rng(cfg.rng_seed, 0);
    let mut removal_count = 1usize;

    loop {
        if state.graph.edge_count() == state.target {
            debug_assert_eq!(state.graph.regular_degree(), Some(cfg.degree));
            let mut found = state.graph.clone();
            found.finish_sort();
            stats.wall_time = start.elapsed();
            return Ok(SearchOutcome {
                status: SearchStatus::Found,
                graph: Some(found),
                stats,
            });
        }
        if stats.iterations >= cfg.max_iterations
            || cfg.wall_clock_budget.is_some_and(|budget| start.elapsed() >= budget)
        {
            stats.wall_time = start.elapsed();
            return Ok(SearchOutcome {
                status: SearchStatus::BudgetExhausted,
                graph: None,
                stats,
            });
        }
        stats.iterations += 1;

        let mut feasible = make_feasible_list(&state, cfg);
        sort_edges(&mut feasible, &state.graph, &mut rng);
        for &(u, v) in &feasible {
            // EdgeCheck: the graph has evolved since the list was built.
            if edge_feasible(&state.graph, u, v, cfg.degree, cfg.min_girth) {
                state.graph.add_edge(u, v);
            }
        }
        if state.graph.edge_count() == state.target {
            continue;
        }

        if state.graph.edge_count() > state.best_edgecount_seen {
            state.best_edgecount_seen = state.graph.edge_count();
            state.iterations_since_improvement = 0;
            removal_count = 1;
        } else {
            state.iterations_since_improvement += 1;
            if state.iterations_since_improvement >= cfg.stall_window {
                removal_count = (removal_count + 1).min(cfg.removal_max);
                state.iterations_since_improvement = 0;
            }
        }

        if cfg
            .restart_after
            .is_some_and(|limit| state.iterations_since_improvement >= limit)
        {
            stats.restarts += 1;
            state = SearchState::from_config(cfg);
            rng = stream_rng(cfg.rng_seed, stats.restarts);
            removal_count = 1;
            continue;
        }

        let removable: Vec<(usize, usize)> = state
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !state.seed_edges.contains(e))
            .collect();
        for &(u, v) in removable.choose_multiple(&mut rng, removal_count) {
            state.graph.remove_edge(u, v);
            stats.removals += 1;
        }

        progress(&Progress {
            iteration: stats.iterations,
            edges: state.graph.edge_count(),
            target: state.target,
            removal_count,
            restarts: stats.restarts,
        });
    }
}

/// Counter-based RNG with a separate stream per restart.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Certifies a stream of graphs against a constraint, deduplicates, and
/// emits catalog records for the attaining ones.
pub fn verify_and_emit(
    graphs: impl IntoIterator<Item = Graph>,
    constraint: &BoundConstraint,
    provenance: &Provenance,
) -> Result<Vec<CatalogRecord>, SearchError> {
    let mut deduper = Deduper::new();
    let mut records = Vec::new();
    for graph in graphs {
        let report = crate::bounds::certify_maximal(&graph, constraint)?;
        if !report.attained {
            continue;
        }
        if !deduper.insert(&graph)? {
            continue;
        }
        records.push(CatalogRecord::build(&graph, &report, provenance.clone())?);
    }
    Ok(records)
}
