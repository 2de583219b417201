//! Canonical labeling, isomorphism testing, automorphism group order and
//! stream deduplication.
//!
//! The canonical form comes from an individualization-refinement search:
//! refine to an equitable partition, branch on the vertices of the smallest
//! non-singleton cell, and take the maximum leaf code over the tree. Leaves
//! with equal codes yield automorphisms; branches whose vertex lies in the
//! orbit of an already-explored vertex (under the discovered automorphisms
//! fixing the node's individualized base) are pruned, which preserves both
//! the maximum code and the generating property of the collected set.

mod group;
mod refine;

use crate::graph::{encode_graph6, Graph};
use crate::spectra::adjacency_spectrum;
use crate::tolerances::SPECTRUM_HASH_GRID;
use group::{compose, invert, is_identity, Perm, StabilizerChain};
use refine::{individualize, refine, target_cell, unit_partition, Partition};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use thiserror::Error;

/// Size budget for canonical labeling and automorphism computations.
pub const MAX_ISO_VERTICES: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("graph on {0} vertices exceeds the canonical-labeling budget of 256")]
    TooLarge(usize),
    #[error("automorphism group order overflows u128")]
    OrderOverflow,
}

/// A relabeling-invariant representative of an isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonically relabeled graph. Two graphs are
    /// isomorphic iff these strings are byte-identical.
    pub graph6: String,
    /// The relabeling that produced it: vertex v maps to label
    /// `permutation[v]`.
    pub permutation: Vec<usize>,
}

/// Cheap isomorphism invariants. Equality is necessary but not sufficient:
/// cospectral mates collide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub n: usize,
    pub degree_hash: u64,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub spectrum_hash: u64,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    let mut h = DefaultHasher::new();
    degrees.hash(&mut h);
    let degree_hash = h.finish();

    let spectrum = adjacency_spectrum(g).expect("graphs at iso scale fit the dense solver");
    let rounded: Vec<i64> = spectrum
        .eigenvalues
        .iter()
        .map(|&ev| (ev / SPECTRUM_HASH_GRID).round() as i64)
        .collect();
    let mut h = DefaultHasher::new();
    rounded.hash(&mut h);
    let spectrum_hash = h.finish();

    Fingerprint {
        n: g.vertex_count(),
        degree_hash,
        girth: g.girth().finite(),
        diameter: g.diameter().finite(),
        spectrum_hash,
    }
}

struct Leaf {
    labeling: Perm,
    code: Vec<u64>,
}

struct IsoSearch<'g> {
    g: &'g Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

impl<'g> IsoSearch<'g> {
    fn run(g: &'g Graph) -> (Perm, Vec<Perm>) {
        let n = g.vertex_count();
        let mut search = IsoSearch { g, n, first: None, best: None, generators: Vec::new() };
        let mut root = unit_partition(n);
        refine(g, &mut root);
        search.explore(root, &mut Vec::new());
        let best = search.best.expect("every graph has at least one leaf");
        (best.labeling, search.generators)
    }

    fn explore(&mut self, partition: Partition, base: &mut Vec<usize>) {
        let Some(cell_index) = target_cell(&partition) else {
            self.visit_leaf(&partition);
            return;
        };
        let cell = partition[cell_index].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.in_explored_orbit(v, &tried, base) {
                continue;
            }
            tried.push(v);
            let child = individualize(self.g, &partition, cell_index, v);
            base.push(v);
            self.explore(child, base);
            base.pop();
        }
    }

    /// True when `v` lies in the orbit of an already-tried vertex under the
    /// subgroup of discovered automorphisms fixing `base` pointwise.
    fn in_explored_orbit(&self, v: usize, tried: &[usize], base: &[usize]) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for gamma in &self.generators {
            if base.iter().all(|&b| gamma[b] == b) {
                for w in 0..self.n {
                    uf.union(w, gamma[w]);
                }
            }
        }
        tried.iter().any(|&t| uf.find(t) == uf.find(v))
    }

    fn visit_leaf(&mut self, partition: &Partition) {
        let mut labeling = vec![0usize; self.n];
        for (label, cell) in partition.iter().enumerate() {
            labeling[cell[0]] = label;
        }
        let code = self.code_of(&labeling);

        let first_reference = match &self.first {
            Some(first) if first.code == code => Some(first.labeling.clone()),
            _ => None,
        };
        if let Some(reference) = first_reference {
            self.record_automorphism(&labeling, &reference);
        }

        enum BestAction {
            Replace,
            Automorphism(Perm),
            Keep,
        }
        let action = match &self.best {
            None => BestAction::Replace,
            Some(best) if code > best.code => BestAction::Replace,
            Some(best) if code == best.code => BestAction::Automorphism(best.labeling.clone()),
            _ => BestAction::Keep,
        };
        match action {
            BestAction::Replace => {
                self.best = Some(Leaf { labeling: labeling.clone(), code: code.clone() });
            }
            BestAction::Automorphism(reference) => {
                self.record_automorphism(&labeling, &reference);
            }
            BestAction::Keep => {}
        }
        if self.first.is_none() {
            self.first = Some(Leaf { labeling, code });
        }
    }

    /// Equal leaf codes mean the two relabeled graphs are identical, so
    /// pi^-1 o pi_ref is an automorphism.
    fn record_automorphism(&mut self, pi: &Perm, pi_ref: &Perm) {
        let gamma = compose(&invert(pi), pi_ref);
        if is_identity(&gamma) {
            return;
        }
        debug_assert!(self
            .g
            .edges()
            .iter()
            .all(|&(u, v)| self.g.has_edge(gamma[u], gamma[v])));
        self.generators.push(gamma);
    }

    /// Upper-triangle adjacency bits of the relabeled graph, row-major,
    /// packed MSB-first so slice comparison equals bitstring comparison.
    fn code_of(&self, labeling: &Perm) -> Vec<u64> {
        let inverse = invert(labeling);
        let bit_count = self.n * (self.n - 1) / 2;
        let mut words = vec![0u64; bit_count.div_ceil(64)];
        let mut index = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.g.has_edge(inverse[i], inverse[j]) {
                    words[index / 64] |= 1 << (63 - index % 64);
                }
                index += 1;
            }
        }
        words
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut current = v;
        while self.parent[current] != root {
            let next = self.parent[current];
            self.parent[current] = root;
            current = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn check_size(g: &Graph) -> Result<(), IsoError> {
    if g.vertex_count() > MAX_ISO_VERTICES {
        return Err(IsoError::TooLarge(g.vertex_count()));
    }
    Ok(())
}

/// Deterministic canonical labeling; invariant under input relabelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    check_size(g)?;
    if g.vertex_count() == 0 {
        return Ok(CanonicalForm { graph6: encode_graph6(g), permutation: Vec::new() });
    }
    let (labeling, _) = IsoSearch::run(g);
    let relabeled = g.relabel(&labeling);
    Ok(CanonicalForm { graph6: encode_graph6(&relabeled), permutation: labeling })
}

/// Fingerprint pre-filter, then canonical-form equality.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, IsoError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)?.graph6 == canonical_form(b)?.graph6)
}

/// Exact order of the automorphism group, via a stabilizer chain over the
/// generators discovered during the canonical search.
pub fn automorphism_group_order(g: &Graph) -> Result<u128, IsoError> {
    check_size(g)?;
    if g.vertex_count() == 0 {
        return Ok(1);
    }
    let (_, generators) = IsoSearch::run(g);
    StabilizerChain::from_generators(g.vertex_count(), &generators)
        .order()
        .ok_or(IsoError::OrderOverflow)
}

/// First-seen-representative filter over a stream of graphs, keyed by
/// canonical form.
#[derive(Default)]
pub struct Deduper {
    seen: HashSet<String>,
}

impl Deduper {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true when `g` is the first member of its isomorphism class.
    pub fn insert(&mut self, g: &Graph) -> Result<bool, IsoError> {
        Ok(self.seen.insert(canonical_form(g)?.graph6))
    }

    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }
}

/// Order-stable deduplication of a finite stream.
pub fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>, IsoError> {
    let mut deduper = Deduper::new();
    let mut out = Vec::new();
    for g in graphs {
        if deduper.insert(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::testutil::{random_graph, random_permutation, rng};

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let petersen = families::petersen();
        let reference = canonical_form(&petersen).unwrap().graph6;
        let mut r = rng(11);
        for _ in 0..100 {
            let perm = random_permutation(10, &mut r);
            let relabeled = petersen.relabel(&perm);
            assert_eq!(canonical_form(&relabeled).unwrap().graph6, reference);
        }
    }

    #[test]
    fn canonical_permutation_actually_produces_the_form() {
        let g = random_graph(12, 0.3, 99);
        let form = canonical_form(&g).unwrap();
        let relabeled = g.relabel(&form.permutation);
        assert_eq!(encode_graph6(&relabeled), form.graph6);
    }

    #[test]
    fn isomorphism_basics() {
        let k4 = families::complete_graph(3);
        let c4 = crate::graph::Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&k4, &c4).unwrap());

        let g = random_graph(14, 0.25, 5);
        let mut r = rng(6);
        let relabeled = g.relabel(&random_permutation(14, &mut r));
        assert!(are_isomorphic(&g, &relabeled).unwrap());
    }

    #[test]
    fn pg_minus_3_is_mobius_kantor() {
        let constructed = families::pg_minus_graph(3).unwrap();
        let mk = families::generalized_petersen(8, 3).unwrap();
        assert!(are_isomorphic(&constructed, &mk).unwrap());
    }

    #[test]
    fn modified_bipartite_3_is_the_cube() {
        let g = families::modified_bipartite(3).unwrap();
        assert!(are_isomorphic(&g, &families::hypercube(3)).unwrap());
    }

    #[test]
    fn cospectral_mates_are_separated() {
        // Hoffman graph vs the 4-cube: equal fingerprints, different
        // canonical forms.
        let hoffman = hoffman_graph();
        let q4 = families::hypercube(4);
        assert_eq!(fingerprint(&hoffman), fingerprint(&q4));
        assert!(!are_isomorphic(&hoffman, &q4).unwrap());
        assert_ne!(
            canonical_form(&hoffman).unwrap().graph6,
            canonical_form(&q4).unwrap().graph6
        );
    }

    #[test]
    fn automorphism_orders_of_named_graphs() {
        assert_eq!(automorphism_group_order(&families::petersen()).unwrap(), 120);
        let desargues = families::generalized_petersen(10, 3).unwrap();
        assert_eq!(automorphism_group_order(&desargues).unwrap(), 240);
        assert_eq!(automorphism_group_order(&families::hypercube(4)).unwrap(), 384);
        assert_eq!(automorphism_group_order(&hoffman_graph()).unwrap(), 48);
        let heawood = families::lcf(14, &[5, -5]).unwrap();
        assert_eq!(automorphism_group_order(&heawood).unwrap(), 336);
    }

    #[test]
    fn automorphism_order_matches_brute_force_small() {
        for seed in 0..12 {
            let n = 4 + (seed as usize) % 5;
            let g = random_graph(n, 0.4, 300 + seed);
            let fast = automorphism_group_order(&g).unwrap();
            let brute = brute_force_aut(&g);
            assert_eq!(fast, brute, "seed {seed}");
            let factorial: u128 = (1..=n as u128).product();
            assert_eq!(factorial % fast, 0);
        }
        assert_eq!(automorphism_group_order(&families::complete_graph(4)).unwrap(), 120);
    }

    #[test]
    fn dedup_keeps_first_representatives() {
        let petersen = families::petersen();
        let mut r = rng(17);
        let stream: Vec<_> = (0..50)
            .map(|_| petersen.relabel(&random_permutation(10, &mut r)))
            .collect();
        assert_eq!(dedup(stream).unwrap().len(), 1);
        assert_eq!(dedup(Vec::new()).unwrap().len(), 0);
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let g = crate::graph::Graph::empty(300);
        assert_eq!(canonical_form(&g), Err(IsoError::TooLarge(300)));
    }

    fn brute_force_aut(g: &crate::graph::Graph) -> u128 {
        let n = g.vertex_count();
        let mut count = 0u128;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        count
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    pub(crate) fn hoffman_graph() -> crate::graph::Graph {
        let edges_1indexed = [
            (7, 1), (8, 1), (11, 1), (12, 1), (7, 2), (9, 2), (11, 2), (13, 2),
            (7, 3), (10, 3), (12, 3), (13, 3), (8, 4), (9, 4), (11, 4), (14, 4),
            (8, 5), (10, 5), (12, 5), (14, 5), (9, 6), (10, 6), (13, 6), (14, 6),
            (15, 7), (15, 8), (15, 9), (15, 10), (16, 11), (16, 12), (16, 13), (16, 14),
        ];
        let edges: Vec<(usize, usize)> =
            edges_1indexed.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        crate::graph::Graph::from_edge_list(16, &edges).unwrap()
    }
}
