//! Projective-plane incidence constructions over GF(q): the full PG(2,q)
//! point-line incidence graph (girth 6) and the diameter-4 subgraph on the
//! triples (1,b,c) with (b,c) != (0,0).

use super::field::{FieldError, FiniteField};
use crate::graph::Graph;

/// A projective triple (a, b, c), not all zero, normalized so the first
/// nonzero coordinate is 1. There are q^2 + q + 1 normalized classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjectiveTriple {
    pub coords: (u32, u32, u32),
}

impl ProjectiveTriple {
    /// Normalizes arbitrary non-zero coordinates by rescaling so that the
    /// first nonzero coordinate becomes 1.
    pub fn normalize(field: &FiniteField, coords: (u32, u32, u32)) -> Option<Self> {
        let (a, b, c) = coords;
        let lead = [a, b, c].into_iter().find(|&x| x != 0)?;
        let inv = field.inv(lead).expect("lead is nonzero");
        Some(ProjectiveTriple {
            coords: (field.mul(a, inv), field.mul(b, inv), field.mul(c, inv)),
        })
    }

    pub fn dot(&self, field: &FiniteField, other: &ProjectiveTriple) -> u32 {
        let (a1, b1, c1) = self.coords;
        let (a2, b2, c2) = other.coords;
        field.add(
            field.add(field.mul(a1, a2), field.mul(b1, b2)),
            field.mul(c1, c2),
        )
    }
}

/// All normalized triples in lexicographic order:
/// (0,0,1), (0,1,*), then (1,*,*).
pub fn normalized_triples(field: &FiniteField) -> Vec<ProjectiveTriple> {
    let mut out = Vec::with_capacity((field.order() * field.order() + field.order() + 1) as usize);
    out.push(ProjectiveTriple { coords: (0, 0, 1) });
    for c in field.elements() {
        out.push(ProjectiveTriple { coords: (0, 1, c) });
    }
    for b in field.elements() {
        for c in field.elements() {
            out.push(ProjectiveTriple { coords: (1, b, c) });
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// Point-line incidence graph of PG(2,q): bipartite on 2(q^2+q+1)
/// vertices (all lines first, then all points, each in lexicographic
/// normalized-triple order), regular of degree q+1, girth 6, diameter 3.
/// L and P are adjacent iff their dot product vanishes in GF(q).
pub fn pg_incidence_graph(q: u32) -> Result<Graph, FieldError> {
    if q > 32 {
        return Err(FieldError::TooLarge(q as u64));
    }
    let field = FiniteField::of_order(q)?;
    let triples = normalized_triples(&field);
    let classes = triples.len();
    let mut edges = Vec::new();
    for (i, line) in triples.iter().enumerate() {
        for (j, point) in triples.iter().enumerate() {
            if line.dot(&field, point) == 0 {
                edges.push((i, classes + j));
            }
        }
    }
    Ok(Graph::from_edge_list(2 * classes, &edges).expect("incidence edges are simple"))
}

/// The diameter-4 subgraph of PG(2,q): only triples (1,b,c) with
/// (b,c) != (0,0) on both sides, giving a q-regular bipartite graph on
/// 2q^2 - 2 vertices with girth 6, diameter 4 and spectrum
/// +-q (once), +-sqrt(q) (q^2-q-2 times), +-1 (q times).
pub fn pg_minus_graph(q: u32) -> Result<Graph, FieldError> {
    if !(3..=32).contains(&q) {
        return Err(FieldError::TooLarge(q as u64));
    }
    let field = FiniteField::of_order(q)?;
    let mut triples = Vec::with_capacity((q * q - 1) as usize);
    for b in field.elements() {
        for c in field.elements() {
            if (b, c) != (0, 0) {
                triples.push(ProjectiveTriple { coords: (1, b, c) });
            }
        }
    }
    let classes = triples.len();
    let mut edges = Vec::new();
    for (i, line) in triples.iter().enumerate() {
        for (j, point) in triples.iter().enumerate() {
            if line.dot(&field, point) == 0 {
                edges.push((i, classes + j));
            }
        }
    }
    Ok(Graph::from_edge_list(2 * classes, &edges).expect("incidence edges are simple"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Infinite;

    #[test]
    fn triple_count_and_order() {
        let field = FiniteField::of_order(4).unwrap();
        let triples = normalized_triples(&field);
        assert_eq!(triples.len(), 21);
        // Uniqueness of normalization: rescaling any representative lands on
        // the same normalized triple.
        for t in &triples {
            for s in field.elements().skip(1) {
                let (a, b, c) = t.coords;
                let scaled = (field.mul(a, s), field.mul(b, s), field.mul(c, s));
                assert_eq!(ProjectiveTriple::normalize(&field, scaled), Some(*t));
            }
        }
    }

    #[test]
    fn pg2_is_heawood() {
        let g = pg_incidence_graph(2).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Infinite::Finite(6));
        assert_eq!(g.diameter(), Infinite::Finite(3));
        assert!(g.is_bipartite());
    }

    #[test]
    fn pg3_metrics() {
        let g = pg_incidence_graph(3).unwrap();
        assert_eq!(g.vertex_count(), 26);
        assert_eq!(g.regular_degree(), Some(4));
        let ac = crate::spectra::algebraic_connectivity(&g).unwrap();
        assert!((ac - (4.0 - 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn pg4_metrics_from_construction() {
        let g = pg_incidence_graph(4).unwrap();
        let m = g.metrics();
        assert_eq!(g.vertex_count(), 42);
        assert_eq!(m.regular_degree, Some(5));
        assert_eq!(m.girth, Infinite::Finite(6));
        assert_eq!(m.diameter, Infinite::Finite(3));
    }

    #[test]
    fn pg_minus_3_shape() {
        let g = pg_minus_graph(3).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Infinite::Finite(6));
        assert_eq!(g.diameter(), Infinite::Finite(4));
        let ac = crate::spectra::algebraic_connectivity(&g).unwrap();
        assert!((ac - (3.0 - 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn pg_minus_5_connectivity() {
        let g = pg_minus_graph(5).unwrap();
        assert_eq!(g.vertex_count(), 48);
        let ac = crate::spectra::algebraic_connectivity(&g).unwrap();
        assert!((ac - (5.0 - 5f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn non_prime_power_rejected() {
        assert!(matches!(pg_incidence_graph(6), Err(FieldError::NotPrimePower(6))));
        assert!(matches!(pg_minus_graph(10), Err(FieldError::NotPrimePower(10))));
    }
}
