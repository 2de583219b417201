//! Spectra of graphs: dense symmetric eigenvalues for Laplacian and
//! adjacency matrices, and the tridiagonal bound machinery.

mod dense;
mod tridiag;

pub use dense::SpectraError;
pub use tridiag::{sturm_count, sturm_eigenvalue, TridiagonalError, TridiagonalSystem};

use crate::graph::Graph;
use crate::tolerances::MULTIPLICITY_GROUPING;

/// Budget for the dense solver; everything in this crate stays far below it.
pub const MAX_DENSE_DIMENSION: usize = 2048;

/// A symmetric matrix stored densely, row-major. Constructed symmetric,
/// never approximately.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    /// Builds from a generator; the `(j, i)` value mirrors `(i, j)` with
    /// `i <= j`, so the result is symmetric by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        DenseSymmetricMatrix { n, entries }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Matrix-vector product; used for residual checks.
    pub fn multiply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Sorted eigenvalues plus the tolerance used when grouping multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub multiplicity_tolerance: f64,
}

impl SpectrumResult {
    /// Groups eigenvalues into `(representative, multiplicity)` pairs using
    /// the stored tolerance. Representatives are the group means.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &ev in &self.eigenvalues {
            match groups.last_mut() {
                Some((rep, count))
                    if (ev - *rep / *count as f64).abs() <= self.multiplicity_tolerance =>
                {
                    *rep += ev;
                    *count += 1;
                }
                _ => groups.push((ev, 1)),
            }
        }
        groups
            .into_iter()
            .map(|(sum, count)| (sum / count as f64, count))
            .collect()
    }

    /// Compares against an expected multiset of `(value, multiplicity)`
    /// pairs to the given tolerance.
    pub fn matches_multiset(&self, expected: &[(f64, usize)], tol: f64) -> bool {
        let total: usize = expected.iter().map(|&(_, m)| m).sum();
        if total != self.eigenvalues.len() {
            return false;
        }
        let mut expanded: Vec<f64> = expected
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
            .collect();
        expanded.sort_by(f64::total_cmp);
        self.eigenvalues
            .iter()
            .zip(&expanded)
            .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// All eigenvalues of a dense symmetric matrix, sorted ascending.
///
/// Householder tridiagonalization + implicitly shifted QL; deterministic and
/// accurate to well under 1e-9 relative to the matrix norm at these sizes.
pub fn symmetric_eigenvalues(m: &DenseSymmetricMatrix) -> Result<SpectrumResult, SpectraError> {
    if m.n > MAX_DENSE_DIMENSION {
        return Err(SpectraError::DimensionTooLarge(m.n));
    }
    let mut work = m.entries.clone();
    let (mut d, mut e) = dense::householder_tridiagonalize(&mut work, m.n);
    dense::ql_implicit(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(SpectrumResult {
        eigenvalues: d,
        multiplicity_tolerance: MULTIPLICITY_GROUPING,
    })
}

/// Laplacian L = D - A.
pub fn laplacian(g: &Graph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

/// Adjacency matrix A.
pub fn adjacency_matrix(g: &Graph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(g.vertex_count(), |i, j| {
        if i != j && g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}

pub fn laplacian_spectrum(g: &Graph) -> Result<SpectrumResult, SpectraError> {
    symmetric_eigenvalues(&laplacian(g))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<SpectrumResult, SpectraError> {
    symmetric_eigenvalues(&adjacency_matrix(g))
}

/// Second-smallest Laplacian eigenvalue of a connected graph.
///
/// Disconnected input is reported as [`SpectraError::Disconnected`] rather
/// than returning 0, so search code can prune on it.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, SpectraError> {
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let spectrum = laplacian_spectrum(g)?;
    Ok(spectrum.eigenvalues[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_laplacian_shape() {
        let g = families::complete_graph(2);
        let l = laplacian(&g);
        for i in 0..3 {
            assert_eq!(l.get(i, i), 2.0);
            let row_sum: f64 = (0..3).map(|j| l.get(i, j)).sum();
            assert_eq!(row_sum, 0.0);
        }
        assert_eq!(l.get(0, 1), -1.0);
    }

    #[test]
    fn complete_graph_spectrum() {
        // K_{d+1} Laplacian spectrum: {0, d+1 with multiplicity d}.
        for d in [2usize, 3, 5, 9] {
            let spec = laplacian_spectrum(&families::complete_graph(d)).unwrap();
            let groups = spec.multiplicities();
            assert_eq!(groups.len(), 2);
            assert!(groups[0].0.abs() < 1e-10);
            assert_eq!(groups[0].1, 1);
            assert!((groups[1].0 - (d as f64 + 1.0)).abs() < 1e-10);
            assert_eq!(groups[1].1, d);
        }
    }

    #[test]
    fn named_graph_connectivities() {
        let cases: [(crate::graph::Graph, f64); 3] = [
            (families::petersen(), 2.0),
            (families::lcf(14, &[5, -5]).unwrap(), 3.0 - 2f64.sqrt()),
            (families::generalized_petersen(10, 3).unwrap(), 1.0),
        ];
        for (g, expect) in cases {
            let ac = algebraic_connectivity(&g).unwrap();
            assert!((ac - expect).abs() < 1e-9, "{ac} vs {expect}");
        }
    }

    #[test]
    fn disconnected_graph_is_an_error() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(algebraic_connectivity(&g), Err(SpectraError::Disconnected));
    }

    #[test]
    fn symmetrized_bound_matrix_example() {
        //

        // The 2x2 matrix [[3,-3],[-1,3]] symmetrized by the diagonal
        // similarity has off-diagonals -sqrt(3); smallest eigenvalue 3-sqrt(3).
        let m = DenseSymmetricMatrix::from_fn(2, |i, j| if i == j { 3.0 } else { -(3f64.sqrt()) });
        let spec = symmetric_eigenvalues(&m).unwrap();
        assert!((spec.eigenvalues[0] - 1.2679491924311228).abs() < 1e-10);
    }

    #[test]
    fn empty_graph_adjacency_spectrum() {
        let g = Graph::empty(4);
        let spec = adjacency_spectrum(&g).unwrap();
        assert_eq!(spec.eigenvalues, vec![0.0; 4]);
    }

    #[test]
    fn laplacian_annihilates_all_ones() {
        use crate::testutil::random_graph;
        for seed in 0..20 {
            let g = random_graph(6 + seed as usize % 30, 0.3, seed);
            let l = laplacian(&g);
            let ones = vec![1.0; g.vertex_count()];
            let residual: f64 = l.multiply(&ones).iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!(residual < 1e-8);
        }
    }

    #[test]
    fn regular_graph_laplacian_is_degree_minus_adjacency() {
        use crate::testutil::random_regular;
        for seed in 0..10 {
            let d = 3 + (seed as usize) % 3;
            let n = if (d * (10 + seed as usize)) % 2 == 0 { 10 + seed as usize } else { 11 + seed as usize };
            let g = random_regular(n, d, seed);
            let lap = laplacian_spectrum(&g).unwrap().eigenvalues;
            let mut adj = adjacency_spectrum(&g).unwrap().eigenvalues;
            adj.reverse();
            for (l, a) in lap.iter().zip(&adj) {
                assert!((l - (d as f64 - a)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn sturm_agrees_with_dense_on_random_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-4.0..4.0)).collect();
            let off: Vec<f64> = (0..n.saturating_sub(1)).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let m = DenseSymmetricMatrix::from_fn(n, |i, j| {
                if i == j {
                    diag[i]
                } else if j == i + 1 {
                    off[i]
                } else {
                    0.0
                }
            });
            let dense = symmetric_eigenvalues(&m).unwrap().eigenvalues;
            // Count checks at shifted probes, and eigenvalue agreement.
            for (k, &ev) in dense.iter().enumerate() {
                assert!((sturm_eigenvalue(&diag, &off, k) - ev).abs() < 1e-9);
                assert_eq!(sturm_count(&diag, &off, ev - 1e-7), k);
            }
        }
    }
}
