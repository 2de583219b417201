//! The K×K corner-parameterized tridiagonal matrix underlying the bound
//! computations, and Sturm-sequence bisection on its symmetrized form.
//!
//! The matrix has diagonal `(a, d, ..., d, c)`, superdiagonal
//! `(-b, -(d-1), ..., -(d-1))` and subdiagonal `(-1, ..., -1)`. Each
//! opposite off-diagonal pair has a positive product, so the diagonal
//! similarity with `D = diag(1, sqrt(b), sqrt(b(d-1)), ...)` produces a
//! symmetric tridiagonal matrix with the same spectrum and off-diagonals
//! `sqrt(b), sqrt(d-1), ..., sqrt(d-1)`.

use crate::tolerances::{STURM_PIVOT_GUARD, STURM_TOL};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TridiagonalError {
    #[error("K must be at least 1")]
    EmptyMatrix,
    #[error("b must be positive for the symmetrizing similarity to be real")]
    NonPositiveB,
    #[error("degree parameter d must be at least 3")]
    DegreeTooSmall,
}

/// Corner-parameterized tridiagonal system; see the module docs.
///
/// For `K = 1` the matrix degenerates to the single entry `c` (the last
/// diagonal value wins; this is the convention the girth-3 bound needs).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TridiagonalSystem {
    k: usize,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TridiagonalSystem {
    pub fn new(k: usize, a: f64, b: f64, c: f64, d: f64) -> Result<Self, TridiagonalError> {
        if k == 0 {
            return Err(TridiagonalError::EmptyMatrix);
        }
        if b <= 0.0 {
            return Err(TridiagonalError::NonPositiveB);
        }
        if d < 3.0 {
            return Err(TridiagonalError::DegreeTooSmall);
        }
        Ok(TridiagonalSystem { k, a, b, c, d })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Diagonal and off-diagonal of the symmetrized matrix.
    pub fn symmetrized(&self) -> (Vec<f64>, Vec<f64>) {
        let mut diag = vec![self.d; self.k];
        diag[0] = self.a;
        diag[self.k - 1] = self.c;
        let mut off = vec![(self.d - 1.0).sqrt(); self.k.saturating_sub(1)];
        if let Some(first) = off.first_mut() {
            *first = self.b.sqrt();
        }
        (diag, off)
    }

    /// Smallest eigenvalue via Sturm bisection, absolute tolerance 1e-12.
    pub fn smallest_eigenvalue(&self) -> f64 {
        let (diag, off) = self.symmetrized();
        sturm_eigenvalue(&diag, &off, 0)
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let (diag, off) = self.symmetrized();
        (0..self.k).map(|i| sturm_eigenvalue(&diag, &off, i)).collect()
    }

    /// The symmetrized matrix densified, for cross-validation.
    pub fn to_dense(&self) -> super::DenseSymmetricMatrix {
        let (diag, off) = self.symmetrized();
        super::DenseSymmetricMatrix::from_fn(self.k, |i, j| {
            if i == j {
                diag[i]
            } else if j == i + 1 {
                -off[i]
            } else if i == j + 1 {
                -off[j]
            } else {
                0.0
            }
        })
    }
}

/// Number of eigenvalues of the symmetric tridiagonal `(diag, off)` that are
/// strictly below `x`, by counting negative pivots of the LDL^T recurrence.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < STURM_PIVOT_GUARD {
            STURM_PIVOT_GUARD.copysign(if q == 0.0 { -1.0 } else { q })
        } else {
            q
        };
        q = (diag[i] - x) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `index`-th smallest eigenvalue (0-based) by Sturm bisection within
/// Gershgorin bounds.
pub fn sturm_eigenvalue(diag: &[f64], off: &[f64], index: usize) -> f64 {
    let n = diag.len();
    assert!(index < n);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    lo -= 1.0;
    hi += 1.0;
    while hi - lo > STURM_TOL {
        let mid = 0.5 * (lo + hi);
        if sturm_count(diag, off, mid) <= index {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_four_corner_case() {
        // diag (3, 3), off-diagonals -3 / -1; smallest eigenvalue 3 - sqrt(3).
        let t = TridiagonalSystem::new(2, 3.0, 3.0, 3.0, 3.0).unwrap();
        assert!((t.smallest_eigenvalue() - (3.0 - 3f64.sqrt())).abs() < 1e-11);
    }

    #[test]
    fn diameter_five_corner_case() {
        let t = TridiagonalSystem::new(3, 3.0, 3.0, 5.0, 3.0).unwrap();
        assert!((t.smallest_eigenvalue() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn girth_five_corner_case() {
        // With the last diagonal entry d+1 = 4 the smallest eigenvalue is
        // exactly 2 (factorization (x-2)(x-5)); with 5 in that corner it
        // would be 4 - sqrt(3) instead.
        let t = TridiagonalSystem::new(2, 3.0, 2.0, 4.0, 3.0).unwrap();
        assert!((t.smallest_eigenvalue() - 2.0).abs() < 1e-11);
        let t5 = TridiagonalSystem::new(2, 3.0, 2.0, 5.0, 3.0).unwrap();
        assert!((t5.smallest_eigenvalue() - (4.0 - 3f64.sqrt())).abs() < 1e-11);
    }

    #[test]
    fn one_by_one_uses_last_corner() {
        let t = TridiagonalSystem::new(1, 3.0, 2.0, 4.0, 3.0).unwrap();
        assert_eq!(t.smallest_eigenvalue(), 4.0);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert_eq!(
            TridiagonalSystem::new(0, 3.0, 3.0, 3.0, 3.0),
            Err(TridiagonalError::EmptyMatrix)
        );
        assert_eq!(
            TridiagonalSystem::new(2, 3.0, 0.0, 3.0, 3.0),
            Err(TridiagonalError::NonPositiveB)
        );
        assert_eq!(
            TridiagonalSystem::new(2, 2.0, 2.0, 2.0, 2.0),
            Err(TridiagonalError::DegreeTooSmall)
        );
    }

    #[test]
    fn sturm_count_is_a_spectrum_counter() {
        let t = TridiagonalSystem::new(6, 4.0, 3.0, 7.0, 4.0).unwrap();
        let eigs = t.eigenvalues();
        let (diag, off) = t.symmetrized();
        for (i, &lambda) in eigs.iter().enumerate() {
            assert_eq!(sturm_count(&diag, &off, lambda - 1e-9), i);
            assert_eq!(sturm_count(&diag, &off, lambda + 1e-9), i + 1);
        }
    }
}
