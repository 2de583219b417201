//! Numerical tolerances used across the crate.
//!
//! These are pinned once here so that certification, cross-checks and tests
//! all agree on what "equal" means at each precision tier.

/// Accuracy guaranteed by the dense symmetric eigensolver, relative to the
/// matrix norm. The solver itself does better (~1e-13 on the analytic test
/// matrices); downstream comparisons rely on this value.
pub const EIGENVALUE_ACCURACY: f64 = 1e-9;

/// Absolute bisection tolerance for theta roots of the bound equations.
pub const THETA_TOL: f64 = 1e-12;

/// Absolute bisection tolerance for Sturm eigenvalue bisection.
pub const STURM_TOL: f64 = 1e-12;

/// Required agreement between the tridiagonal Sturm eigenvalue and the
/// tan-equation root solve when both compute the same bound.
pub const METHOD_CROSS_CHECK: f64 = 1e-9;

/// Tolerance for grouping nearby eigenvalues into a multiplicity class.
pub const MULTIPLICITY_GROUPING: f64 = 1e-7;

/// Slack allowed when deciding that a measured AC attains its upper bound.
pub const ATTAINMENT_TOL: f64 = 1e-7;

/// Guard against tiny pivots in the Sturm LDL^T recurrence.
pub const STURM_PIVOT_GUARD: f64 = 1e-300;

/// Eigenvalues are rounded to this grid before hashing into a fingerprint.
pub const SPECTRUM_HASH_GRID: f64 = 1e-6;
