//! Attainable upper bounds on algebraic connectivity for d-regular graphs
//! with a given diameter or girth, the exact/minimum order formulas for
//! diameter-maximal graphs, the Moore bound, and attainment certification.
//!
//! Every bound has the form `lambda = d - 2*sqrt(d-1)*cos(theta)` where
//! `theta` lies in `(pi/(2K), pi/K]`. The primary numerical route is Sturm
//! bisection on a symmetrized corner-parameterized tridiagonal matrix; a
//! pole-free root solve of the matching tangent equation cross-checks every
//! result to 1e-9. Even girth needs no solve: `theta = pi/K` exactly.

pub mod table;

use crate::graph::{Graph, Infinite};
use crate::spectra::{algebraic_connectivity, SpectraError, TridiagonalSystem};
use crate::tolerances::{ATTAINMENT_TOL, METHOD_CROSS_CHECK, THETA_TOL};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("diameter must be at least 1, got {0}")]
    DiameterTooSmall(usize),
    #[error("girth must be at least 3, got {0}")]
    GirthTooSmall(usize),
    #[error("tridiagonal and root-solve methods disagree: {sturm} vs {root_solve}")]
    MethodDisagreement { sturm: f64, root_solve: f64 },
    #[error("no sign change found for the theta equation (d={d}, K={k})")]
    NoBracket { d: usize, k: usize },
}

/// The four bound regimes of the theory, each parameterized by the level
/// count K of the underlying Moore tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstraintKind {
    /// D = 2K
    EvenDiameter,
    /// D = 2K - 1
    OddDiameter,
    /// g = 2K
    EvenGirth,
    /// g = 2K + 1
    OddGirth,
}

impl ConstraintKind {
    pub fn is_diameter(self) -> bool {
        matches!(self, ConstraintKind::EvenDiameter | ConstraintKind::OddDiameter)
    }
}

/// A (degree, diameter-or-girth) bound query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundConstraint {
    pub kind: ConstraintKind,
    /// Level count K (>= 1).
    pub levels: usize,
    /// Degree d (>= 3).
    pub degree: usize,
}

impl BoundConstraint {
    pub fn diameter(degree: usize, diameter: usize) -> Result<Self, BoundError> {
        if degree < 3 {
            return Err(BoundError::DegreeTooSmall(degree));
        }
        if diameter < 1 {
            return Err(BoundError::DiameterTooSmall(diameter));
        }
        Ok(if diameter % 2 == 0 {
            BoundConstraint {
                kind: ConstraintKind::EvenDiameter,
                levels: diameter / 2,
                degree,
            }
        } else {
            BoundConstraint {
                kind: ConstraintKind::OddDiameter,
                levels: (diameter + 1) / 2,
                degree,
            }
        })
    }

    pub fn girth(degree: usize, girth: usize) -> Result<Self, BoundError> {
        if degree < 3 {
            return Err(BoundError::DegreeTooSmall(degree));
        }
        if girth < 3 {
            return Err(BoundError::GirthTooSmall(girth));
        }
        Ok(if girth % 2 == 0 {
            BoundConstraint {
                kind: ConstraintKind::EvenGirth,
                levels: girth / 2,
                degree,
            }
        } else {
            BoundConstraint {
                kind: ConstraintKind::OddGirth,
                levels: (girth - 1) / 2,
                degree,
            }
        })
    }

    /// The constrained quantity (D or g) reconstructed from kind and K.
    pub fn constraint_value(&self) -> usize {
        match self.kind {
            ConstraintKind::EvenDiameter => 2 * self.levels,
            ConstraintKind::OddDiameter => 2 * self.levels - 1,
            ConstraintKind::EvenGirth => 2 * self.levels,
            ConstraintKind::OddGirth => 2 * self.levels + 1,
        }
    }
}

impl fmt::Display for BoundConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.kind.is_diameter() { "D" } else { "g" };
        write!(f, "d={} {}={}", self.degree, label, self.constraint_value())
    }
}

/// How a bound value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMethod {
    /// Sturm bisection on the symmetrized tridiagonal matrix (primary),
    /// cross-checked against the tangent-equation root.
    Tridiagonal,
    /// Bisection root of the tangent equation.
    RootSolve,
    /// An exact closed form (theta = pi/K, or the D <= 2 special cases).
    ClosedForm,
}

/// A computed upper bound: `lambda = d - 2 sqrt(d-1) cos(theta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub theta: f64,
    pub lambda: f64,
    pub method: BoundMethod,
}

fn lambda_of_theta(d: usize, theta: f64) -> f64 {
    d as f64 - 2.0 * ((d - 1) as f64).sqrt() * theta.cos()
}

fn theta_of_lambda(d: usize, lambda: f64) -> f64 {
    let cos = (d as f64 - lambda) / (2.0 * ((d - 1) as f64).sqrt());
    cos.clamp(-1.0, 1.0).acos()
}

/// The corner-parameterized tridiagonal matrix whose smallest eigenvalue is
/// the bound, one case per constraint kind.
pub fn corner_case_matrix(c: &BoundConstraint) -> TridiagonalSystem {
    let d = c.degree as f64;
    let (a, b, corner) = match c.kind {
        ConstraintKind::EvenDiameter => (d, d, d),
        ConstraintKind::OddDiameter => (d, d, 2.0 * d - 1.0),
        ConstraintKind::EvenGirth => (d + 1.0, d - 1.0, 2.0 * d - 1.0),
        ConstraintKind::OddGirth => (d, d - 1.0, d + 1.0),
    };
    TridiagonalSystem::new(c.levels, a, b, corner, d).expect("valid corner case")
}

/// Residual of the pole-free form of the theta equation for each kind.
/// Multiplying the tangent equations through by the cosine denominators
/// yields a function that is continuous on the bracket and changes sign at
/// the bound's theta.
fn theta_equation(kind: ConstraintKind, d: usize, k: usize, theta: f64) -> f64 {
    let df = d as f64;
    let kf = k as f64;
    let (sk, ck) = (kf * theta).sin_cos();
    let (s1, c1) = theta.sin_cos();
    let root = (df - 1.0).sqrt();
    match kind {
        ConstraintKind::EvenDiameter => (df - 2.0) * sk * c1 + df * ck * s1,
        ConstraintKind::OddDiameter => {
            sk * (root * (2.0 * c1 * c1 - df) + (2.0 - df) * c1) - ck * s1 * (df + 2.0 * root * c1)
        }
        ConstraintKind::EvenGirth => sk,
        ConstraintKind::OddGirth => sk * (1.0 / root + c1) + ck * s1,
    }
}

/// Smallest root of the theta equation in `(pi/(2K), pi/K]`, by grid scan
/// for the first sign change followed by bisection to 1e-12.
fn solve_theta(kind: ConstraintKind, d: usize, k: usize) -> Result<f64, BoundError> {
    let lo = PI / (2.0 * k as f64);
    let hi = PI / k as f64;
    const GRID: usize = 4096;
    let step = (hi - lo) / GRID as f64;
    let mut prev_theta = lo + step * 1e-6;
    let mut prev_value = theta_equation(kind, d, k, prev_theta);
    for i in 1..=GRID {
        let theta = lo + step * i as f64;
        let value = theta_equation(kind, d, k, theta);
        if prev_value == 0.0 {
            return Ok(prev_theta);
        }
        if prev_value * value <= 0.0 {
            let (mut a, mut b) = (prev_theta, theta);
            let mut fa = prev_value;
            while b - a > THETA_TOL {
                let mid = 0.5 * (a + b);
                let fm = theta_equation(kind, d, k, mid);
                if fa * fm <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            return Ok(0.5 * (a + b));
        }
        prev_theta = theta;
        prev_value = value;
    }
    Err(BoundError::NoBracket { d, k })
}

/// Evaluates the attainable upper bound for the constraint.
///
/// `D = 1` and `D = 2` sit below the tree machinery and map to the complete
/// and complete-bipartite closed forms. Even girth uses `theta = pi/K`
/// exactly. Everything else runs both numerical routes and insists they
/// agree to 1e-9.
pub fn ac_upper_bound(c: &BoundConstraint) -> Result<BoundResult, BoundError> {
    if c.degree < 3 {
        return Err(BoundError::DegreeTooSmall(c.degree));
    }
    let d = c.degree;
    match (c.kind, c.levels) {
        (ConstraintKind::OddDiameter, 1) => {
            // D = 1: complete graph K_{d+1}, AC = d + 1.
            let lambda = d as f64 + 1.0;
            return Ok(BoundResult {
                theta: theta_of_lambda(d, lambda),
                lambda,
                method: BoundMethod::ClosedForm,
            });
        }
        (ConstraintKind::EvenDiameter, 1) => {
            // D = 2: complete bipartite K_{d,d}, AC = d.
            return Ok(BoundResult {
                theta: PI / 2.0,
                lambda: d as f64,
                method: BoundMethod::ClosedForm,
            });
        }
        _ => {}
    }

    let sturm = corner_case_matrix(c).smallest_eigenvalue();
    if c.kind == ConstraintKind::EvenGirth {
        let theta = PI / c.levels as f64;
        let lambda = lambda_of_theta(d, theta);
        if (lambda - sturm).abs() > METHOD_CROSS_CHECK {
            return Err(BoundError::MethodDisagreement { sturm, root_solve: lambda });
        }
        return Ok(BoundResult {
            theta,
            lambda,
            method: BoundMethod::ClosedForm,
        });
    }

    let theta_root = solve_theta(c.kind, d, c.levels)?;
    let root_solve = lambda_of_theta(d, theta_root);
    if (root_solve - sturm).abs() > METHOD_CROSS_CHECK {
        return Err(BoundError::MethodDisagreement { sturm, root_solve });
    }
    Ok(BoundResult {
        theta: theta_of_lambda(d, sturm),
        lambda: sturm,
        method: BoundMethod::Tridiagonal,
    })
}

/// Closed forms for D <= 6 and g <= 6; `None` outside that range.
pub fn closed_form_bound(c: &BoundConstraint) -> Option<f64> {
    let d = c.degree as f64;
    if c.kind.is_diameter() {
        match c.constraint_value() {
            1 => Some(d + 1.0),
            2 => Some(d),
            3 => Some(d - 1.0),
            4 => Some(d - d.sqrt()),
            5 => Some(d - 0.5 - (d - 0.75).sqrt()),
            6 => Some(d - (2.0 * d - 1.0).sqrt()),
            _ => None,
        }
    } else {
        match c.constraint_value() {
            3 => Some(d + 1.0),
            4 => Some(d),
            5 => Some(d + 0.5 - (d - 0.75).sqrt()),
            6 => Some(d - (d - 1.0).sqrt()),
            _ => None,
        }
    }
}

/// Exact order of any maximal graph with odd diameter D = 2K - 1:
/// two Bethe trees with their leaves joined, n = 2(d(d-1)^(K-1) - 2)/(d-2).
pub fn odd_diameter_exact_order(d: usize, k: usize) -> usize {
    assert!(d >= 3 && k >= 1);
    let n = 2 * ((d as u128) * (d as u128 - 1).pow(k as u32 - 1) - 2) / (d as u128 - 2);
    usize::try_from(n).expect("order fits usize at desk scale")
}

/// Minimum order of a maximal graph with even diameter D = 2K:
/// n >= 4((d-1)^K - 1)/(d-2).
pub fn even_diameter_min_order(d: usize, k: usize) -> usize {
    assert!(d >= 3 && k >= 1);
    let n = 4 * ((d as u128 - 1).pow(k as u32) - 1) / (d as u128 - 2);
    usize::try_from(n).expect("order fits usize at desk scale")
}

/// The Moore bound on vertex count for degree d and girth g.
pub fn moore_bound(d: usize, g: usize) -> usize {
    assert!(d >= 3 && g >= 3);
    let k = g / 2;
    let sum: u128 = (0..k).map(|j| (d as u128 - 1).pow(j as u32)).sum();
    let n = if g % 2 == 1 {
        1 + d as u128 * sum
    } else {
        2 * sum
    };
    usize::try_from(n).expect("order fits usize at desk scale")
}

/// Structural necessities implied by the order theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderRequirement {
    Exact(usize),
    AtLeast(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StructuralChecks {
    /// Odd-diameter maximal graphs must be bipartite.
    pub bipartite_required: bool,
    pub is_bipartite: bool,
    pub required_order: OrderRequirement,
    pub order_ok: bool,
}

/// Certification of a graph against a bound constraint. Failures are
/// fields, not errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub constraint: BoundConstraint,
    pub n: usize,
    pub regular_with_degree: bool,
    pub connected: bool,
    pub measured_girth: Option<usize>,
    pub measured_diameter: Option<usize>,
    pub constraint_met: bool,
    /// None when the graph is disconnected.
    pub ac: Option<f64>,
    pub bound: BoundResult,
    pub attained: bool,
    pub structure: StructuralChecks,
}

/// Checks whether `g` attains the bound for `c`: regular of the right
/// degree, constraint satisfied exactly, and AC within 1e-7 of the bound.
pub fn certify_maximal(g: &Graph, c: &BoundConstraint) -> Result<CertificationReport, BoundError> {
    let bound = ac_upper_bound(c)?;
    let regular_with_degree = g.regular_degree() == Some(c.degree);
    let connected = g.is_connected();
    let girth = g.girth();
    let diameter = g.diameter();
    let measured = if c.kind.is_diameter() { diameter } else { girth };
    let constraint_met = measured == Infinite::Finite(c.constraint_value());
    let ac = match algebraic_connectivity(g) {
        Ok(value) => Some(value),
        Err(SpectraError::Disconnected) => None,
        Err(e) => panic!("dense eigensolver failed: {e}"),
    };

    let required_order = match c.kind {
        ConstraintKind::OddDiameter => {
            OrderRequirement::Exact(odd_diameter_exact_order(c.degree, c.levels))
        }
        ConstraintKind::EvenDiameter => {
            OrderRequirement::AtLeast(even_diameter_min_order(c.degree, c.levels))
        }
        // Girth-maximal graphs must be Moore graphs.
        ConstraintKind::EvenGirth | ConstraintKind::OddGirth => {
            OrderRequirement::Exact(moore_bound(c.degree, c.constraint_value()))
        }
    };
    let order_ok = match required_order {
        OrderRequirement::Exact(n) => g.vertex_count() == n,
        OrderRequirement::AtLeast(n) => g.vertex_count() >= n,
    };
    let structure = StructuralChecks {
        bipartite_required: c.kind == ConstraintKind::OddDiameter,
        is_bipartite: g.is_bipartite(),
        required_order,
        order_ok,
    };

    let attained = regular_with_degree
        && connected
        && constraint_met
        && ac.is_some_and(|value| value >= bound.lambda - ATTAINMENT_TOL);

    Ok(CertificationReport {
        constraint: *c,
        n: g.vertex_count(),
        regular_with_degree,
        connected,
        measured_girth: girth.finite(),
        measured_diameter: diameter.finite(),
        constraint_met,
        ac,
        bound,
        attained,
        structure,
    })
}
