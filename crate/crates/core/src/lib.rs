//! Attainable upper bounds on the algebraic connectivity of d-regular
//! graphs in terms of diameter or girth, constructions of the families that
//! attain them, search for bound-attaining graphs, and certification of the
//! results.
//!
//! Modules:
//! - [`graph`]: simple graphs, metrics (girth/diameter/bipartiteness), graph6.
//! - [`spectra`]: dense symmetric eigensolver and the tridiagonal machinery.
//! - [`bounds`]: the attainable bound evaluator, order formulas, certification.
//! - [`families`]: finite fields and the explicit maximal families.
//! - [`search`]: stochastic edge-addition search, double-tree completion,
//!   and exhaustive regular-graph enumeration.
//! - [`iso`]: canonical forms, isomorphism, automorphism group order.
//! - [`catalog`]: persistent JSONL records of certified graphs.

pub mod bounds;
pub mod catalog;
pub mod families;
pub mod graph;
pub mod iso;
pub mod search;
pub mod spectra;
pub mod tolerances;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{decode_graph6, encode_graph6, Graph, GraphMetrics, Infinite};
