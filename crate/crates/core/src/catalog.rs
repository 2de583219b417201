//! Persistent catalog of certified graphs: JSONL, one record per line,
//! append-friendly under a file lock.

use crate::bounds::{BoundConstraint, CertificationReport};
use crate::graph::{decode_graph6, encode_graph6, Graph};
use crate::iso::{automorphism_group_order, canonical_form, IsoError};
use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog file {0} does not exist")]
    Missing(PathBuf),
    #[error("catalog io: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog line {line} is corrupt: {source}")]
    Corrupt {
        line: usize,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Iso(#[from] IsoError),
}

/// Where a record came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Family { name: String, parameter: u64 },
    Search { config_digest: String },
    Imported { file: String },
}

/// One certified graph. `ac` and `bound` are recomputable from `graph6`
/// and `constraint`; `canonical` matches the canonical-form output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub graph6: String,
    pub n: usize,
    pub d: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub ac: f64,
    pub bound: f64,
    pub attained: bool,
    pub constraint: BoundConstraint,
    pub aut_order: u128,
    pub canonical: String,
    pub provenance: Provenance,
    pub timestamp: DateTime<Utc>,
}

/// Rounds to 12 significant digits; catalog values are stored at the
/// precision the certification tolerances are quoted at.
fn round_sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float parses")
}

impl CatalogRecord {
    pub fn build(
        graph: &Graph,
        report: &CertificationReport,
        provenance: Provenance,
    ) -> Result<Self, IsoError> {
        Ok(CatalogRecord {
            graph6: encode_graph6(graph),
            n: graph.vertex_count(),
            d: report.constraint.degree,
            girth: report.measured_girth,
            diameter: report.measured_diameter,
            ac: report.ac.map(round_sig12).unwrap_or(0.0),
            bound: round_sig12(report.bound.lambda),
            attained: report.attained,
            constraint: report.constraint,
            aut_order: automorphism_group_order(graph)?,
            canonical: canonical_form(graph)?.graph6,
            provenance,
            timestamp: Utc::now(),
        })
    }

    pub fn graph(&self) -> Result<Graph, crate::graph::Graph6Error> {
        decode_graph6(&self.graph6)
    }
}

/// Record filters; `None` fields match everything.
#[derive(Debug, Clone, Default)]
pub struct CatalogFilter {
    pub degree: Option<usize>,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub attained: Option<bool>,
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
}

impl CatalogFilter {
    pub fn matches(&self, r: &CatalogRecord) -> bool {
        self.degree.map_or(true, |d| r.d == d)
            && self.diameter.map_or(true, |v| r.diameter == Some(v))
            && self.girth.map_or(true, |v| r.girth == Some(v))
            && self.attained.map_or(true, |a| r.attained == a)
            && self.min_order.map_or(true, |n| r.n >= n)
            && self.max_order.map_or(true, |n| r.n <= n)
    }
}

/// A JSONL catalog file. One writer at a time; appends take an exclusive
/// lock and write whole lines, so a crashed run never leaves a torn record.
#[derive(Debug, Clone)]
pub struct Catalog {
    path: PathBuf,
}

impl Catalog {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Catalog { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, record: &CatalogRecord) -> Result<(), CatalogError> {
        let mut line = serde_json::to_string(record).expect("records serialize");
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.lock()?;
        let result = file.write_all(line.as_bytes()).and_then(|()| file.flush());
        let _ = file.unlock();
        result?;
        Ok(())
    }

    /// All records in file order.
    pub fn read_all(&self) -> Result<Vec<CatalogRecord>, CatalogError> {
        if !self.path.exists() {
            return Err(CatalogError::Missing(self.path.clone()));
        }
        let mut contents = String::new();
        std::fs::File::open(&self.path)?.read_to_string(&mut contents)?;
        let mut records = Vec::new();
        for (i, line) in contents.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record = serde_json::from_str(line)
                .map_err(|source| CatalogError::Corrupt { line: i + 1, source })?;
            records.push(record);
        }
        Ok(records)
    }

    /// Filtered records, stable (file) order.
    pub fn query(&self, filter: &CatalogFilter) -> Result<Vec<CatalogRecord>, CatalogError> {
        Ok(self
            .read_all()?
            .into_iter()
            .filter(|r| filter.matches(r))
            .collect())
    }
}
