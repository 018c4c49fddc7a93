//! Experiments, small-graph scans, premise checks for the compatible
//! orders, and the reproduction cases behind `repro`.

pub mod experiment;
pub mod oracle;
pub mod repro;
pub mod scan;
pub mod thm64;

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{Graph, Vertex};
use crate::linquot::{GeneratorOrdering, Provenance, SearchOutcome, SearchResult};
use crate::power::{EdgeIdeal, PowerGenerators};

pub use experiment::{run_experiment, Expect, ExperimentReport, ExperimentSpec, Strategy};
pub use repro::{repro, ReproReport, CASES};
pub use scan::{graph_classes, scan_small_graphs, ScanOptions, ScanResult};
pub use thm64::{check_theorem64_premises, Thm64Report};

/// Environment variable naming a directory of graph files.
pub const FIXTURES_ENV: &str = "LINQUO_FIXTURES";

fn fixture_path(dir: &Path, name: &str) -> Option<PathBuf> {
    [
        name.to_string(),
        format!("{name}.txt"),
        format!("{name}.graph"),
    ]
    .into_iter()
    .map(|f| dir.join(f))
    .find(|p| p.is_file())
}

/// Resolves a graph argument: an existing file, then a file in the
/// `LINQUO_FIXTURES` directory, then a built-in fixture name.
pub fn resolve_graph(spec: &str) -> Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        return Graph::parse(&std::fs::read_to_string(path)?);
    }
    if let Some(dir) = std::env::var_os(FIXTURES_ENV) {
        if let Some(p) = fixture_path(Path::new(&dir), spec) {
            return Graph::parse(&std::fs::read_to_string(p)?);
        }
    }
    fixtures::named_graph(spec)
}

/// A vertex given by label or by index.
pub fn resolve_vertex(g: &Graph, name: &str) -> Result<Vertex> {
    if let Some(v) = g.labels().iter().position(|l| l == name) {
        return Ok(v);
    }
    match name.parse::<usize>() {
        Ok(v) if v < g.n() => Ok(v),
        Ok(v) => Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }),
        Err(_) => Err(Error::UnknownFixture(name.to_string())),
    }
}

pub fn power_of(g: &Graph, q: usize, cap: u128) -> Result<Arc<PowerGenerators>> {
    Ok(Arc::new(EdgeIdeal::new(g.clone()).power_with_cap(q, cap)?))
}

/// Resolves an order argument for `I(g)^q`: `builtin:<name>` or an order
/// file. Built-in orders must belong to the same graph.
pub fn resolve_order(spec: &str, g: &Graph, q: usize, cap: u128) -> Result<GeneratorOrdering> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let (graph, order) = fixtures::named_order(name)?;
        if graph != *g {
            return Err(Error::BaseMismatch);
        }
        if order.base().q() != q {
            return Err(Error::WrongPower {
                expected: q,
                found: order.base().q(),
            });
        }
        return Ok(order);
    }
    let text = std::fs::read_to_string(spec)?;
    GeneratorOrdering::parse(power_of(g, q, cap)?, &text, Provenance::Given)
}

/// Serializable form of a search verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "verdict")]
pub enum Verdict {
    Yes {
        order: Vec<String>,
        reverified: bool,
    },
    No,
    Unknown {
        budget: u64,
    },
}

impl Verdict {
    pub fn from_search(result: &SearchResult, budget: u64) -> Self {
        match &result.outcome {
            SearchOutcome::Found(o) => Verdict::Yes {
                order: o.rendered(),
                reverified: crate::linquot::verify_linear_quotients(o).pass,
            },
            SearchOutcome::NoOrder => Verdict::No,
            SearchOutcome::Unknown => Verdict::Unknown { budget },
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes { .. } => "yes",
            Verdict::No => "no",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_resolution() {
        assert_eq!(resolve_graph("c5").unwrap(), fixtures::c5());
        let dir = std::env::temp_dir().join(format!("linquo-resolve-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("tri.txt");
        std::fs::write(&file, "3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(
            resolve_graph(file.to_str().unwrap()).unwrap().edge_count(),
            3
        );
        std::fs::remove_dir_all(&dir).unwrap();
        assert!(resolve_graph("no-such-graph").is_err());
    }

    #[test]
    fn vertex_resolution() {
        let g = fixtures::fig2();
        assert_eq!(resolve_vertex(&g, "x").unwrap(), 4);
        assert_eq!(resolve_vertex(&g, "2").unwrap(), 2);
        assert!(resolve_vertex(&g, "9").is_err());
        assert!(resolve_vertex(&g, "w").is_err());
    }

    #[test]
    fn order_resolution() {
        let c5 = fixtures::c5();
        assert_eq!(
            resolve_order("builtin:istanbul", &c5, 2, 1000)
                .unwrap()
                .len(),
            15
        );
        assert_eq!(
            resolve_order("builtin:fig2", &c5, 2, 1000).unwrap_err(),
            Error::BaseMismatch
        );
        assert!(matches!(
            resolve_order("builtin:istanbul", &c5, 3, 1000),
            Err(Error::WrongPower { .. })
        ));
    }
}
