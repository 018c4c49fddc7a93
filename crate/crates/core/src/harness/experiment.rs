//! Declarative experiments: a graph, a range of powers, an ordering
//! strategy, and the verdict expected at every power.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linquot::{
    duplication_order, expansion_order, find_lq_order, verify_linear_quotients, GeneratorOrdering,
    SearchOutcome, TieBreak, Witness,
};
use crate::orderings::{
    admissible_order, compatible_chain, efficient_ordering, guided_square_order,
};
use crate::power::DEFAULT_CAP;

use super::{power_of, resolve_graph, resolve_order, resolve_vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Strategy {
    /// Efficient orders from `base`, an order of `I^q_min`.
    Efficient { base: String },
    /// Compatible orders from the admissible edge order and `i2` (an order
    /// of `I^2`, found by guided search when absent).
    Compatible { i2: Option<String> },
    /// Duplication at `vertex` of the efficient orders from `base`, an
    /// order of `I(source)^q_min`. The experiment graph must be the
    /// duplicate `source^vertex`.
    Duplication {
        source: String,
        vertex: String,
        base: String,
    },
    /// Expansion at `vertex` of orders of `I^q` (efficient from `base`, or
    /// searched when absent).
    Expansion {
        vertex: String,
        base: Option<String>,
        b_order: Option<Vec<String>>,
        tie: TieBreak,
    },
    /// Backtracking search at each power.
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    /// Every power gets an order that verifies.
    Pass,
    /// Some power fails verification.
    Fail,
    /// The search proves that no order exists, at every power.
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentSpec {
    pub name: String,
    pub graph: String,
    pub q_min: usize,
    pub q_max: usize,
    pub strategy: Strategy,
    pub budget: u64,
    pub cap: u128,
    pub expect: Expect,
}

impl ExperimentSpec {
    pub fn new(
        name: &str,
        graph: &str,
        q: std::ops::RangeInclusive<usize>,
        strategy: Strategy,
        expect: Expect,
    ) -> Self {
        ExperimentSpec {
            name: name.into(),
            graph: graph.into(),
            q_min: *q.start(),
            q_max: *q.end(),
            strategy,
            budget: 1_000_000,
            cap: DEFAULT_CAP,
            expect,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelVerdict {
    Pass,
    Fail,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentLevel {
    pub q: usize,
    pub generators: usize,
    pub verdict: LevelVerdict,
    pub witness: Option<Witness>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub graph: String,
    pub strategy: Strategy,
    pub expect: Expect,
    pub levels: Vec<ExperimentLevel>,
    pub matches_expectation: bool,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn verified_level(q: usize, o: &GeneratorOrdering, start: Instant) -> ExperimentLevel {
    let lq = verify_linear_quotients(o);
    ExperimentLevel {
        q,
        generators: o.len(),
        verdict: if lq.pass {
            LevelVerdict::Pass
        } else {
            LevelVerdict::Fail
        },
        witness: lq.witness,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn searched(
    g: &Graph,
    q: usize,
    budget: u64,
    cap: u128,
) -> Result<(Option<GeneratorOrdering>, LevelVerdict)> {
    let found = find_lq_order(&power_of(g, q, cap)?, budget);
    Ok(match found.outcome {
        SearchOutcome::Found(o) => (Some(o), LevelVerdict::Pass),
        SearchOutcome::NoOrder => (None, LevelVerdict::No),
        SearchOutcome::Unknown => (None, LevelVerdict::Unknown),
    })
}

/// Orders produced by the strategy, one per power in the range; `Err`
/// entries carry the verdict of a failed search.
fn produce(
    spec: &ExperimentSpec,
    g: &Graph,
) -> Result<Vec<std::result::Result<GeneratorOrdering, LevelVerdict>>> {
    let qs = spec.q_min..=spec.q_max;
    let efficient_from = |graph: &Graph, base: &str| -> Result<Vec<GeneratorOrdering>> {
        let o = resolve_order(base, graph, spec.q_min, spec.cap)?;
        qs.clone().map(|q| efficient_ordering(&o, q)).collect()
    };
    match &spec.strategy {
        Strategy::Efficient { base } => Ok(efficient_from(g, base)?.into_iter().map(Ok).collect()),
        Strategy::Compatible { i2 } => {
            if spec.q_min < 2 {
                return Err(Error::TargetBelowBase {
                    target: spec.q_min,
                    base: 2,
                });
            }
            let eo = admissible_order(g);
            let square = match i2 {
                Some(path) => resolve_order(path, g, 2, spec.cap)?,
                None => match guided_square_order(g, &eo, spec.budget, spec.cap)?.outcome {
                    SearchOutcome::Found(o) => o,
                    SearchOutcome::NoOrder => {
                        return Ok(qs.map(|_| Err(LevelVerdict::No)).collect())
                    }
                    SearchOutcome::Unknown => {
                        return Ok(qs.map(|_| Err(LevelVerdict::Unknown)).collect())
                    }
                },
            };
            let chain = compatible_chain(g, &eo, &square, spec.q_max)?;
            Ok(chain.into_iter().skip(spec.q_min - 2).map(Ok).collect())
        }
        Strategy::Duplication {
            source,
            vertex,
            base,
        } => {
            let src = resolve_graph(source)?;
            let x = resolve_vertex(&src, vertex)?;
            if !src.duplicate_vertex(x)?.is_isomorphic(g)? {
                return Err(Error::BaseMismatch);
            }
            efficient_from(&src, base)?
                .iter()
                .map(|o| duplication_order(o, x).map(Ok))
                .collect()
        }
        Strategy::Expansion {
            vertex,
            base,
            b_order,
            tie,
        } => {
            let x = resolve_vertex(g, vertex)?;
            let b_order = b_order
                .as_ref()
                .map(|names| {
                    names
                        .iter()
                        .map(|v| resolve_vertex(g, v))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            let sources: Vec<std::result::Result<GeneratorOrdering, LevelVerdict>> = match base {
                Some(base) => efficient_from(g, base)?.into_iter().map(Ok).collect(),
                None => qs
                    .map(|q| searched(g, q, spec.budget, spec.cap).map(|(o, v)| o.ok_or(v)))
                    .collect::<Result<_>>()?,
            };
            sources
                .into_iter()
                .map(|src| match src {
                    Ok(o) => expansion_order(g, &o, x, b_order.as_deref(), *tie).map(Ok),
                    Err(v) => Ok(Err(v)),
                })
                .collect()
        }
        Strategy::Search => qs
            .map(|q| searched(g, q, spec.budget, spec.cap).map(|(o, v)| o.ok_or(v)))
            .collect(),
    }
}

/// Runs the strategy over the power range, verifies every order it
/// produces, and compares with the expected verdict.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    if spec.q_min == 0 || spec.q_min > spec.q_max {
        return Err(Error::TargetBelowBase {
            target: spec.q_max,
            base: spec.q_min,
        });
    }
    let g = resolve_graph(&spec.graph)?;
    let start = Instant::now();
    let orders = produce(spec, &g)?;
    let levels: Vec<ExperimentLevel> = orders
        .iter()
        .zip(spec.q_min..=spec.q_max)
        .map(|(o, q)| match o {
            Ok(o) => verified_level(q, o, start),
            Err(v) => ExperimentLevel {
                q,
                generators: power_of(&g, q, spec.cap).map(|pg| pg.len()).unwrap_or(0),
                verdict: v.clone(),
                witness: None,
                elapsed_ms: start.elapsed().as_millis(),
            },
        })
        .collect();
    let matches_expectation = match spec.expect {
        Expect::Pass => levels.iter().all(|l| l.verdict == LevelVerdict::Pass),
        Expect::Fail => levels.iter().any(|l| l.verdict == LevelVerdict::Fail),
        Expect::No => levels.iter().all(|l| l.verdict == LevelVerdict::No),
    };
    Ok(ExperimentReport {
        name: spec.name.clone(),
        graph: spec.graph.clone(),
        strategy: spec.strategy.clone(),
        expect: spec.expect,
        levels,
        matches_expectation,
    })
}
