//! Exhaustive scans of small graphs: classification and a search for
//! linear-quotients orders of the first few powers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::linquot::{find_lq_order, greedy_lq_order};
use crate::power::DEFAULT_CAP;

use super::{power_of, Verdict};

/// Largest vertex count a scan accepts.
pub const SCAN_MAX_VERTICES: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub n: usize,
    /// Powers `1..=q_max` are searched; 0 classifies only.
    pub q_max: usize,
    pub budget: u64,
    /// One graph per isomorphism class instead of every labeled graph.
    pub canonical: bool,
    pub cap: u128,
}

impl ScanOptions {
    pub fn new(n: usize, q_max: usize, budget: u64) -> Self {
        ScanOptions {
            n,
            q_max,
            budget,
            canonical: true,
            cap: DEFAULT_CAP,
        }
    }

    pub fn labeled(mut self) -> Self {
        self.canonical = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerVerdict {
    pub q: usize,
    pub generators: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Whether extension without backtracking also found an order.
    pub greedy: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    /// Adjacency bits of the scanned graph, first pair most significant.
    pub code: u64,
    pub edges: Vec<(Vertex, Vertex)>,
    pub gapfree: bool,
    pub cochordal: bool,
    pub cdcc: bool,
    pub powers: Vec<PowerVerdict>,
}

impl ScanResult {
    pub fn any_yes(&self) -> bool {
        self.powers.iter().any(|p| p.verdict.is_yes())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > SCAN_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: SCAN_MAX_VERTICES,
        });
    }
    Ok(())
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical code. Classes on `n` vertices are grown
/// from those on `n - 1` by adding a vertex with every possible
/// neighborhood.
pub fn graph_classes(n: usize) -> Result<Vec<Graph>> {
    check_n(n)?;
    let mut classes = vec![Graph::empty(0)?];
    for k in 1..=n {
        let codes: BTreeSet<u64> = classes
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..1 << (k - 1)).map(move |nbrs| {
                    let mut edges = g.edges().to_vec();
                    edges.extend(
                        (0..k - 1)
                            .filter(|&v| nbrs >> v & 1 == 1)
                            .map(|v| (v, k - 1)),
                    );
                    Graph::new(k, edges).and_then(|h| h.canonical_code())
                })
            })
            .collect::<Result<_>>()?;
        classes = codes
            .into_iter()
            .map(|c| from_code(k, c))
            .collect::<Result<_>>()?;
    }
    Ok(classes)
}

/// Inverse of [`Graph::pair_code`].
pub fn from_code(n: usize, code: u64) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let reversed = (0..pairs)
        .filter(|&i| code >> (pairs - 1 - i) & 1 == 1)
        .fold(0u64, |acc, i| acc | 1 << i);
    Graph::from_pair_bits(n, reversed)
}

/// Every labeled graph on `n` vertices, in pair-code order.
pub fn labeled_graphs(n: usize) -> Result<impl ParallelIterator<Item = Graph>> {
    check_n(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs)
        .into_par_iter()
        .map(move |code| from_code(n, code).expect("codes below 2^pairs are valid")))
}

/// Classifies one graph and searches orders of `I^1 .. I^q_max`.
pub fn scan_graph(g: &Graph, q_max: usize, budget: u64, cap: u128) -> Result<ScanResult> {
    let mut powers = Vec::with_capacity(q_max);
    for q in 1..=q_max {
        let pg = match power_of(g, q, cap) {
            Ok(pg) => pg,
            Err(Error::CapExceeded { .. }) => {
                powers.push(PowerVerdict {
                    q,
                    generators: 0,
                    verdict: Verdict::Unknown { budget },
                    greedy: false,
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        let result = find_lq_order(&pg, budget);
        let verdict = Verdict::from_search(&result, budget);
        let greedy = verdict.is_yes() && greedy_lq_order(&pg).outcome.order().is_some();
        powers.push(PowerVerdict {
            q,
            generators: pg.len(),
            verdict,
            greedy,
        });
    }
    Ok(ScanResult {
        code: g.pair_code(),
        edges: g.edges().to_vec(),
        gapfree: g.is_gapfree(),
        cochordal: g.is_cochordal(),
        cdcc: g.is_cdcc(),
        powers,
    })
}

/// Scans all graphs on `opts.n` vertices (one per isomorphism class when
/// `opts.canonical`), in parallel. The result is sorted by code, so it does
/// not depend on scheduling.
pub fn scan_small_graphs(opts: &ScanOptions) -> Result<Vec<ScanResult>> {
    let scan = |g: Graph| scan_graph(&g, opts.q_max, opts.budget, opts.cap);
    let mut results: Vec<ScanResult> = if opts.canonical {
        graph_classes(opts.n)?
            .into_par_iter()
            .map(scan)
            .collect::<Result<_>>()?
    } else {
        labeled_graphs(opts.n)?.map(scan).collect::<Result<_>>()?
    };
    results.sort_by_key(|r| r.code);
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| graph_classes(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn code_round_trip() {
        for code in 0..64 {
            assert_eq!(from_code(4, code).unwrap().pair_code(), code);
        }
    }

    #[test]
    fn labeled_scan_of_four_vertices() {
        let results = scan_small_graphs(&ScanOptions::new(4, 2, 100_000).labeled()).unwrap();
        assert_eq!(results.len(), 64);
        // The three perfect matchings of K4 are the only non-gapfree graphs.
        assert_eq!(results.iter().filter(|r| !r.gapfree).count(), 3);
        for r in &results {
            assert!(!r.cdcc);
            if r.any_yes() {
                assert!(r.gapfree, "{:?}", r.edges);
            }
            for p in &r.powers {
                assert!(!p.greedy || p.verdict.is_yes());
            }
            if r.cochordal && !r.edges.is_empty() {
                assert!(r.powers.iter().all(|p| p.verdict.is_yes()), "{:?}", r.edges);
            }
        }
    }

    #[test]
    fn too_many_vertices() {
        assert!(graph_classes(8).is_err());
        assert!(scan_small_graphs(&ScanOptions::new(8, 1, 10)).is_err());
    }
}
