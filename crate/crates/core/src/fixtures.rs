//! The named graphs and generator orders used throughout the examples.
//!
//! Vertex names follow the usual drawings: the pentagon is `a b c d e`, the
//! pentagon-plus-one-vertex graphs use `a b p q x z`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linquot::{find_lq_order_near, GeneratorOrdering, Provenance};
use crate::monomial::Monomial;
use crate::power::{EdgeIdeal, PowerGenerators};

fn labeled(labels: &str, edges: &[(usize, usize)]) -> Graph {
    let labels: Vec<String> = labels.split_whitespace().map(String::from).collect();
    Graph::new(labels.len(), edges.iter().copied())
        .expect("fixture graphs are simple")
        .with_labels(labels)
}

/// The pentagon with `e1 = ab, e2 = bc, e3 = cd, e4 = de, e5 = ea`.
pub fn c5() -> Graph {
    labeled("a b c d e", &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

/// Two disjoint edges `ab`, `cd`.
pub fn two_k2() -> Graph {
    labeled("a b c d", &[(0, 1), (2, 3)])
}

/// The path `a - x - b`.
pub fn p3() -> Graph {
    labeled("a x b", &[(0, 1), (1, 2)])
}

const A: usize = 0;
const B: usize = 1;
const P: usize = 2;
const Q: usize = 3;
const X: usize = 4;
const Z: usize = 5;

/// Pentagon `a b q z p` with a center `x` joined to `a`, `b`, `z`:
/// `e1 = ab, e2 = ax, e3 = bx, e4 = ap, e5 = bq, e6 = pz, e7 = xz, e8 = qz`.
pub fn fig2() -> Graph {
    labeled(
        "a b p q x z",
        &[
            (A, B),
            (A, X),
            (B, X),
            (A, P),
            (B, Q),
            (P, Z),
            (X, Z),
            (Q, Z),
        ],
    )
}

/// Pentagon `a b q z p` with a center `x` joined to `a`, `b`, `p`, `q`:
/// `e1 = ab, e2 = ap, e3 = ax, e4 = bx, e5 = bq, e6 = xp, e7 = xq, e8 = pz,
/// e9 = qz`.
pub fn fig4() -> Graph {
    labeled(
        "a b p q x z",
        &[
            (A, B),
            (A, P),
            (A, X),
            (B, X),
            (B, Q),
            (X, P),
            (X, Q),
            (P, Z),
            (Q, Z),
        ],
    )
}

/// [`fig4`] with `z` duplicated; the new vertex `z'` is adjacent to `p`
/// and `q`.
pub fn gamma7() -> Graph {
    fig4().duplicate_vertex(Z).expect("z is a vertex of fig4")
}

/// `(C5, K_n)`: [`fig2`] with the center replaced by a clique `x1 .. xn`,
/// built by expanding the center `n - 1` times.
pub fn c5_kn(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::UnknownFixture("c5k0".into()));
    }
    let mut g = fig2();
    for _ in 1..n {
        g = g.expand_vertex(X)?;
    }
    let mut labels = g.labels().to_vec();
    labels[X] = "x1".into();
    for (i, label) in labels.iter_mut().skip(6).enumerate() {
        *label = format!("x{}", i + 2);
    }
    Ok(g.with_labels(labels))
}

/// Looks up a built-in graph: `c5`, `fig2`, `fig4`, `gamma7`, `2k2`, `p3`,
/// or `c5k<n>`.
pub fn named_graph(name: &str) -> Result<Graph> {
    match name {
        "c5" => Ok(c5()),
        "fig2" => Ok(fig2()),
        "fig4" => Ok(fig4()),
        "gamma7" => Ok(gamma7()),
        "2k2" => Ok(two_k2()),
        "p3" => Ok(p3()),
        other => match other.strip_prefix("c5k").map(str::parse::<usize>) {
            Some(Ok(n)) if n >= 1 => c5_kn(n),
            _ => Err(Error::UnknownFixture(other.to_string())),
        },
    }
}

pub const GRAPH_NAMES: [&str; 7] = ["c5", "fig2", "fig4", "gamma7", "2k2", "p3", "c5k<n>"];

/// The order of `I(C5)^2`
/// `e1^2, e1e2, e2^2, e1e3, e2e3, e3^2, e2e5, e1e5, e1e4, e2e4, e3e4, e3e5, e4e5, e5^2, e4^2`.
pub const ISTANBUL: [&str; 15] = [
    "a^2*b^2", "a*b^2*c", "b^2*c^2", "a*b*c*d", "b*c^2*d", "c^2*d^2", "a*b*c*e", "a^2*b*e",
    "a*b*d*e", "b*c*d*e", "c*d^2*e", "a*c*d*e", "a*d*e^2", "a^2*e^2", "d^2*e^2",
];

/// A second order of `I(C5)^2`, with pure powers `e1^2 > e5^2 > e2^2 > e3^2 > e4^2`.
pub const ISTANBUL_ALT: [&str; 15] = [
    "a^2*b^2", "a^2*b*e", "a*b^2*c", "a*b*c*e", "a^2*e^2", "b^2*c^2", "a*b*c*d", "a*b*d*e",
    "b*c^2*d", "a*d*e^2", "b*c*d*e", "a*c*d*e", "c*d^2*e", "c^2*d^2", "d^2*e^2",
];

/// The 34-generator order of `I(fig2)^2`, written as products of edges.
/// The entry `(ax)(qz)` is `e2 e8`.
pub const FIG2_ORDER: [&str; 34] = [
    "ab*ab", "ab*ax", "ab*bx", "ab*ap", "ab*bq", "ax*ap", "ax*bx", "bx*bq", "bx*ap", "ax*bq",
    "ap*bq", "ab*pz", "ab*qz", "ab*xz", "ap*xz", "bq*xz", "bx*pz", "ax*qz", "ax*xz", "bx*xz",
    "ap*pz", "bq*qz", "ap*qz", "bq*pz", "pz*xz", "pz*qz", "xz*qz", "ap*ap", "ax*ax", "bx*bx",
    "bq*bq", "pz*pz", "xz*xz", "qz*qz",
];

/// The 42-generator order of `I(fig4)^2`, written as products of edges.
pub const FIG4_ORDER: [&str; 42] = [
    "ab*ab", "ab*ax", "ab*bx", "ab*ap", "ab*xp", "ab*bq", "ab*xq", "ab*pz", "ab*qz", "ap*pz",
    "ap*ax", "ap*xq", "ap*qz", "ap*bq", "ap*xp", "ax*pz", "ax*bx", "ax*xq", "ax*qz", "ax*xp",
    "bx*pz", "bx*xq", "bx*qz", "bx*bq", "bx*xp", "bq*qz", "bq*xp", "bq*pz", "bq*xq", "xp*qz",
    "xp*pz", "xp*xq", "xq*qz", "pz*qz", "ap*ap", "ax*ax", "bx*bx", "bq*bq", "xp*xp", "xq*xq",
    "pz*pz", "qz*qz",
];

pub const ORDER_NAMES: [&str; 5] = ["istanbul", "istanbul-alt", "fig2", "fig4", "fig4-repaired"];

/// Resolves a product of edges such as `ab*ax` (edges named by their two
/// endpoint labels) or a monomial such as `a^2*b*e` to a generator index.
fn resolve_entry(pg: &PowerGenerators, graph: &Graph, entry: &str) -> Result<usize> {
    let bad = || Error::NotAGenerator(entry.to_string());
    let as_edges: Option<Monomial> = entry
        .split('*')
        .map(|edge| {
            let idx = (0..graph.n())
                .flat_map(|u| (0..graph.n()).map(move |v| (u, v)))
                .find(|&(u, v)| format!("{}{}", graph.label(u), graph.label(v)) == edge)
                .filter(|&(u, v)| graph.has_edge(u, v))?;
            Some(Monomial::from_vars(&[idx.0, idx.1], graph.n()))
        })
        .try_fold(Monomial::one(graph.n()), |acc, m| m.map(|m| &acc * &m));
    let m = match as_edges {
        Some(m) if m.degree() == 2 * pg.q() as u32 => m,
        _ => Monomial::parse(entry, graph.labels()).map_err(|_| bad())?,
    };
    pg.index_of(&m).ok_or_else(bad)
}

/// A built-in order with its graph: `istanbul`, `istanbul-alt` (both on
/// `c5`), `fig2`, `fig4`, `fig4-repaired`.
///
/// `fig4` is the 42-entry table as printed, which is not a
/// linear-quotients order. `fig4-repaired` is the linear-quotients order
/// that agrees with it on the longest prefix, found by search.
pub fn named_order(name: &str) -> Result<(Graph, GeneratorOrdering)> {
    if name == "fig4-repaired" {
        let (graph, printed) = named_order("fig4")?;
        let found = find_lq_order_near(printed.base_arc(), printed.sequence(), 1_000_000);
        let order = found.outcome.order().expect("fig4 has an order").clone();
        return Ok((graph, order.with_provenance(Provenance::Given)));
    }
    let (graph, entries): (Graph, &[&str]) = match name {
        "istanbul" => (c5(), &ISTANBUL),
        "istanbul-alt" => (c5(), &ISTANBUL_ALT),
        "fig2" => (fig2(), &FIG2_ORDER),
        "fig4" => (fig4(), &FIG4_ORDER),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    let pg = Arc::new(EdgeIdeal::new(graph.clone()).power(2)?);
    let sequence = entries
        .iter()
        .map(|e| resolve_entry(&pg, &graph, e))
        .collect::<Result<Vec<_>>>()?;
    let order = GeneratorOrdering::new(pg, sequence, Provenance::Given)?;
    Ok((graph, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_sizes() {
        assert_eq!((c5().n(), c5().edge_count()), (5, 5));
        assert_eq!((fig2().n(), fig2().edge_count()), (6, 8));
        assert_eq!((fig4().n(), fig4().edge_count()), (6, 9));
        assert_eq!((gamma7().n(), gamma7().edge_count()), (7, 11));
        assert_eq!(gamma7().label(6), "z'");
        let k3 = c5_kn(3).unwrap();
        assert_eq!((k3.n(), k3.edge_count()), (8, 8 + 2 * 3 + 3));
        assert_eq!(k3.labels()[4..].to_vec(), ["x1", "z", "x2", "x3"]);
        assert_eq!(c5_kn(1).unwrap(), fig2());
    }

    #[test]
    fn name_lookup() {
        for name in ["c5", "fig2", "fig4", "gamma7", "2k2", "p3", "c5k4"] {
            assert!(named_graph(name).is_ok(), "{name}");
        }
        assert!(named_graph("c5k0").is_err());
        assert!(named_graph("c5kx").is_err());
        assert!(named_graph("petersen").is_err());
    }

    #[test]
    fn built_in_orders_are_permutations() {
        for name in ORDER_NAMES {
            let (_, order) = named_order(name).unwrap();
            assert_eq!(order.len(), order.base().len(), "{name}");
        }
        assert!(named_order("fig5").is_err());
    }

    #[test]
    fn fig2_typo_entry_is_e2e8() {
        let (_, order) = named_order("fig2").unwrap();
        let pg = order.base();
        let e2e8 = pg.index_of_multiset(&[1, 7]).unwrap();
        assert_eq!(order.sequence()[17], e2e8);
    }

    #[test]
    fn repaired_fig4_differs_in_two_stretches() {
        let (_, printed) = named_order("fig4").unwrap();
        let (_, repaired) = named_order("fig4-repaired").unwrap();
        let differ: Vec<usize> = (0..42)
            .filter(|&k| printed.sequence()[k] != repaired.sequence()[k])
            .collect();
        assert_eq!(differ, [7, 8, 9, 10, 11, 13, 14, 21, 22]);
    }
}
