//! Orders built from a known order of a lower power: the efficient
//! orders, admissible edge orders, and the compatible orders.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::linquot::{
    find_lq_order_near, verify_linear_quotients, GeneratorOrdering, Provenance, SearchResult,
};
use crate::monomial::Monomial;
use crate::power::EdgeIdeal;

/// A sequence `e_1 > ... > e_s` of edge indices. Whether the indices refer
/// to the graph's edge list or to a power's base generators depends on
/// where the ordering came from; for [`EdgeIdeal::new`] the two coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeOrdering(pub Vec<usize>);

impl EdgeOrdering {
    pub fn new(sequence: Vec<usize>, edge_count: usize) -> Result<Self> {
        let mut sorted = sequence.clone();
        sorted.sort_unstable();
        if sorted != (0..edge_count).collect::<Vec<_>>() {
            return Err(Error::BadEdgeOrdering(edge_count));
        }
        Ok(EdgeOrdering(sequence))
    }

    /// Whitespace-separated 0-based edge indices.
    pub fn parse(text: &str, edge_count: usize) -> Result<Self> {
        let sequence = text
            .split_whitespace()
            .filter(|tok| !tok.starts_with('#'))
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::BadEdgeOrdering(edge_count))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sequence, edge_count)
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `rank[e]` is the position of edge `e`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.0.len()];
        for (pos, &e) in self.0.iter().enumerate() {
            rank[e] = pos;
        }
        rank
    }

    /// Edges as `ab > ae > ...` using the graph's labels.
    pub fn render(&self, g: &Graph) -> String {
        let names: Vec<String> = self
            .0
            .iter()
            .map(|&e| {
                let (u, v) = g.edges()[e];
                format!("{}{}", g.label(u), g.label(v))
            })
            .collect();
        names.join(" > ")
    }
}

impl fmt::Display for EdgeOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// One pass of the recursion shared by the efficient and compatible
/// orders: `u_1 e_1 > ... > u_r e_1 > u_1 e_2 > ... > u_r e_s`, keeping only
/// the first appearance of each monomial.
fn extend_by_edges(
    o: &GeneratorOrdering,
    edges: &[Monomial],
    provenance: Provenance,
) -> Result<GeneratorOrdering> {
    let pg = o.base();
    let next = Arc::new(pg.rebase(pg.base().to_vec(), pg.names().to_vec(), pg.q() + 1)?);
    let mut emitted = HashSet::with_capacity(next.len());
    let mut sequence = Vec::with_capacity(next.len());
    for e in edges {
        for u in o.monomials() {
            let index = next
                .index_of(&(u * e))
                .expect("products of generators are generators");
            if emitted.insert(index) {
                sequence.push(index);
            }
        }
    }
    GeneratorOrdering::new(next, sequence, provenance)
}

/// The base generators sorted by where their pure powers appear in `o`.
pub fn pure_power_order(o: &GeneratorOrdering) -> Result<EdgeOrdering> {
    let pg = o.base();
    let mut keyed = Vec::with_capacity(pg.base().len());
    for e in 0..pg.base().len() {
        let index = pg.pure_power(e).ok_or(Error::MissingPurePower(e))?;
        let pos = o
            .sequence()
            .iter()
            .position(|&i| i == index)
            .expect("permutation");
        keyed.push((pos, e));
    }
    keyed.sort_unstable();
    Ok(EdgeOrdering(keyed.into_iter().map(|(_, e)| e).collect()))
}

/// The efficient orders from `o` (an order of `I^q`) up to `I^target_s`,
/// one per power. The edges are taken in the order their pure powers
/// appear in `o`.
pub fn efficient_chain(o: &GeneratorOrdering, target_s: usize) -> Result<Vec<GeneratorOrdering>> {
    let q = o.base().q();
    if target_s < q {
        return Err(Error::TargetBelowBase {
            target: target_s,
            base: q,
        });
    }
    let pg = o.base();
    let edges: Vec<Monomial> = pure_power_order(o)?
        .0
        .iter()
        .map(|&e| pg.base()[e].clone())
        .collect();
    let mut chain = vec![o.clone()];
    for _ in q..target_s {
        let next = extend_by_edges(chain.last().unwrap(), &edges, Provenance::Efficient)?;
        chain.push(next);
    }
    Ok(chain)
}

/// The efficient order of `I^target_s` constructed from `o`.
pub fn efficient_ordering(o: &GeneratorOrdering, target_s: usize) -> Result<GeneratorOrdering> {
    Ok(efficient_chain(o, target_s)?.pop().unwrap())
}

/// Assignment of each generator to the class of the earliest edge, in a
/// given edge order, that occurs in one of its factorizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub edge_order: EdgeOrdering,
    /// `class[i]` is the edge whose class contains generator `i`.
    pub class: Vec<usize>,
}

impl Bucket {
    pub fn class_of(&self, gen_index: usize) -> usize {
        self.class[gen_index]
    }

    pub fn members(&self, e: usize) -> Vec<usize> {
        (0..self.class.len())
            .filter(|&i| self.class[i] == e)
            .collect()
    }
}

pub fn classify_buckets(o: &GeneratorOrdering, edge_order: &EdgeOrdering) -> Bucket {
    let pg = o.base();
    let rank = edge_order.ranks();
    let class = (0..pg.len())
        .map(|i| {
            pg.edge_factorizations(i)
                .iter()
                .flat_map(|f| f.edges().iter().copied())
                .min_by_key(|&e| rank[e])
                .expect("factorizations are nonempty for q >= 1")
        })
        .collect();
    Bucket {
        edge_order: edge_order.clone(),
        class,
    }
}

/// Peels vertex 0, then 1, and so on: the remaining edges at each vertex,
/// by ascending other endpoint, precede everything peeled later.
pub fn admissible_order(g: &Graph) -> EdgeOrdering {
    let mut sequence = Vec::with_capacity(g.edge_count());
    for v in 0..g.n() {
        for w in (v + 1)..g.n() {
            if let Some(e) = g.edge_index(v, w) {
                sequence.push(e);
            }
        }
    }
    EdgeOrdering(sequence)
}

/// A disjoint pair `ab > cd` for which neither all edges at `a` nor all
/// edges at `b` precede `cd`, if one exists.
pub fn admissibility_violation(
    g: &Graph,
    eo: &EdgeOrdering,
) -> Result<Option<(Vertex, Vertex, Vertex, Vertex)>> {
    let eo = EdgeOrdering::new(eo.0.clone(), g.edge_count())?;
    let rank = eo.ranks();
    let edges = g.edges();
    let all_before = |x: Vertex, limit: usize| {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == x || v == x)
            .all(|(e, _)| rank[e] < limit)
    };
    for (pos, &e) in eo.0.iter().enumerate() {
        let (a, b) = edges[e];
        for &f in &eo.0[pos + 1..] {
            let (c, d) = edges[f];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !all_before(a, rank[f]) && !all_before(b, rank[f]) {
                return Ok(Some((a, b, c, d)));
            }
        }
    }
    Ok(None)
}

pub fn is_admissible(g: &Graph, eo: &EdgeOrdering) -> Result<bool> {
    Ok(admissibility_violation(g, eo)?.is_none())
}

/// The order of `I^q` obtained by starting from the edges in the order
/// `eo` and applying the compatible-order recursion from the first power:
/// generators grouped by their largest edge under `eo`.
pub fn edge_block_order(
    g: &Graph,
    eo: &EdgeOrdering,
    q: usize,
    cap: u128,
) -> Result<GeneratorOrdering> {
    if q == 0 {
        return Err(Error::ZeroPower);
    }
    let eo = EdgeOrdering::new(eo.0.clone(), g.edge_count())?;
    let first = Arc::new(EdgeIdeal::new(g.clone()).power_with_cap(1, cap)?);
    let mut order = GeneratorOrdering::new(first.clone(), eo.0.clone(), Provenance::Given)?;
    let edges: Vec<Monomial> = eo.0.iter().map(|&e| first.base()[e].clone()).collect();
    for _ in 1..q {
        order = extend_by_edges(&order, &edges, Provenance::Given)?;
    }
    Ok(order)
}

/// A linear-quotients order of `I^2` found by searching as close as
/// possible to [`edge_block_order`] for `eo`.
pub fn guided_square_order(
    g: &Graph,
    eo: &EdgeOrdering,
    budget: u64,
    cap: u128,
) -> Result<SearchResult> {
    let shape = edge_block_order(g, eo, 2, cap)?;
    Ok(find_lq_order_near(
        shape.base_arc(),
        shape.sequence(),
        budget,
    ))
}

fn same_ideal(g: &Graph, o: &GeneratorOrdering) -> bool {
    let mut expected = EdgeIdeal::new(g.clone()).generators();
    let mut actual = o.base().base().to_vec();
    expected.sort();
    actual.sort();
    expected == actual && o.base().nvars() == g.n()
}

/// The compatible orders of `I^2, ..., I^target_q` built from an admissible
/// edge order `eo` (graph edge indices) and a verified order `o2` of `I^2`.
pub fn compatible_chain(
    g: &Graph,
    eo: &EdgeOrdering,
    o2: &GeneratorOrdering,
    target_q: usize,
) -> Result<Vec<GeneratorOrdering>> {
    if target_q < 2 {
        return Err(Error::TargetBelowBase {
            target: target_q,
            base: 2,
        });
    }
    if o2.base().q() != 2 {
        return Err(Error::WrongPower {
            expected: 2,
            found: o2.base().q(),
        });
    }
    if !same_ideal(g, o2) {
        return Err(Error::BaseMismatch);
    }
    if let Some((a, b, c, d)) = admissibility_violation(g, eo)? {
        return Err(Error::InadmissibleEdgeOrder { a, b, c, d });
    }
    if let Some(w) = verify_linear_quotients(o2).witness {
        return Err(Error::OrderFailsVerification { t: w.t, i: w.i });
    }
    let edges = edge_monomials(g, eo);
    let mut chain = vec![o2.clone()];
    for _ in 2..target_q {
        let next = extend_by_edges(chain.last().unwrap(), &edges, Provenance::Compatible)?;
        chain.push(next);
    }
    Ok(chain)
}

fn edge_monomials(g: &Graph, eo: &EdgeOrdering) -> Vec<Monomial> {
    eo.0.iter()
        .map(|&e| {
            let (u, v) = g.edges()[e];
            Monomial::from_vars(&[u, v], g.n())
        })
        .collect()
}

/// One step of the compatible recursion: the order of `I^(q+1)` from an
/// order `o` of `I^q`. No premises are checked.
pub fn compatible_step(
    g: &Graph,
    eo: &EdgeOrdering,
    o: &GeneratorOrdering,
) -> Result<GeneratorOrdering> {
    let eo = EdgeOrdering::new(eo.0.clone(), g.edge_count())?;
    extend_by_edges(o, &edge_monomials(g, &eo), Provenance::Compatible)
}

/// The compatible order of `I^target_q`.
pub fn compatible_orders(
    g: &Graph,
    eo: &EdgeOrdering,
    o2: &GeneratorOrdering,
    target_q: usize,
) -> Result<GeneratorOrdering> {
    Ok(compatible_chain(g, eo, o2, target_q)?.pop().unwrap())
}
