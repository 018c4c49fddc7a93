//! Finite simple graphs on dense vertex labels `0..n`.
//!
//! Adjacency is kept as one `u64` row per vertex, so graphs are capped at
//! [`MAX_VERTICES`]. The edge list preserves insertion order: it is the
//! order `e_1, ..., e_s` in which the edge ideal lists its generators.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Largest vertex count accepted by [`Graph::matching_number`].
pub const MATCHING_MAX_VERTICES: usize = 16;

/// Largest vertex count accepted by [`Graph::canonical_code`].
pub const CANONICAL_MAX_VERTICES: usize = 9;

pub type Vertex = usize;

/// A set of vertices, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(", "))
    }
}

/// The fixed small graphs looked for as induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternId {
    Cricket,
    Diamond,
    C4,
    C5,
}

impl PatternId {
    pub const ALL: [PatternId; 4] = [
        PatternId::Cricket,
        PatternId::Diamond,
        PatternId::C4,
        PatternId::C5,
    ];

    /// The reference graph. The cricket is a triangle `c d e` with two
    /// pendant vertices `a`, `b` at `c`; the diamond is `K_4` minus one edge.
    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            PatternId::Cricket => (5, &[(0, 2), (2, 4), (1, 2), (2, 3), (3, 4)]),
            PatternId::Diamond => (4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
            PatternId::C4 => (4, &[(0, 1), (1, 3), (3, 2), (2, 0)]),
            PatternId::C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        };
        Graph::new(n, edges.iter().copied()).expect("pattern graphs are simple")
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PatternId::Cricket => "cricket",
            PatternId::Diamond => "diamond",
            PatternId::C4 => "C4",
            PatternId::C5 => "C5",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<u64>,
    labels: Vec<String>,
}

/// Labeled graphs compare by vertex count and edge set; edge order and
/// vertex names are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

fn default_label(v: Vertex) -> String {
    format!("x{v}")
}

impl Graph {
    /// Builds a graph from an edge list. Each pair is normalized to
    /// `(min, max)`; the list order is kept.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![0; n],
            labels: (0..n).map(default_label).collect(),
        };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).tuple_combinations())
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Labeled graph whose edge set is read from the bits of `code` over the
    /// pairs `(0,1), (0,2), ..., (n-2,n-1)`, least significant bit first.
    pub fn from_pair_bits(n: usize, code: u64) -> Result<Self> {
        let edges = (0..n)
            .tuple_combinations()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, e)| e);
        Self::new(n, edges)
    }

    /// Erdős–Rényi sample.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .tuple_combinations()
            .filter(|_| rng.gen_bool(p))
            .collect();
        Self::new(n, edges)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = labels;
        self
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (u, v) = (u.min(v), u.max(v));
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edges.push((u, v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_set(&self, w: VertexSet) -> Result<()> {
        match w.difference(self.vertices()).iter().next() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Open (`N(x)`) or closed (`N[x]`) neighborhood.
    pub fn neighborhood(&self, x: Vertex, closed: bool) -> Result<VertexSet> {
        self.check_vertex(x)?;
        let mut set = VertexSet::from_bits(self.adj[x]);
        if closed {
            set.insert(x);
        }
        Ok(set)
    }

    /// No edge has both endpoints in `w`.
    pub fn is_independent(&self, w: VertexSet) -> bool {
        w.iter()
            .filter(|&v| v < self.n)
            .all(|v| self.adj[v] & w.bits() == 0)
    }

    /// Every pair of vertex-disjoint edges is joined by a third edge.
    pub fn is_gapfree(&self) -> bool {
        let ends: Vec<u64> = self.edges.iter().map(|&(u, v)| 1 << u | 1 << v).collect();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let reach = self.adj[u] | self.adj[v];
            for &other in &ends[i + 1..] {
                let disjoint = other & ends[i] == 0;
                if disjoint && reach & other == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The subgraph induced on `w`, relabeled to `0..|w|` in increasing
    /// vertex order. Edges keep their relative order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        let members = w.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| w.contains(u) && w.contains(v))
            .map(|&(u, v)| (position[u], position[v]));
        let g = Graph::new(members.len(), edges)?;
        Ok(g.with_labels(members.iter().map(|&v| self.labels[v].clone())))
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .tuple_combinations()
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, edges)
            .expect("complement of a simple graph is simple")
            .with_labels(self.labels.clone())
    }

    /// True iff some vertex subset induces a copy of the pattern.
    pub fn contains_induced(&self, pattern: PatternId) -> bool {
        self.find_induced(&pattern.graph()).is_some()
    }

    /// An injective map from `pattern`'s vertices into `self` preserving
    /// both edges and non-edges, found by extending partial maps one pattern
    /// vertex at a time.
    pub fn find_induced(&self, pattern: &Graph) -> Option<Vec<Vertex>> {
        fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<Vertex>, used: u64) -> bool {
            let next = map.len();
            if next == pattern.n {
                return true;
            }
            for cand in 0..host.n {
                if used >> cand & 1 == 1 {
                    continue;
                }
                let consistent = map
                    .iter()
                    .enumerate()
                    .all(|(i, &img)| pattern.has_edge(i, next) == host.has_edge(img, cand));
                if consistent {
                    map.push(cand);
                    if extend(host, pattern, map, used | 1 << cand) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }

        let mut map = Vec::with_capacity(pattern.n);
        extend(self, pattern, &mut map, 0).then_some(map)
    }

    /// Gapfree and containing an induced cricket, diamond, `C_4` and `C_5`.
    pub fn is_cdcc(&self) -> bool {
        self.is_gapfree() && PatternId::ALL.iter().all(|&p| self.contains_induced(p))
    }

    /// Visit order of a maximum-cardinality search: each step picks the
    /// unvisited vertex with the most visited neighbors, lowest label first.
    pub fn maximum_cardinality_search(&self) -> Vec<Vertex> {
        let mut weight = vec![0usize; self.n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
            for w in VertexSet::from_bits(self.adj[v] & !visited).iter() {
                weight[w] += 1;
            }
        }
        order
    }

    /// Checks that every vertex's neighbors visited before it form a
    /// clique. For a visit order this is the reverse of a perfect
    /// elimination ordering.
    pub fn is_perfect_elimination_visit_order(&self, order: &[Vertex]) -> bool {
        let mut seen = 0u64;
        for &v in order {
            let earlier = self.adj[v] & seen;
            for w in VertexSet::from_bits(earlier).iter() {
                if earlier & !(1 << w) & !self.adj[w] != 0 {
                    return false;
                }
            }
            seen |= 1 << v;
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        let order = self.maximum_cardinality_search();
        self.is_perfect_elimination_visit_order(&order)
    }

    /// Complement is chordal.
    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// `G^x`: a new vertex `y = n` adjacent to exactly `N(x)`. The new
    /// edges `{b, y}` are appended in the order the edges at `x` appear.
    pub fn duplicate_vertex(&self, x: Vertex) -> Result<Graph> {
        self.check_vertex(x)?;
        let y = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            self.edges
                .iter()
                .filter(|&&(u, v)| u == x || v == x)
                .map(|&(u, v)| (if u == x { v } else { u }, y)),
        );
        let mut labels = self.labels.clone();
        labels.push(self.fresh_label(x));
        Ok(Graph::new(self.n + 1, edges)?.with_labels(labels))
    }

    /// `G^[x]`: the duplication plus the edge `{x, y}`, appended last.
    pub fn expand_vertex(&self, x: Vertex) -> Result<Graph> {
        let mut g = self.duplicate_vertex(x)?;
        g.push_edge(x, self.n)?;
        Ok(g)
    }

    fn fresh_label(&self, x: Vertex) -> String {
        let mut label = format!("{}'", self.labels[x]);
        while self.labels.contains(&label) {
            label.push('\'');
        }
        label
    }

    /// Maximum number of pairwise disjoint edges, by exhaustive
    /// branch-and-bound seeded with a greedy matching.
    pub fn matching_number(&self) -> Result<usize> {
        if self.n > MATCHING_MAX_VERTICES {
            return Err(Error::MatchingTooLarge {
                n: self.n,
                max: MATCHING_MAX_VERTICES,
            });
        }

        fn search(adj: &[u64], free: u64, size: usize, best: &mut usize) {
            // vertices with a free neighbor can still be matched
            let live = free
                & (0..adj.len())
                    .filter(|&v| free >> v & 1 == 1 && adj[v] & free != 0)
                    .fold(0u64, |acc, v| acc | 1 << v);
            if size + live.count_ones() as usize / 2 <= *best {
                return;
            }
            if live == 0 {
                *best = size;
                return;
            }
            let v = live.trailing_zeros() as usize;
            let mut nbrs = adj[v] & live;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                search(adj, free & !(1 << v) & !(1 << w), size + 1, best);
            }
            search(adj, free & !(1 << v), size, best);
        }

        let mut best = self.greedy_matching();
        let free = VertexSet::full(self.n).bits();
        search(&self.adj, free, 0, &mut best);
        Ok(best)
    }

    fn greedy_matching(&self) -> usize {
        let mut used = 0u64;
        let mut size = 0;
        for &(u, v) in &self.edges {
            if used & (1 << u | 1 << v) == 0 {
                used |= 1 << u | 1 << v;
                size += 1;
            }
        }
        size
    }

    /// Adjacency bits over the pairs `(0,1), (0,2), ..., (n-2,n-1)`, first
    /// pair most significant.
    pub fn pair_code(&self) -> u64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        (0..self.n)
            .tuple_combinations()
            .enumerate()
            .filter(|&(_, (u, v))| self.has_edge(u, v))
            .fold(0u64, |acc, (i, _)| acc | 1 << (pairs - 1 - i))
    }

    /// The lexicographically least adjacency bitstring over all vertex
    /// relabelings. Two graphs are isomorphic iff their codes agree.
    pub fn canonical_code(&self) -> Result<u64> {
        if self.n > CANONICAL_MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n,
                max: CANONICAL_MAX_VERTICES,
            });
        }
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        let mut best = u64::MAX;
        for perm in (0..self.n).permutations(self.n) {
            let mut code = 0u64;
            let mut bit = pairs;
            for i in 0..self.n {
                for j in i + 1..self.n {
                    bit -= 1;
                    if self.has_edge(perm[i], perm[j]) {
                        code |= 1 << bit;
                        if code > best {
                            break;
                        }
                    }
                }
            }
            best = best.min(code);
        }
        Ok(if self.n < 2 { 0 } else { best })
    }

    /// Canonical representative of the isomorphism class.
    pub fn canonical_form(&self) -> Result<Graph> {
        let code = self.canonical_code()?;
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        let edges = (0..self.n)
            .tuple_combinations()
            .enumerate()
            .filter(|&(i, _)| code >> (pairs - 1 - i) & 1 == 1)
            .map(|(_, e)| e);
        Graph::new(self.n, edges)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_code()? == other.canonical_code()?)
    }

    /// Text form: the vertex count, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the text form. Blank lines and lines starting with `#` are
    /// skipped.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines.next().ok_or(Error::GraphParse {
            line: 0,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::GraphParse {
            line,
            msg: format!("expected a vertex count, got `{first}`"),
        })?;
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let [u, v] = parts[..] else {
                return Err(Error::GraphParse {
                    line,
                    msg: format!("expected `u v`, got `{l}`"),
                });
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::GraphParse {
                    line,
                    msg: format!("bad vertex `{s}`"),
                })
            };
            let (u, v) = (parse(u)?, parse(v)?);
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::GraphParse {
                    line,
                    msg: format!("duplicate edge {u} {v}"),
                });
            }
            edges.push((u, v));
        }
        Graph::new(n, edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}{}", self.labels[u], self.labels[v]))
            .join(" ");
        write!(f, "G(n={}; {})", self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    fn two_k2() -> Graph {
        Graph::new(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_out_of_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn gapfree_examples() {
        assert!(c5().is_gapfree());
        assert!(!two_k2().is_gapfree());
        assert!(Graph::path(4).unwrap().is_gapfree());
        assert!(Graph::empty(3).unwrap().is_gapfree());
        // two disjoint triangles have no bridge
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!g.is_gapfree());
    }

    #[test]
    fn neighborhoods() {
        let g = c5();
        assert_eq!(g.neighborhood(0, false).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(g.neighborhood(0, true).unwrap().to_vec(), vec![0, 1, 4]);
        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert!(iso.neighborhood(2, false).unwrap().is_empty());
        assert!(g.neighborhood(5, false).is_err());
    }

    #[test]
    fn independence() {
        let g = c5();
        assert!(g.is_independent([0, 2].into_iter().collect()));
        assert!(!g.is_independent([0, 1].into_iter().collect()));
        assert!(g.is_independent(VertexSet::empty()));
    }

    #[test]
    fn induced_subgraphs_of_c5() {
        let g = c5();
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
        let p4 = g
            .induced_subgraph([0, 1, 2, 3].into_iter().collect())
            .unwrap();
        assert_eq!(p4, Graph::path(4).unwrap());
        assert!(g.induced_subgraph([7].into_iter().collect()).is_err());
    }

    #[test]
    fn pattern_containment() {
        let g = c5();
        assert!(!g.contains_induced(PatternId::C4));
        assert!(!g.contains_induced(PatternId::Cricket));
        assert!(!g.contains_induced(PatternId::Diamond));
        assert!(g.contains_induced(PatternId::C5));
        let k4 = Graph::complete(4).unwrap();
        assert!(!k4.contains_induced(PatternId::Diamond));
        for p in PatternId::ALL {
            assert!(p.graph().contains_induced(p), "{p} contains itself");
        }
    }

    #[test]
    fn chordality() {
        assert!(!c5().is_chordal());
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        assert!(PatternId::Diamond.graph().is_chordal());
    }

    #[test]
    fn complement_of_c5_is_a_c5() {
        let comp = c5().complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.is_isomorphic(&c5()).unwrap());
        assert!(!comp.is_chordal());
    }

    #[test]
    fn duplication_and_expansion() {
        // C4 labeled x a b c with edges xa ab bc cx
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dup = c4.duplicate_vertex(0).unwrap();
        assert_eq!(dup.n(), 5);
        assert_eq!(dup.edge_count(), 6);
        assert!(!dup.has_edge(0, 4));
        assert_eq!(
            dup.neighborhood(4, false).unwrap(),
            c4.neighborhood(0, false).unwrap()
        );
        let exp = c4.expand_vertex(0).unwrap();
        assert_eq!(exp.edge_count(), 7);
        assert!(exp.has_edge(0, 4));
        assert_eq!(
            exp.neighborhood(0, true).unwrap(),
            exp.neighborhood(4, true).unwrap()
        );

        let iso = Graph::new(2, []).unwrap();
        let d = iso.duplicate_vertex(1).unwrap();
        assert_eq!((d.n(), d.edge_count()), (3, 0));

        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let diamond = p3.expand_vertex(1).unwrap();
        assert!(diamond.is_isomorphic(&PatternId::Diamond.graph()).unwrap());
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(two_k2().matching_number().unwrap(), 2);
        assert_eq!(Graph::complete(4).unwrap().matching_number().unwrap(), 2);
        assert_eq!(c5().matching_number().unwrap(), 2);
        assert_eq!(Graph::path(7).unwrap().matching_number().unwrap(), 3);
        assert_eq!(Graph::empty(5).unwrap().matching_number().unwrap(), 0);
        assert!(Graph::empty(17).unwrap().matching_number().is_err());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = c5();
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        let parsed: Graph = "# a comment\n3\n0 1\n\n# more\n1 2\n".parse().unwrap();
        assert_eq!(parsed, Graph::path(3).unwrap());
        assert!(Graph::parse("").is_err());
        assert!(Graph::parse("3\n0 1 2\n").is_err());
        assert!(Graph::parse("3\n0 1\n1 0\n").is_err());
        assert!(Graph::parse("x\n").is_err());
    }

    #[test]
    fn canonical_codes() {
        let relabeled = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            c5().canonical_code().unwrap(),
            relabeled.canonical_code().unwrap()
        );
        assert_ne!(
            c5().canonical_code().unwrap(),
            Graph::path(5).unwrap().canonical_code().unwrap()
        );
        let canon = relabeled.canonical_form().unwrap();
        assert_eq!(canon.canonical_code().unwrap(), canon.pair_code());
    }
}
