//! Edge ideals, the minimal generators of their powers, and the bookkeeping
//! of every way a generator factors into edges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::monomial::{Monomial, VariableIndex};

/// Default bound on the number of edge multisets enumerated for one power.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// The edge ideal `I(G)` with a fixed listing `e_1, ..., e_s` of its
/// generators.
#[derive(Clone, Debug)]
pub struct EdgeIdeal {
    graph: Graph,
    edge_order: Vec<usize>,
}

impl EdgeIdeal {
    /// Generators in the graph's own edge order.
    pub fn new(graph: Graph) -> Self {
        let edge_order = (0..graph.edge_count()).collect();
        EdgeIdeal { graph, edge_order }
    }

    /// `edge_order[j]` is the graph edge used as generator `j`.
    pub fn with_order(graph: Graph, edge_order: Vec<usize>) -> Result<Self> {
        let s = graph.edge_count();
        let mut sorted = edge_order.clone();
        sorted.sort_unstable();
        if sorted != (0..s).collect::<Vec<_>>() {
            return Err(Error::BadEdgeOrdering(s));
        }
        Ok(EdgeIdeal { graph, edge_order })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_order(&self) -> &[usize] {
        &self.edge_order
    }

    /// `u_{e_j} = x_u x_v` for each listed edge.
    pub fn generators(&self) -> Vec<Monomial> {
        let n = self.graph.n();
        self.edge_order
            .iter()
            .map(|&e| {
                let (u, v) = self.graph.edges()[e];
                Monomial::from_vars(&[u, v], n)
            })
            .collect()
    }

    pub fn power(&self, q: usize) -> Result<PowerGenerators> {
        self.power_with_cap(q, DEFAULT_CAP)
    }

    pub fn power_with_cap(&self, q: usize, cap: u128) -> Result<PowerGenerators> {
        if q == 0 {
            return Err(Error::ZeroPower);
        }
        PowerGenerators::with_nvars(self.generators(), self.graph.n(), q, cap)
            .map(|pg| pg.with_names(self.graph.labels().to_vec()))
    }
}

/// A multiset of base-generator indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeMultiset(Vec<usize>);

impl EdgeMultiset {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        EdgeMultiset(edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.0.iter().copied().counts().into_iter().collect()
    }
}

impl fmt::Display for EdgeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .counts()
            .into_iter()
            .map(|(e, k)| {
                if k == 1 {
                    format!("e{}", e + 1)
                } else {
                    format!("e{}^{k}", e + 1)
                }
            })
            .join("");
        f.write_str(&body)
    }
}

/// `C(n, k)` in `u128`, saturating.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The minimal generators of `I^q` for an equigenerated ideal `I`,
/// together with every factorization of each generator into `q` base
/// generators.
#[derive(Clone, Debug)]
pub struct PowerGenerators {
    q: usize,
    base: Vec<Monomial>,
    names: Vec<String>,
    cap: u128,
    gens: Vec<Monomial>,
    factorizations: Vec<Vec<EdgeMultiset>>,
    index: HashMap<Monomial, usize>,
}

impl PowerGenerators {
    /// Enumerates all size-`q` multisets of base generators, multiplies
    /// them out and merges equal products. Generators keep the order in
    /// which they are first produced by the lexicographic multiset
    /// enumeration. Products of an equigenerated ideal all have the same
    /// degree, so the distinct products are exactly the minimal generators.
    pub fn new(base: Vec<Monomial>, q: usize, cap: u128) -> Result<Self> {
        let nvars = base.first().map_or(0, Monomial::nvars);
        Self::with_nvars(base, nvars, q, cap)
    }

    /// As [`PowerGenerators::new`], with the variable count given
    /// explicitly so that an empty base still lives in a ring.
    pub fn with_nvars(base: Vec<Monomial>, nvars: usize, q: usize, cap: u128) -> Result<Self> {
        if nvars > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: nvars,
                max: MAX_VERTICES,
            });
        }
        if base.iter().any(|m| m.nvars() != nvars) {
            let other = base.iter().find(|m| m.nvars() != nvars).unwrap();
            return Err(Error::VariableCountMismatch {
                left: nvars,
                right: other.nvars(),
            });
        }
        if base.iter().map(Monomial::degree).dedup().count() > 1 {
            return Err(Error::NotEquigenerated);
        }
        let s = base.len();
        let multisets = binomial((s + q).saturating_sub(1) as u128, q as u128);
        if multisets > cap {
            return Err(Error::CapExceeded {
                s,
                q,
                multisets,
                cap,
            });
        }

        let mut gens = Vec::new();
        let mut factorizations: Vec<Vec<EdgeMultiset>> = Vec::new();
        let mut index = HashMap::new();
        let mut record = |m: Monomial, multiset: Vec<usize>| {
            let next = gens.len();
            let slot = *index.entry(m.clone()).or_insert(next);
            if slot == next {
                gens.push(m);
                factorizations.push(Vec::new());
            }
            factorizations[slot].push(EdgeMultiset(multiset));
        };
        if q == 0 {
            record(Monomial::one(nvars), Vec::new());
        } else if s > 0 {
            for multiset in (0..s).combinations_with_replacement(q) {
                let product = multiset
                    .iter()
                    .skip(1)
                    .fold(base[multiset[0]].clone(), |acc, &e| &acc * &base[e]);
                record(product, multiset);
            }
        }

        Ok(PowerGenerators {
            q,
            names: (0..nvars).map(|i| format!("x{i}")).collect(),
            base,
            cap,
            gens,
            factorizations,
            index,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.nvars());
        self.names = names;
        self
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn base(&self) -> &[Monomial] {
        &self.base
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Monomial {
        &self.gens[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn edge_factorizations(&self, gen_index: usize) -> &[EdgeMultiset] {
        &self.factorizations[gen_index]
    }

    /// `e ∣∣ w`: some factorization of generator `gen_index` uses base
    /// generator `e`.
    pub fn has_edge_factor(&self, gen_index: usize, e: usize) -> bool {
        self.factorizations[gen_index].iter().any(|f| f.contains(e))
    }

    /// Generator index of `e^q`.
    pub fn pure_power(&self, e: usize) -> Option<usize> {
        self.index_of(&self.base.get(e)?.pow(self.q as u16))
    }

    /// Generator index of a product of base generators.
    pub fn index_of_multiset(&self, edges: &[usize]) -> Option<usize> {
        if edges.len() != self.q || edges.iter().any(|&e| e >= self.base.len()) {
            return None;
        }
        let product = edges
            .iter()
            .fold(Monomial::one(self.nvars()), |acc, &e| &acc * &self.base[e]);
        self.index_of(&product)
    }

    /// Total number of stored factorizations; `C(s+q-1, q)`.
    pub fn multiset_count(&self) -> usize {
        self.factorizations.iter().map(Vec::len).sum()
    }

    /// Generators with more than one factorization, with all of them.
    pub fn coincidences(&self) -> Vec<(usize, &[EdgeMultiset])> {
        self.factorizations
            .iter()
            .enumerate()
            .filter(|(_, f)| f.len() > 1)
            .map(|(i, f)| (i, f.as_slice()))
            .collect()
    }

    pub fn render(&self, m: &Monomial) -> String {
        m.render(&self.names)
    }

    /// The same power of a different base ideal, keeping the cap.
    pub fn rebase(&self, base: Vec<Monomial>, names: Vec<String>, q: usize) -> Result<Self> {
        let nvars = names.len();
        Ok(PowerGenerators::with_nvars(base, nvars, q, self.cap)?.with_names(names))
    }
}

/// The duplicate ideal `I^x`: the generators of `I`, followed by `m/x * y`
/// for each generator `m` divisible by `x`, in generator order. `y` is a
/// fresh last variable. Without any generator divisible by `x` the input is
/// returned unchanged.
pub fn duplicate_ideal(base: &[Monomial], x: VariableIndex) -> Result<Vec<Monomial>> {
    if base.iter().any(|m| !m.is_squarefree()) {
        return Err(Error::NotSquarefree);
    }
    if base.iter().map(Monomial::degree).dedup().count() > 1 {
        return Err(Error::NotEquigenerated);
    }
    if !base.iter().any(|m| m.deg_var(x) > 0) {
        return Ok(base.to_vec());
    }
    let y = base[0].nvars();
    let mut out: Vec<Monomial> = base.iter().map(|m| m.extended(y + 1)).collect();
    let added: Vec<Monomial> = out
        .iter()
        .filter(|m| m.deg_var(x) > 0)
        .map(|m| m.shift(x, y, 1))
        .collect();
    out.extend(added);
    Ok(out)
}

/// `u y/x, u y^2/x^2, ..., u y^d/x^d` with `d = deg_x(u)`.
pub fn expansion_new_generators(u: &Monomial, x: VariableIndex, y: VariableIndex) -> Vec<Monomial> {
    (1..=u.deg_var(x)).map(|k| u.shift(x, y, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn edge_ideal_generators() {
        let c5 = fixtures::c5();
        let gens = EdgeIdeal::new(c5.clone()).generators();
        let rendered: Vec<_> = gens.iter().map(|m| m.render(c5.labels())).collect();
        assert_eq!(rendered, ["a*b", "b*c", "c*d", "d*e", "a*e"]);
        assert_eq!(EdgeIdeal::new(fixtures::fig2()).generators().len(), 8);
        assert!(EdgeIdeal::new(Graph::empty(4).unwrap())
            .generators()
            .is_empty());
    }

    #[test]
    fn reordered_edge_ideal() {
        let ideal = EdgeIdeal::with_order(fixtures::c5(), vec![4, 3, 2, 1, 0]).unwrap();
        assert_eq!(ideal.generators()[0], Monomial::from_vars(&[0, 4], 5));
        assert!(EdgeIdeal::with_order(fixtures::c5(), vec![0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn pentagon_square_has_fifteen_generators() {
        let pg = EdgeIdeal::new(fixtures::c5()).power(2).unwrap();
        assert_eq!(pg.len(), 15);
        assert!(pg.coincidences().is_empty());
        assert!(pg.gens().iter().all(|m| m.degree() == 4));
    }

    #[test]
    fn fig2_square_merges_two_pairs() {
        let pg = EdgeIdeal::new(fixtures::fig2()).power(2).unwrap();
        assert_eq!(pg.len(), 34);
        let merged: Vec<Vec<EdgeMultiset>> = pg
            .coincidences()
            .into_iter()
            .map(|(_, f)| f.to_vec())
            .collect();
        // e2e6 = e4e7 and e3e8 = e5e7, zero-based
        assert_eq!(
            merged,
            vec![
                vec![EdgeMultiset::new(vec![1, 5]), EdgeMultiset::new(vec![3, 6])],
                vec![EdgeMultiset::new(vec![2, 7]), EdgeMultiset::new(vec![4, 6])],
            ]
        );
    }

    #[test]
    fn fig4_square_has_three_coincidences() {
        let pg = EdgeIdeal::new(fixtures::fig4()).power(2).unwrap();
        assert_eq!(pg.multiset_count(), 45);
        assert_eq!(pg.len(), 42);
        let merged: Vec<Vec<EdgeMultiset>> = pg
            .coincidences()
            .into_iter()
            .map(|(_, f)| f.to_vec())
            .collect();
        // e1e6 = e2e4, e1e7 = e3e5, e6e9 = e7e8
        assert_eq!(
            merged,
            vec![
                vec![EdgeMultiset::new(vec![0, 5]), EdgeMultiset::new(vec![1, 3])],
                vec![EdgeMultiset::new(vec![0, 6]), EdgeMultiset::new(vec![2, 4])],
                vec![EdgeMultiset::new(vec![5, 8]), EdgeMultiset::new(vec![6, 7])],
            ]
        );
    }

    #[test]
    fn edge_factor_queries() {
        let pg = EdgeIdeal::new(fixtures::fig2()).power(2).unwrap();
        // e4e5 = abpq does not factor through e1 = ab
        let w = pg.index_of_multiset(&[3, 4]).unwrap();
        assert!(pg.base()[0].divides(pg.gen(w)));
        assert!(!pg.has_edge_factor(w, 0));
        let w = pg.index_of_multiset(&[1, 5]).unwrap();
        assert!(pg.has_edge_factor(w, 3));
        for e in 0..8 {
            let p = pg.pure_power(e).unwrap();
            assert!(pg.has_edge_factor(p, e));
            assert_eq!(pg.edge_factorizations(p).len(), 1);
        }
    }

    #[test]
    fn cap_and_zero_power() {
        let ideal = EdgeIdeal::new(fixtures::c5());
        assert!(matches!(
            ideal.power_with_cap(3, 34),
            Err(Error::CapExceeded { multisets: 35, .. })
        ));
        assert!(ideal.power_with_cap(3, 35).is_ok());
        assert_eq!(ideal.power(0).unwrap_err(), Error::ZeroPower);
    }

    #[test]
    fn duplicate_ideal_examples() {
        let c5 = EdgeIdeal::new(fixtures::c5()).generators();
        let dup = duplicate_ideal(&c5, 0).unwrap();
        assert_eq!(dup.len(), 7);
        let names: Vec<String> = "abcdey".chars().map(String::from).collect();
        assert_eq!(dup[5].render(&names), "b*y");
        assert_eq!(dup[6].render(&names), "e*y");

        let fig4 = EdgeIdeal::new(fixtures::fig4()).generators();
        let z = fixtures::fig4()
            .labels()
            .iter()
            .position(|l| l == "z")
            .unwrap();
        let gamma = duplicate_ideal(&fig4, z).unwrap();
        assert_eq!(gamma.len(), 11);
        assert_eq!(gamma, EdgeIdeal::new(fixtures::gamma7()).generators());

        let with_isolated = Monomial::from_vars(&[0, 1], 3);
        assert_eq!(
            duplicate_ideal(&[with_isolated.clone()], 2).unwrap(),
            vec![with_isolated]
        );
        assert_eq!(
            duplicate_ideal(&[Monomial::from_vars(&[0, 0], 2)], 0),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn new_generators_from_expansion() {
        // u = x^2 * m over x, a, y
        let u = Monomial::from_exponents(vec![2, 1, 0]);
        let new = expansion_new_generators(&u, 0, 2);
        assert_eq!(
            new,
            vec![
                Monomial::from_exponents(vec![1, 1, 1]),
                Monomial::from_exponents(vec![0, 1, 2])
            ]
        );
        let single = Monomial::from_exponents(vec![1, 1, 0]);
        assert_eq!(
            expansion_new_generators(&single, 0, 2),
            vec![single.shift(0, 2, 1)]
        );
        let pure = Monomial::from_exponents(vec![3, 0]);
        assert_eq!(
            expansion_new_generators(&pure, 0, 1),
            vec![
                Monomial::from_exponents(vec![2, 1]),
                Monomial::from_exponents(vec![1, 2]),
                Monomial::from_exponents(vec![0, 3]),
            ]
        );
        assert!(expansion_new_generators(&Monomial::from_exponents(vec![0, 1]), 0, 1).is_empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(11, 7), 330);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
