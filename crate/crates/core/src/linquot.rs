//! Linear-quotients verification, colon ideals, order search, and the
//! duplication and expansion order constructions.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::monomial::{Monomial, VariableIndex};
use crate::power::{duplicate_ideal, expansion_new_generators, EdgeIdeal, PowerGenerators};

/// How an ordering was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Given,
    Efficient,
    Compatible,
    Duplication,
    Expansion,
    Search,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Provenance::Given => "given",
            Provenance::Efficient => "efficient",
            Provenance::Compatible => "compatible",
            Provenance::Duplication => "duplication",
            Provenance::Expansion => "expansion",
            Provenance::Search => "search",
        };
        f.write_str(name)
    }
}

/// A total order `u_1 > ... > u_r` on the generators of a power,
/// stored as a permutation of generator indices.
#[derive(Clone, Debug)]
pub struct GeneratorOrdering {
    base: Arc<PowerGenerators>,
    sequence: Vec<usize>,
    provenance: Provenance,
}

impl GeneratorOrdering {
    pub fn new(
        base: Arc<PowerGenerators>,
        sequence: Vec<usize>,
        provenance: Provenance,
    ) -> Result<Self> {
        let r = base.len();
        if sequence.len() != r {
            return Err(Error::NotAPermutation(format!(
                "{} entries for {} generators",
                sequence.len(),
                r
            )));
        }
        let mut seen = vec![false; r];
        for &i in &sequence {
            if i >= r {
                return Err(Error::NotAPermutation(format!("index {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(format!(
                    "generator {} listed twice",
                    base.render(base.gen(i))
                )));
            }
        }
        Ok(GeneratorOrdering {
            base,
            sequence,
            provenance,
        })
    }

    /// The generators in the enumeration order of `base`.
    pub fn identity(base: Arc<PowerGenerators>, provenance: Provenance) -> Self {
        let sequence = (0..base.len()).collect();
        GeneratorOrdering {
            base,
            sequence,
            provenance,
        }
    }

    pub fn from_monomials(
        base: Arc<PowerGenerators>,
        monomials: &[Monomial],
        provenance: Provenance,
    ) -> Result<Self> {
        let sequence = monomials
            .iter()
            .map(|m| {
                base.index_of(m)
                    .ok_or_else(|| Error::NotAGenerator(base.render(m)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, sequence, provenance)
    }

    /// Each entry is a multiset of base-generator indices.
    pub fn from_multisets(
        base: Arc<PowerGenerators>,
        multisets: &[Vec<usize>],
        provenance: Provenance,
    ) -> Result<Self> {
        let sequence = multisets
            .iter()
            .map(|edges| {
                base.index_of_multiset(edges)
                    .ok_or_else(|| Error::NotAGenerator(format!("{edges:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, sequence, provenance)
    }

    /// Parses the order-file format: one generator per line, written as
    /// whitespace-separated 0-based base-generator indices. Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(base: Arc<PowerGenerators>, text: &str, provenance: Provenance) -> Result<Self> {
        let mut sequence = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::OrderParse {
                line: lineno + 1,
                msg,
            };
            let edges = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| err(format!("bad edge index `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if edges.len() != base.q() {
                return Err(err(format!(
                    "expected {} edge indices, got {}",
                    base.q(),
                    edges.len()
                )));
            }
            let index = base
                .index_of_multiset(&edges)
                .ok_or_else(|| err(format!("{edges:?} is not a product of {} edges", base.q())))?;
            sequence.push(index);
        }
        Self::new(base, sequence, provenance)
    }

    /// The order-file rendering, using each generator's first factorization.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &i in &self.sequence {
            let edges = self.base.edge_factorizations(i)[0].edges();
            let line: Vec<String> = edges.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn base(&self) -> &PowerGenerators {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<PowerGenerators> {
        &self.base
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// The generator at position `pos` (0-based).
    pub fn at(&self, pos: usize) -> &Monomial {
        self.base.gen(self.sequence[pos])
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.sequence.iter().map(|&i| self.base.gen(i))
    }

    pub fn position_of(&self, m: &Monomial) -> Option<usize> {
        let index = self.base.index_of(m)?;
        self.sequence.iter().position(|&i| i == index)
    }

    pub fn rendered(&self) -> Vec<String> {
        self.monomials().map(|m| self.base.render(m)).collect()
    }
}

/// The first pair violating the linear-quotients criterion: `u_i : u_t`
/// has degree at least two and no variable `u_j : u_t` (`j < t`) divides
/// it. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub t: usize,
    pub i: usize,
    pub colon: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LqReport {
    pub pass: bool,
    pub witness: Option<Witness>,
    /// For each position `t`, the variables `z` with `u_j : u_t = z` for
    /// some `j < t`.
    pub per_index_variables: Vec<Vec<VariableIndex>>,
}

fn bits_to_vec(bits: u64) -> Vec<VariableIndex> {
    VertexSet::from_bits(bits).to_vec()
}

/// Checks one position: returns the variable witnesses and the first
/// earlier position whose colon is not divisible by any of them.
fn check_position(gens: &[&Monomial], t: usize) -> (u64, Option<usize>) {
    let target = gens[t];
    let vars = gens[..t]
        .iter()
        .filter(|u| u.colon_degree(target) == 1)
        .fold(0u64, |acc, u| acc | u.colon_support(target));
    let failure = (0..t)
        .find(|&i| gens[i].colon_degree(target) > 1 && gens[i].colon_support(target) & vars == 0);
    (vars, failure)
}

/// Decides whether `o` is a linear-quotients order, reporting the first
/// failure by lowest `t`, then lowest `i`.
pub fn verify_linear_quotients(o: &GeneratorOrdering) -> LqReport {
    let gens: Vec<&Monomial> = o.monomials().collect();
    let results: Vec<(u64, Option<usize>)> = (0..gens.len())
        .into_par_iter()
        .map(|t| check_position(&gens, t))
        .collect();
    let witness = results.iter().enumerate().find_map(|(t, &(_, failure))| {
        failure.map(|i| Witness {
            t,
            i,
            colon: gens[i].colon(gens[t]),
        })
    });
    LqReport {
        pass: witness.is_none(),
        witness,
        per_index_variables: results.iter().map(|&(vars, _)| bits_to_vec(vars)).collect(),
    }
}

/// Minimal monomial generators of `(u_0, ..., u_{t-1}) : u_t`, lexicographically
/// largest first.
pub fn colon_min_gens(o: &GeneratorOrdering, t: usize) -> Vec<Monomial> {
    let target = o.at(t);
    let mut colons: Vec<Monomial> = (0..t).map(|j| o.at(j).colon(target)).collect();
    colons.sort_by_key(|m| (m.degree(), m.clone()));
    colons.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in colons {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal.sort_by(|a, b| b.cmp(a));
    minimal
}

/// Outcome of an order search.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(GeneratorOrdering),
    NoOrder,
    Unknown,
}

impl SearchOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "yes",
            SearchOutcome::NoOrder => "no",
            SearchOutcome::Unknown => "unknown",
        }
    }

    pub fn order(&self) -> Option<&GeneratorOrdering> {
        match self {
            SearchOutcome::Found(o) => Some(o),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    /// Prefix extensions tried.
    pub nodes: u64,
}

/// Pairwise colon data shared by the searches.
struct Colons {
    r: usize,
    /// `lin[d * r + c]`: bit of the variable `u_d : u_c`, or 0.
    lin: Vec<u64>,
    /// `wide[a * r + c]`: support of `u_a : u_c` when its degree is at
    /// least two, or 0.
    wide: Vec<u64>,
    support: Vec<u64>,
}

impl Colons {
    fn new(pg: &PowerGenerators) -> Self {
        let r = pg.len();
        let gens = pg.gens();
        let rows: Vec<(Vec<u64>, Vec<u64>)> = (0..r)
            .into_par_iter()
            .map(|a| {
                let mut lin = vec![0; r];
                let mut wide = vec![0; r];
                for c in 0..r {
                    if a == c {
                        continue;
                    }
                    let deg = gens[a].colon_degree(&gens[c]);
                    let supp = gens[a].colon_support(&gens[c]);
                    if deg == 1 {
                        lin[c] = supp;
                    } else if deg > 1 {
                        wide[c] = supp;
                    }
                }
                (lin, wide)
            })
            .collect();
        let mut lin = Vec::with_capacity(r * r);
        let mut wide = Vec::with_capacity(r * r);
        for (l, w) in rows {
            lin.extend(l);
            wide.extend(w);
        }
        Colons {
            r,
            lin,
            wide,
            support: gens.iter().map(Monomial::support).collect(),
        }
    }

    fn lin(&self, d: usize, c: usize) -> u64 {
        self.lin[d * self.r + c]
    }

    fn wide(&self, a: usize, c: usize) -> u64 {
        self.wide[a * self.r + c]
    }

    /// `pred[c]`: generators that must precede `c` in every
    /// linear-quotients order, because `c` could never be witnessed after
    /// them. `None` if some pair can be placed in neither order.
    fn forced_predecessors(&self) -> Option<Vec<Vec<usize>>> {
        let r = self.r;
        // all variables that can ever be witnessed at c
        let reachable: Vec<u64> = (0..r)
            .map(|c| (0..r).fold(0u64, |acc, d| acc | self.lin(d, c)))
            .collect();
        let mut pred = vec![Vec::new(); r];
        for u in 0..r {
            for v in (u + 1)..r {
                let wide = self.wide(u, v);
                if wide == 0 {
                    continue;
                }
                let v_after_u = self.wide(u, v) & reachable[v] != 0;
                let u_after_v = self.wide(v, u) & reachable[u] != 0;
                match (v_after_u, u_after_v) {
                    (false, false) => return None,
                    (false, true) => pred[u].push(v),
                    (true, false) => pred[v].push(u),
                    (true, true) => {}
                }
            }
        }
        Some(pred)
    }
}

fn has_cycle(pred: &[Vec<usize>]) -> bool {
    let r = pred.len();
    let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut succ = vec![Vec::new(); r];
    for (c, ps) in pred.iter().enumerate() {
        for &p in ps {
            succ[p].push(c);
        }
    }
    let mut stack: Vec<usize> = (0..r).filter(|&c| indeg[c] == 0).collect();
    let mut done = 0;
    while let Some(v) = stack.pop() {
        done += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    done < r
}

struct Search<'a> {
    colons: &'a Colons,
    pred: Vec<Vec<usize>>,
    placed: Vec<u64>,
    placed_list: Vec<usize>,
    vbits: Vec<u64>,
    prefix_support: u64,
    dead: HashSet<Vec<u64>>,
    nodes: u64,
    budget: u64,
    greedy: bool,
    preference: Option<Vec<usize>>,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn new(colons: &'a Colons, pred: Vec<Vec<usize>>, budget: u64, greedy: bool) -> Self {
        let r = colons.r;
        Search {
            colons,
            pred,
            placed: vec![0; r.div_ceil(64)],
            placed_list: Vec::with_capacity(r),
            vbits: vec![0; r],
            prefix_support: 0,
            dead: HashSet::new(),
            nodes: 0,
            budget,
            greedy,
            preference: None,
        }
    }

    fn is_placed(&self, c: usize) -> bool {
        self.placed[c / 64] >> (c % 64) & 1 == 1
    }

    fn admissible(&self, c: usize) -> bool {
        self.pred[c].iter().all(|&p| self.is_placed(p))
            && self.placed_list.iter().all(|&a| {
                let wide = self.colons.wide(a, c);
                wide == 0 || wide & self.vbits[c] != 0
            })
    }

    fn candidates(&self) -> Vec<usize> {
        let mut cands: Vec<usize> = (0..self.colons.r)
            .filter(|&c| !self.is_placed(c) && self.admissible(c))
            .collect();
        if let Some(rank) = &self.preference {
            cands.sort_by_key(|&c| rank[c]);
            return cands;
        }
        cands.sort_by_key(|&c| {
            let shared = (self.colons.support[c] & self.prefix_support).count_ones();
            (Reverse(shared), Reverse(self.vbits[c].count_ones()), c)
        });
        cands
    }

    fn push(&mut self, c: usize) -> Vec<u64> {
        let saved = self.vbits.clone();
        self.placed[c / 64] |= 1 << (c % 64);
        self.placed_list.push(c);
        self.prefix_support |= self.colons.support[c];
        for d in 0..self.colons.r {
            self.vbits[d] |= self.colons.lin(c, d);
        }
        saved
    }

    fn pop(&mut self, saved: Vec<u64>, support: u64) {
        let c = self.placed_list.pop().expect("nonempty prefix");
        self.placed[c / 64] &= !(1 << (c % 64));
        self.vbits = saved;
        self.prefix_support = support;
    }

    fn run(&mut self) -> Step {
        if self.placed_list.len() == self.colons.r {
            return Step::Done;
        }
        if self.dead.contains(&self.placed) {
            return Step::Dead;
        }
        let cands = self.candidates();
        let tries = if self.greedy {
            cands.len().min(1)
        } else {
            cands.len()
        };
        for &c in &cands[..tries] {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            let support = self.prefix_support;
            let saved = self.push(c);
            match self.run() {
                Step::Done => return Step::Done,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Dead => self.pop(saved, support),
            }
        }
        self.dead.insert(self.placed.clone());
        Step::Dead
    }
}

fn search(
    pg: &Arc<PowerGenerators>,
    budget: u64,
    greedy: bool,
    preference: Option<&[usize]>,
) -> SearchResult {
    let colons = Colons::new(pg);
    let Some(pred) = colons.forced_predecessors() else {
        return SearchResult {
            outcome: SearchOutcome::NoOrder,
            nodes: 0,
        };
    };
    if has_cycle(&pred) {
        return SearchResult {
            outcome: SearchOutcome::NoOrder,
            nodes: 0,
        };
    }
    let mut state = Search::new(&colons, pred, budget, greedy);
    state.preference = preference.map(|order| {
        let mut rank = vec![0; pg.len()];
        for (pos, &i) in order.iter().enumerate() {
            rank[i] = pos;
        }
        rank
    });
    let outcome = match state.run() {
        Step::Done => {
            let order =
                GeneratorOrdering::new(pg.clone(), state.placed_list.clone(), Provenance::Search)
                    .expect("search emits a permutation");
            SearchOutcome::Found(order)
        }
        Step::Dead if greedy => SearchOutcome::Unknown,
        Step::Dead => SearchOutcome::NoOrder,
        Step::OutOfBudget => SearchOutcome::Unknown,
    };
    SearchResult {
        outcome,
        nodes: state.nodes,
    }
}

/// Backtracking search for a linear-quotients order. A prefix can be
/// extended by any generator whose colon against the prefix is generated
/// by variables; prefix sets known to be dead are memoized. Returns
/// `NoOrder` only when the search space is exhausted (or a static
/// precedence conflict rules out every order) and `Unknown` once `budget`
/// extensions have been tried.
pub fn find_lq_order(pg: &Arc<PowerGenerators>, budget: u64) -> SearchResult {
    search(pg, budget, false, None)
}

/// Backtracking search that always tries candidates in the order of
/// `preferred` (a permutation of generator indices). The result is the
/// lexicographically first linear-quotients order with respect to
/// `preferred`, so it agrees with `preferred` on the longest possible
/// prefix.
pub fn find_lq_order_near(
    pg: &Arc<PowerGenerators>,
    preferred: &[usize],
    budget: u64,
) -> SearchResult {
    search(pg, budget, false, Some(preferred))
}

/// The same extension rule without backtracking: always take the first
/// candidate. `NoOrder` is never reported; a dead end is `Unknown`.
pub fn greedy_lq_order(pg: &Arc<PowerGenerators>) -> SearchResult {
    search(pg, u64::MAX, true, None)
}

fn require_verified(o: &GeneratorOrdering) -> Result<()> {
    match verify_linear_quotients(o).witness {
        Some(w) => Err(Error::OrderFailsVerification { t: w.t, i: w.i }),
        None => Ok(()),
    }
}

fn duplicate_names(names: &[String], x: VariableIndex) -> Vec<String> {
    let mut out = names.to_vec();
    out.push(format!("{}'", names[x]));
    out
}

/// The order on the generators of `(I^x)^s` obtained by inserting, right
/// after each `u` of `o`, the monomials `u y/x, ..., u y^d/x^d`
/// (`d = deg_x u`). The input must verify; if `x` divides no generator of
/// `I`, the input order is returned.
pub fn duplication_order(o: &GeneratorOrdering, x: VariableIndex) -> Result<GeneratorOrdering> {
    let pg = o.base();
    if x >= pg.nvars() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: pg.nvars(),
        });
    }
    require_verified(o)?;
    let dup = duplicate_ideal(pg.base(), x)?;
    if dup.len() == pg.base().len() {
        return Ok(o.clone().with_provenance(Provenance::Duplication));
    }
    let y = pg.nvars();
    let target = Arc::new(pg.rebase(dup, duplicate_names(pg.names(), x), pg.q())?);
    let mut sequence = Vec::with_capacity(target.len());
    for u in o.monomials() {
        let u = u.extended(y + 1);
        let added = expansion_new_generators(&u, x, y);
        sequence.push(u);
        sequence.extend(added);
    }
    GeneratorOrdering::from_monomials(target, &sequence, Provenance::Duplication)
}

/// Completion of the expansion order for new generators that agree on
/// `mu`, `deg_Z`, `|deg_x - deg_y|` and the exterior part.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Larger `deg_x` first, then lexicographically larger first.
    #[default]
    XHeavyFirst,
    /// Larger `deg_y` first, then lexicographically larger first.
    YHeavyFirst,
    LexDescending,
    LexAscending,
}

impl TieBreak {
    pub const ALL: [TieBreak; 4] = [
        TieBreak::XHeavyFirst,
        TieBreak::YHeavyFirst,
        TieBreak::LexDescending,
        TieBreak::LexAscending,
    ];

    fn compare(self, a: &Monomial, b: &Monomial, x: usize, y: usize) -> std::cmp::Ordering {
        match self {
            TieBreak::XHeavyFirst => b.deg_var(x).cmp(&a.deg_var(x)).then_with(|| b.cmp(a)),
            TieBreak::YHeavyFirst => b.deg_var(y).cmp(&a.deg_var(y)).then_with(|| b.cmp(a)),
            TieBreak::LexDescending => b.cmp(a),
            TieBreak::LexAscending => a.cmp(b),
        }
    }
}

impl std::str::FromStr for TieBreak {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x-heavy-first" => Ok(TieBreak::XHeavyFirst),
            "y-heavy-first" => Ok(TieBreak::YHeavyFirst),
            "lex-descending" => Ok(TieBreak::LexDescending),
            "lex-ascending" => Ok(TieBreak::LexAscending),
            other => Err(Error::UnknownFixture(other.to_string())),
        }
    }
}

/// The data fixed when expanding `G` at `x`: the new vertex `y = n`, the
/// partition `Z = {x, y}`, `A = N(x)`, `B = V \ N[x]`, and the powers of
/// `I(G^x)` needed to evaluate `mu`.
#[derive(Clone, Debug)]
pub struct ExpansionContext {
    pub x: Vertex,
    pub y: Vertex,
    pub z_set: VertexSet,
    pub a_set: VertexSet,
    pub b_set: VertexSet,
    pub s: usize,
    levels: Vec<PowerGenerators>,
}

impl ExpansionContext {
    pub fn new(g: &Graph, x: Vertex, s: usize, cap: u128) -> Result<Self> {
        let a_set = g.neighborhood(x, false)?;
        let gx = g.duplicate_vertex(x)?;
        let y = g.n();
        let b_set = gx
            .vertices()
            .difference(gx.neighborhood(x, true)?)
            .difference([y].into_iter().collect());
        let gens = EdgeIdeal::new(gx.clone()).generators();
        let levels = (0..=s)
            .map(|j| PowerGenerators::with_nvars(gens.clone(), gx.n(), j, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpansionContext {
            x,
            y,
            z_set: [x, y].into_iter().collect(),
            a_set,
            b_set,
            s,
            levels,
        })
    }

    /// `min { i : w / (xy)^i` is a generator of `I(G^x)^(s-i) }`.
    pub fn mu(&self, w: &Monomial) -> Result<usize> {
        let xy = Monomial::from_vars(&[self.x, self.y], w.nvars());
        let mut rest = w.clone();
        for i in 0..=self.s {
            if self.levels[self.s - i].index_of(&rest).is_some() {
                return Ok(i);
            }
            match rest.checked_div(&xy) {
                Some(next) => rest = next,
                None => break,
            }
        }
        Err(Error::NotAGenerator(w.render_vector()))
    }
}

/// The order of the generators of `I(G^[x])^s` built from a verified order
/// `o` of `I(G)^s`: the duplication order of `o` at `x`, followed by the
/// remaining generators sorted by `mu` ascending, `deg_Z` ascending,
/// `|deg_x - deg_y|` ascending, the exterior part lexicographically
/// descending under `b_order`, and finally `tie`. `b_order` lists `B`
/// (default ascending). Rejects `x` whose exterior `B` is not independent.
pub fn expansion_order(
    g: &Graph,
    o: &GeneratorOrdering,
    x: Vertex,
    b_order: Option<&[Vertex]>,
    tie: TieBreak,
) -> Result<GeneratorOrdering> {
    let n = g.n();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let mut expected = EdgeIdeal::new(g.clone()).generators();
    let mut actual = o.base().base().to_vec();
    expected.sort();
    actual.sort();
    if expected != actual || o.base().nvars() != n {
        return Err(Error::BaseMismatch);
    }
    let s = o.base().q();
    let exterior = g.vertices().difference(g.neighborhood(x, true)?);
    let expanded = g.expand_vertex(x)?;
    if !g.is_independent(exterior) || !expanded.is_gapfree() {
        return Err(Error::ExpansionNotGapfree { vertex: x });
    }
    let b_order: Vec<Vertex> = match b_order {
        Some(order) => {
            let mut sorted = order.to_vec();
            sorted.sort_unstable();
            if sorted != exterior.to_vec() {
                return Err(Error::BadExteriorOrder {
                    expected: exterior.to_vec(),
                });
            }
            order.to_vec()
        }
        None => exterior.to_vec(),
    };

    let dup = duplication_order(o, x)?;
    let prefix: Vec<Monomial> = dup.monomials().map(|m| m.extended(n + 1)).collect();
    let seen: HashSet<&Monomial> = prefix.iter().collect();
    let target = Arc::new(EdgeIdeal::new(expanded).power_with_cap(s, o.base().cap())?);
    let ctx = ExpansionContext::new(g, x, s, o.base().cap())?;
    let y = ctx.y;

    let mut keyed = Vec::new();
    for w in target.gens().iter().filter(|w| !seen.contains(w)) {
        let mu = ctx.mu(w)?;
        let dx = w.deg_var(x);
        let dy = w.deg_var(y);
        let b_part: Vec<u16> = b_order.iter().map(|&b| w.deg_var(b)).collect();
        keyed.push(((mu, dx + dy, dx.abs_diff(dy), Reverse(b_part)), w.clone()));
    }
    keyed.sort_by(|(ka, a), (kb, b)| ka.cmp(kb).then_with(|| tie.compare(a, b, x, y)));

    let mut sequence = prefix.clone();
    sequence.extend(keyed.into_iter().map(|(_, w)| w));
    GeneratorOrdering::from_monomials(target, &sequence, Provenance::Expansion)
}

/// Every ordering of `B` for which [`expansion_order`] is defined.
pub fn exterior_orders(g: &Graph, x: Vertex) -> Result<Vec<Vec<Vertex>>> {
    use itertools::Itertools;
    let exterior = g.vertices().difference(g.neighborhood(x, true)?).to_vec();
    let k = exterior.len();
    Ok(exterior.into_iter().permutations(k).collect())
}

/// Per-generator positions in `o`, keyed by generator index.
pub fn positions(o: &GeneratorOrdering) -> HashMap<usize, usize> {
    o.sequence()
        .iter()
        .enumerate()
        .map(|(pos, &i)| (i, pos))
        .collect()
}
