//! Property tests against brute-force reference implementations written
//! here, independently of the library code they check.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use proptest::prelude::*;

use linquo::linquot::exterior_orders;
use linquo::orderings::{
    admissibility_violation, compatible_chain, efficient_chain, guided_square_order,
};
use linquo::{
    admissible_order, duplication_order, efficient_ordering, expansion_order, find_lq_order,
    fixtures, is_admissible, verify_linear_quotients, EdgeIdeal, EdgeOrdering, GeneratorOrdering,
    Graph, Monomial, PatternId, PowerGenerators, Provenance, SearchOutcome, TieBreak, VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs))
            .prop_map(|(n, bits)| Graph::from_pair_bits(n, bits).unwrap())
    })
}

fn power(g: &Graph, q: usize) -> Arc<PowerGenerators> {
    Arc::new(EdgeIdeal::new(g.clone()).power(q).unwrap())
}

fn exps(m: &Monomial) -> Vec<u16> {
    m.exponents().to_vec()
}

/// Minimal generators of `(u_1, ..., u_{t-1}) : u_t` are all variables,
/// for every `t`.
fn reference_lq(gens: &[Vec<u16>]) -> bool {
    (1..gens.len()).all(|t| {
        let colons: Vec<Vec<u16>> = gens[..t]
            .iter()
            .map(|g| {
                g.iter()
                    .zip(&gens[t])
                    .map(|(&a, &b)| a.saturating_sub(b))
                    .collect()
            })
            .collect();
        colons.iter().all(|c| {
            let degree: u16 = c.iter().sum();
            degree == 1
                || colons
                    .iter()
                    .any(|d| d != c && d.iter().zip(c).all(|(x, y)| x <= y))
        })
    })
}

fn reference_lq_order(o: &GeneratorOrdering) -> bool {
    reference_lq(&o.monomials().map(exps).collect::<Vec<_>>())
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.edges()
        .iter()
        .any(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
}

/// Some vertex subset of size at least 4 induces a cycle: connected with
/// every vertex of degree two.
fn reference_has_long_induced_cycle(g: &Graph) -> bool {
    (4..=g.n()).any(|k| {
        (0..g.n()).combinations(k).any(|set| {
            let deg_two = set
                .iter()
                .all(|&v| set.iter().filter(|&&w| w != v && adjacent(g, v, w)).count() == 2);
            if !deg_two {
                return false;
            }
            let mut seen = vec![set[0]];
            let mut stack = vec![set[0]];
            while let Some(v) = stack.pop() {
                for &w in &set {
                    if adjacent(g, v, w) && !seen.contains(&w) {
                        seen.push(w);
                        stack.push(w);
                    }
                }
            }
            seen.len() == k
        })
    })
}

/// Some injective map of `pattern` into `host` preserves edges and
/// non-edges.
fn reference_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    (0..host.n()).permutations(pattern.n()).any(|map| {
        (0..pattern.n())
            .tuple_combinations()
            .all(|(a, b)| adjacent(pattern, a, b) == adjacent(host, map[a], map[b]))
    })
}

fn reference_gapfree(g: &Graph) -> bool {
    g.edges()
        .iter()
        .tuple_combinations()
        .all(|(&(a, b), &(c, d))| {
            [a, b].iter().any(|x| [c, d].contains(x))
                || adjacent(g, a, c)
                || adjacent(g, a, d)
                || adjacent(g, b, c)
                || adjacent(g, b, d)
        })
}

fn reference_matching_number(g: &Graph) -> usize {
    (0..=g.edge_count())
        .rev()
        .find(|&k| {
            g.edges().iter().combinations(k).any(|es| {
                let vs: HashSet<usize> = es.iter().flat_map(|&&(a, b)| [a, b]).collect();
                vs.len() == 2 * k
            })
        })
        .unwrap()
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn colon_is_quotient_by_gcd(a in prop::collection::vec(0u16..4, 5), b in prop::collection::vec(0u16..4, 5)) {
        let (m, n) = (Monomial::from_exponents(a.clone()), Monomial::from_exponents(b.clone()));
        let colon = m.colon(&n);
        let gcd: Vec<u16> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
        let expected: Vec<u16> = a.iter().zip(&gcd).map(|(x, g)| x - g).collect();
        prop_assert_eq!(exps(&colon), expected);
        prop_assert_eq!(&(&colon * &m.gcd(&n)), &m);
        prop_assert_eq!(m.colon_degree(&n), colon.degree());
        prop_assert_eq!(m.divides(&n), m.colon(&n).is_one());
    }

    #[test]
    fn localization_keeps_only_w(a in prop::collection::vec(0u16..4, 6), w in 0u64..64) {
        let m = Monomial::from_exponents(a.clone());
        let local = m.localize(VertexSet::from_bits(w));
        for (i, (&orig, &kept)) in a.iter().zip(local.exponents()).enumerate() {
            prop_assert_eq!(kept, if w >> i & 1 == 1 { orig } else { 0 });
        }
    }

    #[test]
    fn monomial_text_round_trip(a in prop::collection::vec(0u16..5, 4)) {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let m = Monomial::from_exponents(a);
        prop_assert_eq!(&Monomial::parse(&m.render(&names), &names).unwrap(), &m);
        prop_assert_eq!(&Monomial::parse(&m.render_vector(), &names).unwrap(), &m);
    }

    #[test]
    fn power_generators_match_brute_force(g in graph_strategy(6), q in 1usize..=3) {
        prop_assume!(g.edge_count() > 0);
        let pg = power(&g, q);
        let edges: Vec<Vec<u16>> = g
            .edges()
            .iter()
            .map(|&(u, v)| (0..g.n()).map(|i| u16::from(i == u || i == v)).collect())
            .collect();
        let mut products = BTreeSet::new();
        let mut multisets = 0usize;
        for combo in (0..edges.len()).combinations_with_replacement(q) {
            multisets += 1;
            let mut m = vec![0u16; g.n()];
            for e in combo {
                for (x, y) in m.iter_mut().zip(&edges[e]) {
                    *x += y;
                }
            }
            products.insert(m);
        }
        let ours: BTreeSet<Vec<u16>> = pg.gens().iter().map(exps).collect();
        prop_assert_eq!(ours.len(), pg.len());
        prop_assert_eq!(ours, products);
        let factorizations: usize = (0..pg.len()).map(|i| pg.edge_factorizations(i).len()).sum();
        prop_assert_eq!(factorizations, multisets);
        prop_assert_eq!(pg.multiset_count(), multisets);
        for i in 0..pg.len() {
            prop_assert_eq!(pg.gen(i).degree() as usize, 2 * q);
        }
    }

    #[test]
    fn classifiers_match_brute_force(g in graph_strategy(7)) {
        prop_assert_eq!(g.is_chordal(), !reference_has_long_induced_cycle(&g));
        prop_assert_eq!(g.is_cochordal(), !reference_has_long_induced_cycle(&g.complement()));
        prop_assert_eq!(g.is_gapfree(), reference_gapfree(&g));
        prop_assert_eq!(g.matching_number().unwrap(), reference_matching_number(&g));
        for p in PatternId::ALL {
            prop_assert_eq!(g.contains_induced(p), reference_contains_induced(&g, &p.graph()), "{:?}", p);
        }
        let cdcc = reference_gapfree(&g)
            && PatternId::ALL.iter().all(|p| reference_contains_induced(&g, &p.graph()));
        prop_assert_eq!(g.is_cdcc(), cdcc);
    }

    #[test]
    fn canonical_code_is_a_relabeling_invariant(g in graph_strategy(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        prop_assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
        prop_assert!(g.is_isomorphic(&h).unwrap());
        prop_assert!(g.canonical_form().unwrap().is_isomorphic(&g).unwrap());
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn duplication_and_expansion_edge_counts(g in graph_strategy(7), x in 0usize..7) {
        prop_assume!(x < g.n());
        let deg = g.degree(x);
        let dup = g.duplicate_vertex(x).unwrap();
        prop_assert_eq!((dup.n(), dup.edge_count()), (g.n() + 1, g.edge_count() + deg));
        prop_assert!(!dup.has_edge(x, g.n()));
        let exp = g.expand_vertex(x).unwrap();
        prop_assert_eq!((exp.n(), exp.edge_count()), (g.n() + 1, g.edge_count() + deg + 1));
        prop_assert!(exp.has_edge(x, g.n()));
        for v in 0..g.n() {
            prop_assert_eq!(dup.has_edge(v, g.n()), g.has_edge(v, x));
        }
        // The expansion is gapfree iff G is and the exterior of x is independent.
        let exterior = g.vertices().difference(g.neighborhood(x, true).unwrap());
        prop_assert_eq!(exp.is_gapfree(), g.is_gapfree() && g.is_independent(exterior));
    }

    #[test]
    fn admissible_orders(g in graph_strategy(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let eo = admissible_order(&g);
        prop_assert!(is_admissible(&g, &eo).unwrap());
        let mut shuffled = eo.sequence().to_vec();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let other = EdgeOrdering::new(shuffled, g.edge_count()).unwrap();
        // Reference: every disjoint pair ab > cd has an endpoint of ab
        // whose edges all precede cd.
        let rank = other.ranks();
        let edges = g.edges();
        let all_before = |x: usize, limit: usize| {
            (0..edges.len()).filter(|&e| edges[e].0 == x || edges[e].1 == x).all(|e| rank[e] < limit)
        };
        let reference = (0..edges.len()).tuple_combinations().all(|(e, f)| {
            let (e, f) = if rank[e] < rank[f] { (e, f) } else { (f, e) };
            let ((a, b), (c, d)) = (edges[e], edges[f]);
            [a, b].iter().any(|v| [c, d].contains(v)) || all_before(a, rank[f]) || all_before(b, rank[f])
        });
        prop_assert_eq!(is_admissible(&g, &other).unwrap(), reference);
        prop_assert_eq!(admissibility_violation(&g, &other).unwrap().is_none(), reference);
        prop_assert_eq!(EdgeOrdering::parse(&other.sequence().iter().join("\n"), g.edge_count()).unwrap(), other);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verifier_agrees_with_reference(g in graph_strategy(6), q in 1usize..=2, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        prop_assume!(g.edge_count() > 0);
        let pg = power(&g, q);
        let mut perm: Vec<usize> = (0..pg.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let o = GeneratorOrdering::new(pg.clone(), perm, Provenance::Given).unwrap();
        let report = verify_linear_quotients(&o);
        prop_assert_eq!(report.pass, reference_lq_order(&o));
        if let Some(w) = &report.witness {
            prop_assert!(w.i < w.t);
            prop_assert_eq!(&o.at(w.i).colon(o.at(w.t)), &w.colon);
            // Every earlier position passes.
            let prefix: Vec<Vec<u16>> = o.monomials().take(w.t).map(exps).collect();
            prop_assert!(reference_lq(&prefix));
        }
        let text = o.to_text();
        let back = GeneratorOrdering::parse(pg, &text, Provenance::Given).unwrap();
        prop_assert_eq!(back.sequence(), o.sequence());
    }

    #[test]
    fn search_results_reverify(g in graph_strategy(6), q in 1usize..=2) {
        prop_assume!(g.edge_count() > 0);
        let result = find_lq_order(&power(&g, q), 1_000_000);
        match &result.outcome {
            SearchOutcome::Found(o) => {
                prop_assert!(reference_lq_order(o));
                prop_assert!(g.is_gapfree());
            }
            SearchOutcome::NoOrder => {}
            SearchOutcome::Unknown => prop_assert!(false, "budget exhausted"),
        }
        if q == 1 {
            prop_assert_eq!(result.outcome.order().is_some(), g.is_cochordal());
        }
    }

    #[test]
    fn efficient_and_compatible_orders_are_permutations(g in graph_strategy(6)) {
        prop_assume!(g.edge_count() > 0 && g.is_gapfree());
        let eo = admissible_order(&g);
        let square = guided_square_order(&g, &eo, 1_000_000, linquo::DEFAULT_CAP).unwrap();
        if let SearchOutcome::Found(o2) = square.outcome {
            for o in efficient_chain(&o2, 3).unwrap().iter().chain(&compatible_chain(&g, &eo, &o2, 3).unwrap()) {
                let expected = power(&g, o.base().q());
                let ours: BTreeSet<Vec<u16>> = o.monomials().map(exps).collect();
                let all: BTreeSet<Vec<u16>> = expected.gens().iter().map(exps).collect();
                prop_assert_eq!(o.len(), expected.len());
                prop_assert_eq!(ours, all);
            }
        }
    }
}

/// Verified orders of fixture powers, q <= 3.
fn fixture_orders() -> Vec<(Graph, GeneratorOrdering)> {
    let mut out = Vec::new();
    for name in ["istanbul", "istanbul-alt", "fig2", "fig4-repaired"] {
        let (g, o) = fixtures::named_order(name).unwrap();
        out.push((g.clone(), efficient_ordering(&o, 3).unwrap()));
        out.push((g, o));
    }
    for g in [
        fixtures::p3(),
        fixtures::gamma7(),
        Graph::complete(4).unwrap(),
    ] {
        for q in 1..=2 {
            if let SearchOutcome::Found(o) = find_lq_order(&power(&g, q), 1_000_000).outcome {
                out.push((g.clone(), o));
            }
        }
    }
    out
}

#[test]
fn duplication_preserves_linear_quotients_on_fixtures() {
    let mut checked = 0;
    for (g, o) in fixture_orders() {
        if !verify_linear_quotients(&o).pass {
            continue;
        }
        for x in 0..g.n() {
            let d = duplication_order(&o, x).unwrap();
            let dup = g.duplicate_vertex(x).unwrap();
            assert_eq!(d.len(), power(&dup, o.base().q()).len());
            assert!(verify_linear_quotients(&d).pass, "{:?} at {x}", g.edges());
            assert!(reference_lq_order(&d));
            checked += 1;
        }
    }
    assert!(checked >= 40, "{checked}");
}

#[test]
fn expansion_is_independent_of_exterior_order_and_tie_break() {
    let mut checked = 0;
    for (g, o) in fixture_orders()
        .into_iter()
        .filter(|(_, o)| o.base().q() <= 2)
    {
        for x in 0..g.n() {
            let exterior = g.vertices().difference(g.neighborhood(x, true).unwrap());
            let gate = g.is_independent(exterior) && g.expand_vertex(x).unwrap().is_gapfree();
            for b in exterior_orders(&g, x).unwrap() {
                for tie in TieBreak::ALL {
                    match expansion_order(&g, &o, x, Some(&b), tie) {
                        Ok(e) => {
                            assert!(gate);
                            let lq = verify_linear_quotients(&e);
                            assert!(
                                lq.pass,
                                "{:?} at {x}, {b:?}, {tie:?}: {:?}",
                                g.edges(),
                                lq.witness
                            );
                            checked += 1;
                        }
                        Err(_) => assert!(!gate),
                    }
                }
            }
        }
    }
    assert!(checked >= 60, "{checked}");
}

#[test]
fn two_k2_has_no_order_by_exhaustion() {
    let g = fixtures::two_k2();
    for q in 1..=2 {
        let pg = power(&g, q);
        let n = pg.len();
        let any = (0..n).permutations(n).any(|perm| {
            let gens: Vec<Vec<u16>> = perm.iter().map(|&i| exps(pg.gen(i))).collect();
            reference_lq(&gens)
        });
        assert!(!any);
        assert!(matches!(
            find_lq_order(&pg, u64::MAX).outcome,
            SearchOutcome::NoOrder
        ));
    }
}
