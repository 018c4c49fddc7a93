use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use linquo::harness::{self, repro::DEFAULT_SEED, ScanOptions};
use linquo::orderings::{admissibility_violation, compatible_chain, guided_square_order};
use linquo::{
    admissible_order, duplication_order, efficient_ordering, expansion_order, find_lq_order,
    greedy_lq_order, verify_linear_quotients, EdgeOrdering, Error, GeneratorOrdering, Graph,
    PatternId, PowerGenerators, SearchOutcome, SearchResult, TieBreak, DEFAULT_CAP,
};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "linquo",
    version,
    about = "Linear-quotients orders of powers of edge ideals"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Node budget for order searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    /// Largest number of edge multisets a power may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file or built-in name (c5, fig2, fig4, gamma7, 2k2, p3, c5k<n>).
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of I(G)^q with their edge factorizations.
    Powers {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        q: usize,
        /// List every generator.
        #[arg(long)]
        list: bool,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Verify an order of I(G)^q.
    Verify {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        q: usize,
        /// Order file or builtin:<name>.
        #[arg(long)]
        order: String,
    },
    /// Search for a linear-quotients order of I(G)^q.
    FindOrder {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        q: usize,
        /// Never backtrack.
        #[arg(long)]
        greedy: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Efficient order of I^s from an order of a lower power.
    EfficientOrder {
        #[command(flatten)]
        g: GraphArg,
        /// Order file or builtin:<name>; its power is read from the file.
        #[arg(long)]
        base_order: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// An admissible edge order, one edge index per line.
    AdmissibleOrder {
        #[command(flatten)]
        g: GraphArg,
        /// Check this edge order instead of constructing one.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Compatible orders of I^2 .. I^q.
    CompatibleOrders {
        #[command(flatten)]
        g: GraphArg,
        /// Edge order file or `auto` (admissible order).
        #[arg(long, default_value = "auto")]
        edge_order: String,
        /// Order file of I^2, builtin:<name>, or `auto` (guided search).
        #[arg(long, default_value = "auto")]
        i2_order: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Duplicate a vertex; with an order, also the duplication order.
    Duplicate {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        /// Order file or builtin:<name> of I(G)^q.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Expand a vertex into an edge and order I(G^[x])^s.
    Expand {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        s: usize,
        /// Order file or builtin:<name> of I(G)^s, or `auto` (search).
        #[arg(long, default_value = "auto")]
        order: String,
        /// Comma-separated order of the exterior vertices.
        #[arg(long, value_delimiter = ',')]
        b_order: Option<Vec<String>>,
        #[arg(long, default_value = "x-heavy-first")]
        tie: TieBreak,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Structural properties of a graph.
    Classify {
        #[command(flatten)]
        g: GraphArg,
    },
    /// Classify and search all graphs on n vertices.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q_max: usize,
        /// Every labeled graph instead of one per isomorphism class.
        #[arg(long)]
        labeled: bool,
        /// Write the full JSON results here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify compatible orders through q = 7 (or --q-max).
    Thm64 {
        #[command(flatten)]
        g: GraphArg,
        /// Order file or builtin:<name> of I^2; searched when absent.
        #[arg(long)]
        i2_order: Option<String>,
        #[arg(long, default_value_t = 7)]
        q_max: usize,
    },
    /// Run reproduction cases (all by default).
    Repro {
        /// istanbul, pentagon-powers, fig2, fig4, gamma7, cdcc6, expansion,
        /// thm64-c5, properties, or all.
        #[arg(default_value = "all")]
        case: String,
    },
}

struct Ctx {
    json: bool,
    seed: u64,
    budget: u64,
    cap: u128,
}

type Outcome = Result<u8, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            });
        }
    };
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        budget: cli.budget,
        cap: cli.cap,
    };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if ctx.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::OrderFailsVerification { .. } | Error::ExpansionNotGapfree { .. } => {
                    EXIT_FAIL
                }
                _ => EXIT_USAGE,
            })
        }
    }
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn emit(path: &Option<PathBuf>, o: &GeneratorOrdering) -> Result<(), Error> {
    if let Some(path) = path {
        std::fs::write(path, o.to_text())?;
    }
    Ok(())
}

fn power(g: &Graph, q: usize, ctx: &Ctx) -> Result<Arc<PowerGenerators>, Error> {
    harness::power_of(g, q, ctx.cap)
}

/// The power an order file is written for: the entry count of its first
/// generator line. Built-in orders are orders of squares.
fn order_power(spec: &str) -> Result<usize, Error> {
    if spec.starts_with("builtin:") {
        return Ok(2);
    }
    let text = std::fs::read_to_string(spec)?;
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().count())
        .ok_or(Error::OrderParse {
            line: 0,
            msg: "empty order file".into(),
        })
}

fn witness_json(o: &GeneratorOrdering) -> (bool, Value) {
    let lq = verify_linear_quotients(o);
    let w = lq.witness.map(|w| {
        json!({
            "t": w.t,
            "i": w.i,
            "colon": o.base().render(&w.colon),
            "u_t": o.base().render(o.at(w.t)),
            "u_i": o.base().render(o.at(w.i)),
        })
    });
    (lq.pass, w.unwrap_or(Value::Null))
}

fn report_order(ctx: &Ctx, label: &str, o: &GeneratorOrdering, extra: Value) -> u8 {
    let start = Instant::now();
    let (pass, witness) = witness_json(o);
    let elapsed_ms = start.elapsed().as_millis();
    if ctx.json {
        let mut v = json!({
            "pass": pass,
            "witness": witness,
            "elapsed_ms": elapsed_ms,
            "q": o.base().q(),
            "count": o.len(),
            "provenance": o.provenance().to_string(),
            "order": o.rendered(),
        });
        if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
            map.extend(more);
        }
        print_json(&v);
    } else if pass {
        println!(
            "{label}: PASS ({} generators of I^{})",
            o.len(),
            o.base().q()
        );
    } else {
        println!(
            "{label}: FAIL at t = {}, i = {} (0-based): {} : {} = {}",
            witness["t"], witness["i"], witness["u_i"], witness["u_t"], witness["colon"]
        );
    }
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn search_exit(
    ctx: &Ctx,
    pg: &PowerGenerators,
    result: &SearchResult,
    path: &Option<PathBuf>,
) -> Outcome {
    match &result.outcome {
        SearchOutcome::Found(o) => {
            emit(path, o)?;
            let code = report_order(
                ctx,
                "order found",
                o,
                json!({ "verdict": "yes", "nodes": result.nodes }),
            );
            if !ctx.json && path.is_none() {
                print!("{}", o.to_text());
            }
            Ok(code)
        }
        SearchOutcome::NoOrder => {
            if ctx.json {
                print_json(&json!({ "verdict": "no", "count": pg.len(), "nodes": result.nodes }));
            } else {
                println!("no linear-quotients order ({} nodes)", result.nodes);
            }
            Ok(EXIT_FAIL)
        }
        SearchOutcome::Unknown => {
            if ctx.json {
                print_json(
                    &json!({ "verdict": "unknown", "count": pg.len(), "budget": ctx.budget }),
                );
            } else {
                println!("budget of {} nodes exhausted", ctx.budget);
            }
            Ok(EXIT_BUDGET)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Powers {
            g,
            q,
            list,
            count_only,
        } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let pg = power(&graph, q, ctx)?;
            let gens: Vec<Value> = (0..pg.len())
                .map(|i| {
                    let fs: Vec<&[usize]> = pg
                        .edge_factorizations(i)
                        .iter()
                        .map(|f| f.edges())
                        .collect();
                    json!({ "monomial": pg.render(pg.gen(i)), "factorizations": fs })
                })
                .collect();
            if ctx.json {
                let mut v = json!({ "q": q, "count": pg.len() });
                if !count_only {
                    v["gens"] = Value::Array(gens);
                }
                print_json(&v);
            } else {
                println!("{}", pg.len());
                if list && !count_only {
                    for gen in &gens {
                        println!(
                            "{} {}",
                            gen["monomial"].as_str().unwrap(),
                            gen["factorizations"]
                        );
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { g, q, order } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let o = harness::resolve_order(&order, &graph, q, ctx.cap)?;
            Ok(report_order(ctx, "verify", &o, json!({})))
        }
        Command::FindOrder { g, q, greedy, emit } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let pg = power(&graph, q, ctx)?;
            let result = if greedy {
                greedy_lq_order(&pg)
            } else {
                find_lq_order(&pg, ctx.budget)
            };
            search_exit(ctx, &pg, &result, &emit)
        }
        Command::EfficientOrder {
            g,
            base_order,
            s,
            emit: path,
        } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let base =
                harness::resolve_order(&base_order, &graph, order_power(&base_order)?, ctx.cap)?;
            let o = efficient_ordering(&base, s)?;
            emit(&path, &o)?;
            let code = report_order(ctx, &format!("efficient order, s = {s}"), &o, json!({}));
            if !ctx.json && path.is_none() {
                print!("{}", o.to_text());
            }
            Ok(code)
        }
        Command::AdmissibleOrder { g, check } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let eo = match check {
                Some(path) => {
                    EdgeOrdering::parse(&std::fs::read_to_string(path)?, graph.edge_count())?
                }
                None => admissible_order(&graph),
            };
            let violation = admissibility_violation(&graph, &eo)?;
            let l = |v| graph.label(v).to_string();
            if ctx.json {
                print_json(&json!({
                    "edge_order": eo.sequence(),
                    "rendered": eo.render(&graph),
                    "admissible": violation.is_none(),
                    "violation": violation.map(|(a, b, c, d)| [l(a), l(b), l(c), l(d)]),
                }));
            } else {
                for e in eo.sequence() {
                    println!("{e}");
                }
                match violation {
                    None => eprintln!("admissible: {}", eo.render(&graph)),
                    Some((a, b, c, d)) => eprintln!(
                        "not admissible: {}{} precedes {}{} but neither endpoint has all edges first",
                        l(a), l(b), l(c), l(d)
                    ),
                }
            }
            Ok(if violation.is_none() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::CompatibleOrders {
            g,
            edge_order,
            i2_order,
            q,
            emit: path,
        } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let eo = if edge_order == "auto" {
                admissible_order(&graph)
            } else {
                EdgeOrdering::parse(&std::fs::read_to_string(&edge_order)?, graph.edge_count())?
            };
            let square = if i2_order == "auto" {
                let result = guided_square_order(&graph, &eo, ctx.budget, ctx.cap)?;
                match result.outcome {
                    SearchOutcome::Found(o) => o,
                    _ => {
                        let pg = power(&graph, 2, ctx)?;
                        return search_exit(ctx, &pg, &result, &None);
                    }
                }
            } else {
                harness::resolve_order(&i2_order, &graph, 2, ctx.cap)?
            };
            let chain = compatible_chain(&graph, &eo, &square, q)?;
            let mut levels = Vec::new();
            let mut all_pass = true;
            for o in &chain {
                let (pass, witness) = witness_json(o);
                all_pass &= pass;
                levels.push(json!({ "q": o.base().q(), "count": o.len(), "pass": pass, "witness": witness }));
                if !ctx.json {
                    let verdict = if pass {
                        "PASS".to_string()
                    } else {
                        format!("FAIL {witness}")
                    };
                    println!("q = {}: {} generators, {verdict}", o.base().q(), o.len());
                }
            }
            let top = chain.last().expect("chain is nonempty");
            emit(&path, top)?;
            if ctx.json {
                print_json(
                    &json!({ "edge_order": eo.render(&graph), "pass": all_pass, "levels": levels }),
                );
            }
            Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Duplicate {
            g,
            vertex,
            order,
            q,
            emit: path,
        } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let x = harness::resolve_vertex(&graph, &vertex)?;
            let dup = graph.duplicate_vertex(x)?;
            match order {
                None => {
                    if ctx.json {
                        print_json(
                            &json!({ "n": dup.n(), "labels": dup.labels(), "edges": dup.edges() }),
                        );
                    } else {
                        print!("{}", dup.to_text());
                    }
                    Ok(EXIT_PASS)
                }
                Some(spec) => {
                    let o = harness::resolve_order(&spec, &graph, q, ctx.cap)?;
                    let d = duplication_order(&o, x)?;
                    emit(&path, &d)?;
                    Ok(report_order(
                        ctx,
                        &format!("duplication order at {}", graph.label(x)),
                        &d,
                        json!({}),
                    ))
                }
            }
        }
        Command::Expand {
            g,
            vertex,
            s,
            order,
            b_order,
            tie,
            emit: path,
        } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let x = harness::resolve_vertex(&graph, &vertex)?;
            let o = if order == "auto" {
                let pg = power(&graph, s, ctx)?;
                let result = find_lq_order(&pg, ctx.budget);
                match result.outcome {
                    SearchOutcome::Found(o) => o,
                    _ => return search_exit(ctx, &pg, &result, &None),
                }
            } else {
                harness::resolve_order(&order, &graph, s, ctx.cap)?
            };
            let b = b_order
                .map(|names| {
                    names
                        .iter()
                        .map(|v| harness::resolve_vertex(&graph, v))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?;
            let e = expansion_order(&graph, &o, x, b.as_deref(), tie)?;
            emit(&path, &e)?;
            Ok(report_order(
                ctx,
                &format!("expansion order at {}", graph.label(x)),
                &e,
                json!({}),
            ))
        }
        Command::Classify { g } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let patterns: Vec<Value> = PatternId::ALL
                .iter()
                .map(|&p| json!({ "pattern": format!("{p:?}").to_lowercase(), "induced": graph.contains_induced(p) }))
                .collect();
            let v = json!({
                "n": graph.n(),
                "edges": graph.edge_count(),
                "gapfree": graph.is_gapfree(),
                "chordal": graph.is_chordal(),
                "cochordal": graph.is_cochordal(),
                "cdcc": graph.is_cdcc(),
                "patterns": patterns,
                "matching_number": graph.matching_number().ok(),
                "canonical_code": graph.canonical_code().ok(),
            });
            if ctx.json {
                print_json(&v);
            } else if let Value::Object(map) = v {
                for (k, val) in map {
                    println!("{k}: {val}");
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Scan {
            n,
            q_max,
            labeled,
            out,
        } => {
            let mut opts = ScanOptions::new(n, q_max, ctx.budget);
            opts.cap = ctx.cap;
            if labeled {
                opts = opts.labeled();
            }
            let results = harness::scan_small_graphs(&opts)?;
            let count =
                |f: &dyn Fn(&harness::ScanResult) -> bool| results.iter().filter(|r| f(r)).count();
            let per_q: Vec<Value> = (1..=q_max)
                .map(|q| {
                    let by = |label: &str| {
                        results
                            .iter()
                            .filter(|r| r.powers[q - 1].verdict.label() == label)
                            .count()
                    };
                    json!({
                        "q": q,
                        "yes": by("yes"),
                        "no": by("no"),
                        "unknown": by("unknown"),
                        "greedy_found": results.iter().filter(|r| r.powers[q - 1].greedy).count(),
                    })
                })
                .collect();
            let summary = json!({
                "n": n,
                "graphs": results.len(),
                "canonical": !labeled,
                "gapfree": count(&|r| r.gapfree),
                "cochordal": count(&|r| r.cochordal),
                "cdcc": count(&|r| r.cdcc),
                "yes_but_not_gapfree": count(&|r| r.any_yes() && !r.gapfree),
                "per_q": per_q,
            });
            if let Some(path) = out {
                let full = serde_json::to_string_pretty(&results).expect("results serialize");
                std::fs::write(path, full)?;
            }
            if ctx.json {
                print_json(&summary);
            } else if let Value::Object(map) = &summary {
                for (k, val) in map {
                    println!("{k}: {val}");
                }
            }
            let unknown = results
                .iter()
                .any(|r| r.powers.iter().any(|p| p.verdict.label() == "unknown"));
            Ok(if unknown { EXIT_BUDGET } else { EXIT_PASS })
        }
        Command::Thm64 { g, i2_order, q_max } => {
            let graph = harness::resolve_graph(&g.graph)?;
            let i2 = i2_order
                .map(|spec| harness::resolve_order(&spec, &graph, 2, ctx.cap))
                .transpose()?;
            let r =
                harness::check_theorem64_premises(&graph, i2.as_ref(), ctx.budget, ctx.cap, q_max)?;
            if ctx.json {
                print_json(&serde_json::to_value(&r).expect("reports serialize"));
            } else {
                println!("edge order: {}", r.edge_order);
                for l in &r.levels {
                    println!(
                        "q = {}: {} generators, {}",
                        l.q,
                        l.count,
                        if l.pass { "PASS" } else { "FAIL" }
                    );
                }
                println!("computed: {}", r.computed);
                if let Some(implied) = &r.implied_by {
                    println!("implied: {implied}");
                }
            }
            Ok(if r.first_failure.is_some() {
                EXIT_FAIL
            } else if matches!(r.square, harness::thm64::Square::BudgetExhausted { .. }) {
                EXIT_BUDGET
            } else {
                EXIT_PASS
            })
        }
        Command::Repro { case } => {
            let cases: Vec<&str> = if case == "all" {
                harness::CASES.iter().map(|(c, _)| *c).collect()
            } else {
                vec![case.as_str()]
            };
            let mut reports = Vec::new();
            for c in cases {
                let r = harness::repro(c, ctx.seed)?;
                if !ctx.json {
                    println!(
                        "criterion {} ({}): {} [{} ms]",
                        r.criterion,
                        r.case,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.elapsed_ms
                    );
                    for check in r.failed_checks() {
                        println!("  failed: {}: {}", check.name, check.detail);
                    }
                }
                reports.push(r);
            }
            if ctx.json {
                print_json(&serde_json::to_value(&reports).expect("reports serialize"));
            }
            Ok(if reports.iter().all(|r| r.pass) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
    }
}
