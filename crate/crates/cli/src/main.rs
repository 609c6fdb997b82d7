//! `oddprism` — constructions, containment checks, Turán formulas,
//! decomposition families, exhaustive searches and claim verification from
//! one binary.
//!
//! Exit codes: 0 on success (check: pattern-free; verify: all pass),
//! 1 when a containment is found or a verification fails, 2 on usage errors.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use oddprism::constructions::ConstructionSpec;
use oddprism::containment::{self, Pattern};
use oddprism::decomposition;
use oddprism::formulas;
use oddprism::graph::Graph;
use oddprism::graph6;
use oddprism::search::{self, SearchConfig, SearchMode};
use oddprism::verify::{self, Profile};

const THREADS_ENV: &str = "ODDPRISM_THREADS";

#[derive(Parser)]
#[command(name = "oddprism", version, about, max_term_width = 100)]
struct Cli {
    /// Worker threads (default: ODDPRISM_THREADS, then available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and print it
    Construct(ConstructArgs),
    /// Test whether a host graph contains a pattern (exit 1 when it does)
    Check(CheckArgs),
    /// Evaluate a closed-form Turán value
    Formula(FormulaArgs),
    /// Compute a decomposition family
    Decomp(DecompArgs),
    /// Exact Turán search over isomorphism classes
    Search(SearchArgs),
    /// Verify paper claims and write certificates
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction spec, e.g. prism:1, H:9:6, F:8:5:2, P^2:6, T:7:2, G1
    spec: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Host graph: construction spec, graph6 string, or '-' for stdin
    #[arg(long)]
    host: String,
    /// Pattern graph: construction spec or graph6 string
    #[arg(long)]
    pattern: String,
    /// Print an embedding witness when the pattern is found
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct FormulaArgs {
    /// One of: c3prism, p6square, p4, path, main, mantel
    name: String,
    /// Graph order n
    n: usize,
    /// Path order k (only for `path`)
    k: Option<usize>,
    #[arg(long, default_value = "text")]
    format: TextFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Args)]
struct DecompArgs {
    /// Graph L: construction spec or graph6
    #[arg(long)]
    graph: String,
    /// Candidate-size bound (vertices)
    #[arg(long, default_value_t = 4)]
    m_max: usize,
    /// Embedding-size bound t; defaults to |V(L)|
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long, default_value = "text")]
    format: TextFormat,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph order
    #[arg(long)]
    n: usize,
    /// Forbidden pattern (repeatable): construction spec or graph6
    #[arg(long, required = true)]
    forbid: Vec<String>,
    /// Collect the complete extremal set
    #[arg(long)]
    enumerate: bool,
    /// Lower-bound seed: a number, `auto`, or `none`
    #[arg(long, default_value = "auto")]
    seed_bound: String,
    /// Node budget; exceeding it yields a non-exhaustive result
    #[arg(long)]
    budget: Option<u64>,
    /// Override the order-10 feasibility guard (order 11, max-only, seeded)
    #[arg(long)]
    allow_large: bool,
    #[arg(long, default_value = "text")]
    format: TextFormat,
    /// Also write the extremal set as graph6 lines to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim: thm1.2, thm1.3, thm5.1, lem3.1, lem3.2, sec4, formulas, all
    claim: String,
    /// Single order (thm5.1) or order bound (thm1.2/thm1.3)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "quick")]
    profile: ProfileArg,
    /// Additionally run the order-10 maximum (max-only) in `all`
    #[arg(long)]
    with_n10: bool,
    /// Write the certificate bundle to this directory
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn threads_from(cli_threads: Option<usize>) -> usize {
    cli_threads
        .or_else(|| {
            std::env::var(THREADS_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0)
}

fn parse_graph(input: &str) -> anyhow::Result<Graph> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading graph6 from stdin")?;
        let line = buf.trim();
        return graph6::decode(line).with_context(|| format!("decoding graph6 {line:?}"));
    }
    if let Ok(spec) = ConstructionSpec::parse(input) {
        return Ok(spec.build()?);
    }
    graph6::decode(input)
        .map_err(|e| anyhow!("`{input}` is neither a construction spec nor valid graph6: {e}"))
}

fn print_graph(g: &Graph, format: GraphFormat) {
    match format {
        GraphFormat::Graph6 => println!("{}", graph6::encode(g)),
        GraphFormat::Edges => {
            println!("n={} e={}", g.order(), g.edge_count());
            let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("{}", edges.join(" "));
        }
        GraphFormat::Json => {
            let doc = serde_json::json!({
                "order": g.order(),
                "edge_count": g.edge_count(),
                "edges": g.edges(),
                "graph6": graph6::encode(g),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let threads = threads_from(cli.threads);
    match cli.command {
        Command::Construct(args) => {
            let spec = ConstructionSpec::parse(&args.spec)?;
            let g = spec.build()?;
            print_graph(&g, args.format);
            Ok(0)
        }
        Command::Check(args) => {
            let host = parse_graph(&args.host)?;
            let pattern_graph = parse_graph(&args.pattern)?;
            let pattern = Pattern::new(pattern_graph);
            match containment::contains(&host, &pattern) {
                Some(embedding) => {
                    if args.witness {
                        println!(
                            "contains: embedding {}",
                            serde_json::to_string(&embedding).expect("serializable")
                        );
                    } else {
                        println!("contains");
                    }
                    Ok(1)
                }
                None => {
                    println!("free");
                    Ok(0)
                }
            }
        }
        Command::Formula(args) => run_formula(args),
        Command::Decomp(args) => {
            let l = parse_graph(&args.graph)?;
            let t_max = args.t_max.unwrap_or_else(|| decomposition::default_t_max(&l));
            let family = decomposition::decomposition_family(&l, args.m_max, t_max)?;
            match args.format {
                TextFormat::Text => {
                    for cf in &family {
                        println!("{}", cf.graph6());
                    }
                }
                TextFormat::Json => {
                    let doc = serde_json::json!({
                        "graph": args.graph,
                        "m_max_vertices": args.m_max,
                        "t_max": t_max,
                        "family": family.iter().map(|cf| cf.graph6()).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            Ok(0)
        }
        Command::Search(args) => run_search(args, threads),
        Command::Verify(args) => run_verify(args, threads),
    }
}

fn run_formula(args: FormulaArgs) -> anyhow::Result<i32> {
    let fv = match args.name.as_str() {
        "c3prism" => formulas::c3prism_turan(args.n),
        "p6square" => formulas::p6square_turan(args.n),
        "p4" => formulas::p4_turan(args.n),
        "path" => {
            let k = args.k.ok_or_else(|| anyhow!("`path` needs the path order k"))?;
            formulas::path_turan(args.n, k)?
        }
        "mantel" => {
            match args.format {
                TextFormat::Text => println!("{}", formulas::mantel(args.n)),
                TextFormat::Json => println!(
                    "{}",
                    serde_json::json!({ "name": "mantel", "n": args.n, "value": formulas::mantel(args.n) })
                ),
            }
            return Ok(0);
        }
        "main" => {
            let mt = formulas::main_theorem_value(args.n);
            match args.format {
                TextFormat::Text => {
                    println!("{}", mt.value);
                    println!(
                        "maximizing parts: {:?}; family: {}",
                        mt.maximizers,
                        family_names(&mt.family)
                    );
                }
                TextFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "name": "main",
                        "n": args.n,
                        "value": mt.value,
                        "maximizing_parts": mt.maximizers,
                        "family": mt.family.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    }))
                    .expect("serializable")
                ),
            }
            return Ok(0);
        }
        other => bail!("unknown formula `{other}` (expected c3prism, p6square, p4, path, main, mantel)"),
    };
    match args.format {
        TextFormat::Text => {
            println!("{}", fv.value);
            if !fv.family.is_empty() {
                println!("extremal family: {}", family_names(&fv.family));
            }
            if let Some(note) = &fv.exception {
                println!("note: {note}");
            }
        }
        TextFormat::Json => {
            let doc = serde_json::json!({
                "name": args.name,
                "n": args.n,
                "k": args.k,
                "value": fv.value,
                "family": fv.family.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "exception": fv.exception,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(0)
}

fn family_names(specs: &[ConstructionSpec]) -> String {
    specs
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_search(args: SearchArgs, threads: usize) -> anyhow::Result<i32> {
    let mut patterns = Vec::new();
    let mut parsed_specs = Vec::new();
    for f in &args.forbid {
        parsed_specs.push(ConstructionSpec::parse(f).ok());
        patterns.push(Pattern::new(parse_graph(f)?));
    }
    let seed = match args.seed_bound.as_str() {
        "none" => None,
        "auto" => auto_seed(args.n, &parsed_specs, &patterns),
        num => Some(num.parse::<u64>().with_context(|| {
            format!("--seed-bound expects a number, `auto` or `none`, got `{num}`")
        })?),
    };
    if args.n > 10 {
        eprintln!("warning: order {} is beyond the feasibility guard", args.n);
    }
    let mut cfg = SearchConfig::new(args.n, patterns);
    cfg.mode = if args.enumerate {
        SearchMode::EnumerateExtremal
    } else {
        SearchMode::MaxOnly
    };
    cfg.seed_lower_bound = seed;
    cfg.node_budget = args.budget;
    cfg.threads = threads;
    cfg.allow_large = args.allow_large;
    let res = search::turan_exact(&cfg)?;
    if let Some(path) = &args.out {
        let mut lines: Vec<String> = res.extremal.iter().map(|cf| cf.graph6().to_owned()).collect();
        lines.push(String::new());
        std::fs::write(path, lines.join("\n"))?;
    }
    match args.format {
        TextFormat::Text => {
            println!("max_edges: {}", res.max_edges);
            println!("exhaustive: {}", res.exhaustive);
            if args.enumerate {
                println!("extremal classes: {}", res.extremal.len());
                for cf in &res.extremal {
                    println!("{}", cf.graph6());
                }
            }
            eprintln!(
                "nodes: {} pruned: {} wall: {}ms",
                res.stats.nodes_explored, res.stats.pruned_by_bound, res.stats.wall_time_ms
            );
        }
        TextFormat::Json => {
            let doc = serde_json::json!({
                "n": args.n,
                "forbid": args.forbid,
                "seed_lower_bound": seed,
                "max_edges": res.max_edges,
                "exhaustive": res.exhaustive,
                "extremal": res.extremal.iter().map(|cf| cf.graph6()).collect::<Vec<_>>(),
                "stats": {
                    "nodes_explored": res.stats.nodes_explored,
                    "pruned_by_bound": res.stats.pruned_by_bound,
                    "wall_time_ms": res.stats.wall_time_ms,
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(0)
}

/// Derives a certified seed for recognized single-pattern searches: build a
/// predicted extremal construction, confirm it is pattern-free, and use its
/// edge count.
fn auto_seed(n: usize, specs: &[Option<ConstructionSpec>], patterns: &[Pattern]) -> Option<u64> {
    if specs.len() != 1 {
        return None;
    }
    let family = match specs[0].as_ref()? {
        ConstructionSpec::Prism { k: 1 } => formulas::c3prism_turan(n).family,
        ConstructionSpec::PathPower { k: 6, power: 2 } => formulas::p6square_turan(n).family,
        ConstructionSpec::Path { n: k } => formulas::path_turan(n, *k).ok()?.family,
        ConstructionSpec::Prism { k } => formulas_for_large_prism(n, *k),
        _ => return None,
    };
    let witness = family.first()?.build().ok()?;
    if witness.order() != n {
        return None;
    }
    if containment::contains(&witness, &patterns[0]).is_some() {
        return None;
    }
    Some(witness.edge_count() as u64)
}

/// For k >= 2 the closed form is only proven at large n, but the main
/// theorem's constructions are still valid pattern-free seeds.
fn formulas_for_large_prism(n: usize, _k: usize) -> Vec<ConstructionSpec> {
    formulas::main_theorem_value(n).family
}

fn run_verify(args: VerifyArgs, threads: usize) -> anyhow::Result<i32> {
    let profile = match args.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let default_n_max = match profile {
        Profile::Quick => 8,
        Profile::Full => 9,
    };
    let mut report = verify::Report::new(match profile {
        Profile::Quick => "quick",
        Profile::Full => "full",
    });
    let start = std::time::Instant::now();
    match args.claim.as_str() {
        "all" => {
            report = verify::run_all(profile, args.with_n10, threads)?;
        }
        "thm1.2" => {
            let certs = verify::verify_theorem_1_2(args.n.unwrap_or(default_n_max), threads)?;
            report.add_group("thm1.2", certs, start.elapsed().as_millis());
        }
        "thm1.3" => {
            let certs = verify::verify_theorem_1_3(args.n.unwrap_or(default_n_max), threads)?;
            report.add_group("thm1.3", certs, start.elapsed().as_millis());
        }
        "thm5.1" => {
            let cert = verify::verify_theorem_5_1(args.n.unwrap_or(9), threads)?;
            report.push_cert(cert, start.elapsed().as_millis());
        }
        "lem3.1" => {
            let certs = verify::verify_lemma_3_1(2)?;
            report.add_group("lem3.1", certs, start.elapsed().as_millis());
        }
        "lem3.2" => {
            let certs = verify::verify_lemma_3_2(2)?;
            report.add_group("lem3.2", certs, start.elapsed().as_millis());
        }
        "sec4" => {
            let certs = verify::verify_section_4_lemmas()?;
            report.add_group("sec4", certs, start.elapsed().as_millis());
        }
        "formulas" => {
            let certs = verify::verify_formulas()?;
            report.add_group("formulas", certs, start.elapsed().as_millis());
        }
        other => bail!("unknown claim `{other}`"),
    }
    report.sort();
    for c in &report.certificates {
        println!("{}: {}", c.claim_id, c.verdict);
        if let Some(extremal) = c.observed.get("extremal").and_then(|v| v.as_array()) {
            println!(
                "  extremal graphs ({}): {}",
                extremal.len(),
                extremal
                    .iter()
                    .filter_map(|v| v.as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    let (pass, fail, unverified) = report.counts();
    println!("summary: {pass} pass, {fail} fail, {unverified} unverified-regime");
    if let Some(dir) = &args.out {
        let files = report.write_bundle(dir)?;
        eprintln!("wrote {} certificate files to {}", files.len(), dir.display());
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}
