//! splitvd: exact Split Vertex Deletion solving from the command line.
//!
//! Exit codes: 0 feasible / valid run, 1 infeasible verdict, 2 usage or
//! input error. Machine consumers get JSON by default; `--format plain` is
//! for humans. Vertex ids in all input and output are 1-based.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use splitvd::partition::for_each_partition;
use splitvd::report::RunReport;
use splitvd::solver::{
    solve_with_engine, Engine, Parallelism, SolveOptions, SolveOutcome, SvdInstance,
};
use splitvd::split::{recognize_split, SplitRecognition};
use splitvd::testkit::{generate_random_instance, oracle_min_svd, oracle_min_vc, RandomInstanceSpec};
use splitvd::vc::{vc_solve, VcInstance};
use splitvd::Graph;
use std::io::Read;
use std::ops::ControlFlow;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "splitvd", version, about = "Exact Split Vertex Deletion solver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Partition,
    Baseline,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Partition => Engine::Partition,
            EngineArg::Baseline => Engine::Baseline,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

impl std::fmt::Display for EngineArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(engine_name(*self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether deleting at most k vertices leaves a split graph.
    Solve(SolveArgs),
    /// Decide whether a vertex cover of size at most k exists.
    Vc {
        /// Edge-list file, or - for stdin.
        input: String,
        /// Cover budget.
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Report a split certificate or a forbidden induced subgraph.
    Recognize {
        /// Edge-list file, or - for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dump the generated partition family as `C: <ids> | I: <ids>` lines.
    Partitions {
        /// Edge-list file, or - for stdin.
        input: String,
        /// Stop after this many lines.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Emit a reproducible random instance in the edge-list format.
    Gen {
        /// Vertex count.
        #[arg(short, long)]
        n: usize,
        /// Edge probability.
        #[arg(short = 'p', long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Plant a split core with this many noise vertices on top.
        #[arg(long)]
        planted: Option<usize>,
    },
    /// Ground-truth minimum for small inputs by exhaustive search.
    Oracle {
        /// Which minimum to compute.
        #[arg(value_enum)]
        problem: OracleProblem,
        /// Edge-list file, or - for stdin.
        input: String,
    },
    /// Time the engines on planted corpora; CSV on stdout.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleProblem {
    Svd,
    Vc,
}

#[derive(Args)]
struct SolveArgs {
    /// Edge-list file, or - for stdin.
    input: String,
    /// Deletion budget.
    #[arg(short, default_value_t = 0)]
    k: usize,
    /// Loop k = 0, 1, 2, ... until feasible (ignores -k).
    #[arg(long)]
    minimize: bool,
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    kernelize: Toggle,
    #[arg(long, value_enum, default_value_t = EngineArg::Partition)]
    engine: EngineArg,
    /// Worker threads for the per-partition loop; defaults to
    /// SPLITVD_THREADS or sequential.
    #[arg(long)]
    parallel: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Vertex count of the planted instances.
    #[arg(short, long, default_value_t = 30)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    #[arg(long, default_value_t = 6)]
    k_max: usize,
    /// Instances per budget value.
    #[arg(long, default_value_t = 1)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'p', long, default_value_t = 0.5)]
    edge_prob: f64,
    /// Comma-separated engines to run.
    #[arg(long, value_delimiter = ',', default_values_t = [EngineArg::Partition, EngineArg::Baseline])]
    engines: Vec<EngineArg>,
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    kernelize: Toggle,
    #[arg(long)]
    parallel: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("splitvd: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Vc { input, k, format } => cmd_vc(&input, k, format),
        Cmd::Recognize { input, format } => cmd_recognize(&input, format),
        Cmd::Partitions { input, limit } => cmd_partitions(&input, limit),
        Cmd::Gen {
            n,
            edge_prob,
            seed,
            planted,
        } => cmd_gen(n, edge_prob, seed, planted),
        Cmd::Oracle { problem, input } => cmd_oracle(problem, &input),
        Cmd::Bench(args) => cmd_bench(args),
    }
}

fn read_graph(input: &str) -> Result<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    Graph::parse(&text).map_err(|e| anyhow!("parsing {input}: {e}"))
}

fn parallelism(flag: Option<usize>) -> Parallelism {
    let workers = flag.or_else(|| {
        std::env::var("SPLITVD_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    match workers {
        Some(w) if w > 1 => Parallelism::Threads(w),
        _ => Parallelism::Sequential,
    }
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    let engine: Engine = args.engine.into();
    let opts = SolveOptions {
        kernelize: args.kernelize == Toggle::On,
        parallelism: parallelism(args.parallel),
    };

    let run_one = |k: usize| -> Result<SolveOutcome> {
        let inst = SvdInstance {
            graph: graph.clone(),
            budget: k,
        };
        solve_with_engine(&inst, engine, &opts).map_err(|e| anyhow!("{e}"))
    };

    let started = Instant::now();
    let (k_used, mut outcome) = if args.minimize {
        let mut acc = None;
        for k in 0..=graph.n() {
            let out = run_one(k)?;
            let feasible = out.solution.is_some();
            acc = Some(match acc {
                None => (k, out),
                Some((_, prev)) => (k, merge_stats(prev, out)),
            });
            if feasible {
                break;
            }
        }
        acc.expect("k = n is always feasible")
    } else {
        (args.k, run_one(args.k)?)
    };
    outcome.stats.elapsed_ms = started.elapsed().as_millis() as u64;

    if let Some(sol) = &outcome.solution {
        if !sol.is_valid_for(&graph, k_used) {
            return Err(anyhow!("internal error: produced an invalid solution"));
        }
    }
    let report = RunReport::new(k_used, outcome.solution.as_ref(), &outcome.stats);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Plain => print!("{}", report.to_plain()),
    }
    Ok(if report.feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn merge_stats(prev: SolveOutcome, mut cur: SolveOutcome) -> SolveOutcome {
    cur.stats.partitions_tried += prev.stats.partitions_tried;
    cur.stats.vc_calls += prev.stats.vc_calls;
    cur.stats.kernel_rules_fired += prev.stats.kernel_rules_fired;
    cur.stats.branch_nodes += prev.stats.branch_nodes;
    cur.stats.kernelize_ms += prev.stats.kernelize_ms;
    cur.stats.search_ms += prev.stats.search_ms;
    cur.stats.max_generator_depth = cur
        .stats
        .max_generator_depth
        .max(prev.stats.max_generator_depth);
    cur
}

fn cmd_vc(input: &str, k: usize, format: Format) -> Result<ExitCode> {
    let graph = read_graph(input)?;
    let started = Instant::now();
    let solution = vc_solve(&VcInstance {
        graph: graph.clone(),
        budget: k,
    });
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let feasible = solution.is_some();
    let cover: Vec<usize> = solution
        .map(|s| s.cover.iter().map(|v| v + 1).collect())
        .unwrap_or_default();
    match format {
        Format::Json => {
            let js = serde_json::json!({
                "feasible": feasible,
                "k": k,
                "cover": cover,
                "elapsed_ms": elapsed_ms,
            });
            println!("{}", serde_json::to_string_pretty(&js)?);
        }
        Format::Plain => {
            if feasible {
                println!(
                    "cover of size {} within budget {k}: {}",
                    cover.len(),
                    join(&cover)
                );
            } else {
                println!("no cover of size {k}");
            }
        }
    }
    Ok(if feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_recognize(input: &str, format: Format) -> Result<ExitCode> {
    let graph = read_graph(input)?;
    let rec = recognize_split(&graph);
    let one_based = |s: &splitvd::VertexSet| -> Vec<usize> { s.iter().map(|v| v + 1).collect() };
    match format {
        Format::Json => {
            let js = match &rec {
                SplitRecognition::Split(cert) => serde_json::json!({
                    "split": true,
                    "clique_side": one_based(&cert.clique_side),
                    "independent_side": one_based(&cert.independent_side),
                }),
                SplitRecognition::NotSplit(w) => serde_json::json!({
                    "split": false,
                    "witness": {
                        "kind": w.kind.name(),
                        "vertices": w.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    },
                }),
            };
            println!("{}", serde_json::to_string_pretty(&js)?);
        }
        Format::Plain => match &rec {
            SplitRecognition::Split(cert) => println!(
                "split; clique side: {} | independent side: {}",
                join(&one_based(&cert.clique_side)),
                join(&one_based(&cert.independent_side)),
            ),
            SplitRecognition::NotSplit(w) => println!(
                "not split; induced {} on {}",
                w.kind.name(),
                join(&w.vertices.iter().map(|v| v + 1).collect::<Vec<_>>()),
            ),
        },
    }
    Ok(if rec.is_split() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_partitions(input: &str, limit: Option<u64>) -> Result<ExitCode> {
    let graph = read_graph(input)?;
    let cap = limit.unwrap_or(u64::MAX);
    let mut printed = 0u64;
    for_each_partition::<()>(&graph, |clique, independent| {
        let c: Vec<usize> = clique.iter().map(|v| v + 1).collect();
        let i: Vec<usize> = independent.iter().map(|v| v + 1).collect();
        println!("C: {} | I: {}", join(&c), join(&i));
        printed += 1;
        if printed >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(n: usize, edge_prob: f64, seed: u64, planted: Option<usize>) -> Result<ExitCode> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(anyhow!("edge probability must lie in [0, 1]"));
    }
    let spec = match planted {
        Some(noise) => {
            if noise > n {
                return Err(anyhow!("planted noise {noise} exceeds n = {n}"));
            }
            RandomInstanceSpec::planted(n, noise, edge_prob, seed)
        }
        None => RandomInstanceSpec::gnp(n, edge_prob, seed),
    };
    let inst = generate_random_instance(&spec);
    print!(
        "c splitvd gen n={n} p={edge_prob} seed={seed}{}\n{}",
        planted
            .map(|t| format!(" planted-noise={t}"))
            .unwrap_or_default(),
        inst.graph.to_edge_list()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(problem: OracleProblem, input: &str) -> Result<ExitCode> {
    let graph = read_graph(input)?;
    let js = match problem {
        OracleProblem::Svd => {
            let (min, witness) = oracle_min_svd(&graph).map_err(|e| anyhow!("{e}"))?;
            serde_json::json!({
                "problem": "svd",
                "minimum": min,
                "witness": witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
            })
        }
        OracleProblem::Vc => {
            let (min, witness) = oracle_min_vc(&graph).map_err(|e| anyhow!("{e}"))?;
            serde_json::json!({
                "problem": "vc",
                "minimum": min,
                "witness": witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&js)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    if args.k_min > args.k_max {
        return Err(anyhow!("k_min exceeds k_max"));
    }
    let opts = SolveOptions {
        kernelize: args.kernelize == Toggle::On,
        parallelism: parallelism(args.parallel),
    };
    println!("n,k,engine,verdict,elapsed_ms,partitions_tried,vc_calls");
    for k in args.k_min..=args.k_max {
        for i in 0..args.instances {
            if k > args.n {
                continue;
            }
            let seed = args
                .seed
                .wrapping_add(1_000_003u64.wrapping_mul(k as u64))
                .wrapping_add(i as u64);
            let spec = RandomInstanceSpec::planted(args.n, k, args.edge_prob, seed);
            let inst = generate_random_instance(&spec);
            for &engine in &args.engines {
                let out =
                    solve_with_engine(&inst, engine.into(), &opts).map_err(|e| anyhow!("{e}"))?;
                let verdict = if out.solution.is_some() { "yes" } else { "no" };
                println!(
                    "{},{},{},{},{},{},{}",
                    args.n,
                    k,
                    engine_name(engine),
                    verdict,
                    out.stats.elapsed_ms,
                    out.stats.partitions_tried,
                    out.stats.vc_calls,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn engine_name(e: EngineArg) -> &'static str {
    match e {
        EngineArg::Partition => "partition",
        EngineArg::Baseline => "baseline",
        EngineArg::Oracle => "oracle",
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
