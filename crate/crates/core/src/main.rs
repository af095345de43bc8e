use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bicert::algo::{check_with_stats, Algorithm};
use bicert::bench::{run_bench, BenchConfig};
use bicert::generate::{generate, Density, GenKind, GenSpec};
use bicert::io::{parse_dimacs, parse_edge_list, write_dimacs, write_dot, write_edge_list};
use bicert::report::ResultReport;
use bicert::{Error, Graph};

const EXIT_BIPARTITE: u8 = 0;
const EXIT_ODD_CYCLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "bicert", version, about = "Certifying bipartiteness checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file; exit 0 if bipartite, 1 if an odd cycle was found.
    Check(CheckArgs),
    /// Generate a seeded graph and print it.
    Gen(GenArgs),
    /// Time all four checkers over generated graphs and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoChoice {
    Growth,
    Flip,
    Dsu,
    Forest,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Random,
    PlantedBipartite,
    PlantedOddCycle,
    Forest,
}

impl From<KindArg> for GenKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Random => GenKind::Random,
            KindArg::PlantedBipartite => GenKind::PlantedBipartite,
            KindArg::PlantedOddCycle => GenKind::PlantedOddCycle,
            KindArg::Forest => GenKind::Forest,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    #[arg(long, value_enum, default_value = "all")]
    algo: AlgoChoice,
    /// Print reports as a JSON array.
    #[arg(long)]
    json: bool,
    /// Write a DOT rendering of the (first) outcome to this path.
    #[arg(long, value_name = "OUT")]
    dot: Option<PathBuf>,
    /// Include checker wall time in the reports.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    left: usize,
    #[arg(long, default_value_t = 0)]
    right: usize,
    #[arg(long, conflicts_with = "p")]
    m: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 3)]
    cycle_len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow loops (random kind only).
    #[arg(long)]
    loops: bool,
    /// Allow parallel edges (random kind only).
    #[arg(long)]
    multi: bool,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated `n:m` pairs.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, required = true)]
    sizes: Vec<(usize, usize)>,
    #[arg(long, value_delimiter = ',', required = true)]
    seeds: Vec<u64>,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "random")]
    kinds: Vec<KindArg>,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    /// Cycle length for planted-odd-cycle cells.
    #[arg(long, default_value_t = 5)]
    cycle_len: usize,
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (n, m) = s
        .split_once(':')
        .ok_or_else(|| format!("expected `n:m`, got `{s}`"))?;
    Ok((
        n.trim()
            .parse()
            .map_err(|e| format!("bad n in `{s}`: {e}"))?,
        m.trim()
            .parse()
            .map_err(|e| format!("bad m in `{s}`: {e}"))?,
    ))
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn error_exit(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::Invariant(_) => ExitCode::from(EXIT_INVARIANT),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn read_graph(path: &PathBuf, format: Format) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    match format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Dimacs => parse_dimacs(&text),
    }
    .map_err(|e| format!("{}: {e}", path.display()))
}

fn run_check(args: CheckArgs) -> ExitCode {
    let g = match read_graph(&args.file, args.format) {
        Ok(g) => g,
        Err(msg) => return usage_error(msg),
    };
    let algorithms: Vec<Algorithm> = match args.algo {
        AlgoChoice::Growth => vec![Algorithm::Growth],
        AlgoChoice::Flip => vec![Algorithm::Flip],
        AlgoChoice::Dsu => vec![Algorithm::Dsu],
        AlgoChoice::Forest => vec![Algorithm::Forest],
        AlgoChoice::All => Algorithm::ALL.to_vec(),
    };

    let mut reports = Vec::with_capacity(algorithms.len());
    let mut first_outcome = None;
    for algorithm in algorithms {
        let start = Instant::now();
        let run = match check_with_stats(&g, algorithm) {
            Ok(run) => run,
            Err(e) => return error_exit(&e),
        };
        let elapsed = start.elapsed().as_nanos() as u64;
        reports.push(ResultReport::new(
            &g,
            algorithm,
            &run.outcome,
            args.timing.then_some(elapsed),
        ));
        first_outcome.get_or_insert(run.outcome);
    }
    let outcome = first_outcome.expect("at least one algorithm ran");

    if args.json {
        match serde_json::to_string_pretty(&reports) {
            Ok(s) => println!("{s}"),
            Err(e) => return usage_error(e),
        }
    } else {
        let blocks: Vec<String> = reports.iter().map(ResultReport::to_text).collect();
        print!("{}", blocks.join("\n"));
    }

    if reports.iter().any(|r| r.verdict != reports[0].verdict) {
        eprintln!("error: checkers disagree on the verdict");
        return ExitCode::from(EXIT_INVARIANT);
    }

    if let Some(path) = &args.dot {
        let dot = match write_dot(&g, &outcome) {
            Ok(dot) => dot,
            Err(e) => return error_exit(&e),
        };
        if let Err(e) = fs::write(path, dot) {
            return usage_error(format!("{}: {e}", path.display()));
        }
    }

    if outcome.is_bipartite() {
        ExitCode::from(EXIT_BIPARTITE)
    } else {
        ExitCode::from(EXIT_ODD_CYCLE)
    }
}

fn run_gen(args: GenArgs) -> ExitCode {
    let kind = GenKind::from(args.kind);
    let density = match (args.m, args.p) {
        (Some(m), None) => Density::Edges(m),
        (None, Some(p)) => Density::Probability(p),
        (None, None) if kind == GenKind::Forest => Density::Edges(0),
        (None, None) => return usage_error("one of --m or --p is required"),
        (Some(_), Some(_)) => unreachable!("clap rejects --m with --p"),
    };
    let spec = GenSpec {
        kind,
        n: args.n,
        left: args.left,
        right: args.right,
        density,
        cycle_len: args.cycle_len,
        allow_loops: args.loops,
        allow_multi: args.multi,
        seed: args.seed,
    };
    match generate(&spec) {
        Ok(g) => {
            match args.format {
                Format::Edgelist => print!("{}", write_edge_list(&g)),
                Format::Dimacs => print!("{}", write_dimacs(&g)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => error_exit(&e),
    }
}

fn run_bench_cmd(args: BenchArgs) -> ExitCode {
    let config = BenchConfig {
        sizes: args.sizes,
        seeds: args.seeds,
        kinds: args.kinds.into_iter().map(GenKind::from).collect(),
        repeat: args.repeat,
        cycle_len: args.cycle_len,
    };
    match run_bench(&config) {
        Ok(outcome) => {
            print!("{}", outcome.to_csv());
            if outcome.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in &outcome.failures {
                    eprintln!("error: {f}");
                }
                ExitCode::from(EXIT_INVARIANT)
            }
        }
        Err(e) => error_exit(&e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Check(args) => run_check(args),
        Command::Gen(args) => run_gen(args),
        Command::Bench(args) => run_bench_cmd(args),
    }
}
