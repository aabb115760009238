//! `gburn` command-line tool.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget or time limit exceeded,
//! 3 internal error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gburn::bench::{parse_manifest, run_row, FileFormat, GraphSource, RowOptions, TableRow, CSV_HEADER};
use gburn::graph::{EdgeListOptions, Indexing, DEFAULT_MEMORY_CAP};
use gburn::heuristics::binary_search_until;
use gburn::ilp::{decode_solution, emit_cmcp, emit_cov, emit_prop, parse_solution, write_lp, IlpModel};
use gburn::{
    exact_solve, first_violation, is_burning_sequence, parse_sequence, simulate, BurningSequence, DistanceOracle,
    Error, ExactBudget, Graph, GraphKind, Strategy, TieBreak,
};

#[derive(Parser)]
#[command(name = "gburn", version, about = "Graph burning solvers, validators and ILP emitters")]
struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "GBURN_THREADS", default_value_t = 0)]
    threads: usize,

    /// Largest distance matrix to keep in memory, in bytes; above it
    /// distances are computed on demand.
    #[arg(long, global = true, env = "GBURN_MEMORY_CAP", default_value_t = DEFAULT_MEMORY_CAP)]
    memory_cap: u64,

    #[command(flatten)]
    input: InputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file format: auto, edges or fixture.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_format)]
    format: FileFormat,

    /// Edge-list numbering.
    #[arg(long, global = true, value_enum, default_value_t = IndexingArg::Auto)]
    indexing: IndexingArg,

    /// Keep the largest connected component instead of rejecting
    /// disconnected input.
    #[arg(long, global = true)]
    largest_component: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexingArg {
    Auto,
    Zero,
    One,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Gr,
    Grp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchStrategy {
    Gr,
    Grp,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Prop,
    Cmcp,
    Cov,
}

#[derive(Subcommand)]
enum Command {
    /// Binary search for a short burning sequence with Gr or GrP.
    Solve {
        /// Graph file or generator spec `gen:kind:param`.
        graph: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Grp)]
        strategy: StrategyArg,
        /// Tie policy: `smallest` or `seed:N`.
        #[arg(long, default_value = "smallest", value_parser = parse_tie)]
        tie: TieBreak,
        /// Print one CSV row (with header) instead of a report. With
        /// `--strategy grp` the Gr columns are filled too.
        #[arg(long)]
        csv: bool,
        /// Instance name for the CSV row (default: file stem).
        #[arg(long)]
        name: Option<String>,
        /// Wall-clock limit per binary search, in seconds.
        #[arg(long, default_value_t = 36000.0, value_parser = parse_seconds)]
        time_limit: f64,
    },
    /// Exact burning number.
    Exact {
        graph: String,
        /// Most combinations one exhaustive probe may enumerate.
        #[arg(long, default_value_t = gburn::cmcp::DEFAULT_MAX_COMBINATIONS)]
        budget: u128,
    },
    /// Check a burning sequence.
    Validate {
        graph: String,
        /// Sequence file, or the sequence itself (e.g. "1,3").
        #[arg(long)]
        seq: String,
    },
    /// Run the burning process step by step.
    Simulate {
        graph: String,
        #[arg(long)]
        seq: String,
    },
    /// Write an integer program in LP format.
    EmitIlp {
        graph: String,
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Upper bound U (prop, cov) or guess p (cmcp).
        #[arg(long)]
        param: usize,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a solver solution file back into a burning sequence.
    Decode {
        graph: String,
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        param: usize,
        /// Solution file with `name value` lines.
        #[arg(long)]
        sol: PathBuf,
    },
    /// Write a generated graph in fixture format.
    Gen {
        #[arg(value_parser = parse_kind)]
        kind: GraphKind,
        /// Vertex count for path/cycle, side length for grid.
        #[arg(long, visible_alias = "k")]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every manifest instance and print table rows as CSV.
    Bench {
        /// Lines of `name path_or_genspec`; relative paths are resolved
        /// against the manifest's directory.
        manifest: PathBuf,
        #[arg(long, value_enum, default_value_t = BenchStrategy::Both)]
        strategy: BenchStrategy,
        #[arg(long, default_value = "smallest", value_parser = parse_tie)]
        tie: TieBreak,
        /// Wall-clock limit per binary search, in seconds.
        #[arg(long, default_value_t = 36000.0, value_parser = parse_seconds)]
        time_limit: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_format(s: &str) -> Result<FileFormat, String> {
    FileFormat::from_str(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<GraphKind, String> {
    GraphKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_tie(s: &str) -> Result<TieBreak, String> {
    match s {
        "smallest" => Ok(TieBreak::SmallestIndex),
        _ => s
            .strip_prefix("seed:")
            .and_then(|n| n.parse().ok())
            .map(TieBreak::Seeded)
            .ok_or_else(|| format!("tie policy {s:?} is not `smallest` or `seed:N`")),
    }
}

fn parse_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("time limit {s:?} must be a positive number of seconds")),
    }
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn exit_code(error: &anyhow::Error) -> u8 {
    match error.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. } | Error::ExactBudget { .. } | Error::TimeLimit) => 2,
        Some(Error::NotGbpSelection(_)) => 3,
        Some(_) => 1,
        None if error.downcast_ref::<io::Error>().is_some() => 1,
        None => 3,
    }
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        Failure {
            code: exit_code(&error),
            error,
        }
    }
}

fn internal(msg: String) -> Failure {
    Failure {
        code: 3,
        error: anyhow!(msg),
    }
}

type CliResult = Result<(), Failure>;

struct Session {
    memory_cap: u64,
    format: FileFormat,
    options: EdgeListOptions,
}

impl Session {
    fn load(&self, spec: &str) -> Result<Graph, Failure> {
        let source: GraphSource = spec.parse()?;
        let graph = source
            .load(self.format, &self.options)
            .with_context(|| format!("reading graph {spec}"))?;
        log::info!("{spec}: n = {}, m = {}", graph.n(), graph.m());
        Ok(graph)
    }

    fn oracle(&self, graph: &Graph) -> DistanceOracle {
        DistanceOracle::new(graph, self.memory_cap)
    }
}

fn read_sequence(arg: &str, graph: &Graph) -> Result<BurningSequence, Failure> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    Ok(parse_sequence(&text, graph)?)
}

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn build_model(kind: ModelArg, graph: &Graph, oracle: &DistanceOracle, param: usize) -> gburn::Result<IlpModel> {
    match kind {
        ModelArg::Prop => emit_prop(graph, param),
        ModelArg::Cmcp => emit_cmcp(oracle, param),
        ModelArg::Cov => emit_cov(oracle, param),
    }
}

fn instance_name(spec: &str) -> String {
    match spec.parse::<GraphSource>() {
        Ok(GraphSource::File(p)) => p
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| spec.to_string()),
        _ => spec.to_string(),
    }
}

fn solve(
    ctx: &Session,
    spec: &str,
    strategy: StrategyArg,
    tie: TieBreak,
    csv: bool,
    name: Option<String>,
    time_limit: f64,
) -> CliResult {
    let graph = ctx.load(spec)?;
    let limit = Duration::from_secs_f64(time_limit);
    if csv {
        let options = RowOptions {
            gr: true,
            grp: strategy == StrategyArg::Grp,
            tie,
            memory_cap: ctx.memory_cap,
            time_limit: limit,
        };
        let name = name.unwrap_or_else(|| instance_name(spec));
        let row = run_row(&name, &graph, &options)?;
        let missing = match strategy {
            StrategyArg::Gr => row.gr.is_none(),
            StrategyArg::Grp => row.grp.is_none(),
        };
        println!("{CSV_HEADER}\n{}", row.to_csv());
        if missing {
            return Err(Error::TimeLimit.into());
        }
        return Ok(());
    }

    let oracle = ctx.oracle(&graph);
    let strategy = match strategy {
        StrategyArg::Gr => Strategy::Gr,
        StrategyArg::Grp => Strategy::Grp,
    };
    let started = Instant::now();
    let report = binary_search_until(&graph, &oracle, strategy, &tie, started.checked_add(limit))?;
    if !is_burning_sequence(&oracle, &report.sequence)? {
        return Err(internal("solver returned a sequence that does not burn the graph".into()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "strategy: {strategy} (best from {})", report.strategy);
    let _ = writeln!(out, "length: {}", report.sequence.len());
    let _ = writeln!(out, "sequence: {}", report.sequence.to_labels(&graph));
    if let Some(b) = &report.bounds {
        let _ = writeln!(out, "bounds: l = {}, h = {}, s0 = {}", b.lower, b.upper, b.bff_len);
    }
    for probe in &report.per_guess_log {
        let _ = writeln!(
            out,
            "probe p = {}: {} ({}/{} covered, {:.3}s)",
            probe.p,
            if probe.burned_all { "burned" } else { "not burned" },
            probe.covered_count,
            graph.n(),
            probe.elapsed.as_secs_f64()
        );
    }
    let _ = writeln!(out, "time: {:.3}s", started.elapsed().as_secs_f64());
    emit(None, &out)
}

fn exact(ctx: &Session, spec: &str, budget: u128) -> CliResult {
    let graph = ctx.load(spec)?;
    let oracle = ctx.oracle(&graph);
    let result = exact_solve(&graph, &oracle, ExactBudget { max_combinations: budget })?;
    for (p, covered) in &result.probes {
        log::info!("p = {p}: best coverage {covered}/{}", graph.n());
    }
    println!("b={}", result.burning_number);
    println!("sequence: {}", result.sequence.to_labels(&graph));
    Ok(())
}

fn validate(ctx: &Session, spec: &str, seq: &str) -> CliResult {
    let graph = ctx.load(spec)?;
    let oracle = ctx.oracle(&graph);
    let seq = read_sequence(seq, &graph)?;
    match first_violation(&oracle, &seq)? {
        None => println!("true"),
        Some(v) => {
            println!("false");
            let u = seq.vertices()[v.index - 1];
            println!(
                "vertex {} is not burned: closest is u_{} = {} at distance {} > {}",
                graph.label(v.vertex),
                v.index,
                graph.label(u),
                v.distance,
                seq.len() - v.index
            );
        }
    }
    Ok(())
}

fn simulate_cmd(ctx: &Session, spec: &str, seq: &str) -> CliResult {
    let graph = ctx.load(spec)?;
    let seq = read_sequence(seq, &graph)?;
    let trace = simulate(&graph, &seq)?;
    print!("{}", trace.to_text(&graph));
    println!("complete: {}", trace.complete);
    Ok(())
}

fn emit_ilp(ctx: &Session, spec: &str, model: ModelArg, param: usize, out: Option<PathBuf>) -> CliResult {
    let graph = ctx.load(spec)?;
    let oracle = ctx.oracle(&graph);
    let model = build_model(model, &graph, &oracle, param)?;
    log::info!(
        "{} model: {} variables, {} constraints",
        model.kind,
        model.num_variables(),
        model.num_constraints()
    );
    emit(out.as_deref(), &write_lp(&model))
}

fn decode(ctx: &Session, spec: &str, model: ModelArg, param: usize, sol: &Path) -> CliResult {
    let graph = ctx.load(spec)?;
    let oracle = ctx.oracle(&graph);
    let model = build_model(model, &graph, &oracle, param)?;
    let text = fs::read_to_string(sol).with_context(|| format!("reading {}", sol.display()))?;
    let assignment = parse_solution(&text)?;
    let seq = decode_solution(&model, &assignment, &oracle)?;
    println!("sequence: {}", seq.to_labels(&graph));
    println!("length: {}", seq.len());
    println!("valid: true");
    Ok(())
}

fn gen(kind: GraphKind, n: usize, out: Option<PathBuf>) -> CliResult {
    let graph = gburn::generate(kind, n)?;
    emit(out.as_deref(), &graph.to_fixture())
}

fn bench(
    ctx: &Session,
    manifest: &Path,
    strategy: BenchStrategy,
    tie: TieBreak,
    time_limit: f64,
    out: Option<PathBuf>,
) -> CliResult {
    let text = fs::read_to_string(manifest).with_context(|| format!("reading {}", manifest.display()))?;
    let entries = parse_manifest(&text)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let options = RowOptions {
        gr: strategy != BenchStrategy::Grp,
        grp: strategy != BenchStrategy::Gr,
        tie,
        memory_cap: ctx.memory_cap,
        time_limit: Duration::from_secs_f64(time_limit),
    };
    let mut sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(fs::File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout()),
    };
    writeln!(sink, "{CSV_HEADER}")?;
    for entry in entries {
        let source = entry.source.clone().relative_to(base);
        let row = source
            .load(ctx.format, &ctx.options)
            .and_then(|graph| run_row(&entry.name, &graph, &options))
            .unwrap_or_else(|e| {
                log::warn!("{}: {e}", entry.name);
                TableRow::failed(&entry.name)
            });
        writeln!(sink, "{}", row.to_csv())?;
        sink.flush()?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| internal(e.to_string()))?;
    }
    let ctx = Session {
        memory_cap: cli.memory_cap,
        format: cli.input.format,
        options: EdgeListOptions {
            indexing: match cli.input.indexing {
                IndexingArg::Auto => Indexing::Auto,
                IndexingArg::Zero => Indexing::Zero,
                IndexingArg::One => Indexing::One,
            },
            largest_component: cli.input.largest_component,
            ..EdgeListOptions::default()
        },
    };
    match cli.command {
        Command::Solve {
            graph,
            strategy,
            tie,
            csv,
            name,
            time_limit,
        } => solve(&ctx, &graph, strategy, tie, csv, name, time_limit),
        Command::Exact { graph, budget } => exact(&ctx, &graph, budget),
        Command::Validate { graph, seq } => validate(&ctx, &graph, &seq),
        Command::Simulate { graph, seq } => simulate_cmd(&ctx, &graph, &seq),
        Command::EmitIlp {
            graph,
            model,
            param,
            out,
        } => emit_ilp(&ctx, &graph, model, param, out),
        Command::Decode {
            graph,
            model,
            param,
            sol,
        } => decode(&ctx, &graph, model, param, &sol),
        Command::Gen { kind, n, out } => gen(kind, n, out),
        Command::Bench {
            manifest,
            strategy,
            tie,
            time_limit,
            out,
        } => bench(&ctx, &manifest, strategy, tie, time_limit, out),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
