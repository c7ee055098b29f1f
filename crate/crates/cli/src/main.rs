mod output;

use std::fs::File;
use std::io::{self, BufReader};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trdom_core::criticality::{Evaluator, Invariant, Mode};
use trdom_core::families::FamilySpec;
use trdom_core::graph::{parse_graph6, read_graph6_stream, to_graph6, Edge, Graph, GraphSource};
use trdom_core::solvers::{gamma, gamma_t, gamma_tr, min_dominating_set, min_total_dominating_set, optimal_trd_function};
use trdom_core::verify::{
    registry, run_all_from, run_check, search_counterexample, Checkpoint, ConjectureId, Scope,
    SearchOptions, SearchReport, TheoremReport,
};
use trdom_core::{Error, VertexSet};

use output::{Printer, Record};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "trdom", version, about = "Exact domination numbers and edge criticality of small graphs")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// One JSON object per line instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ, γ_t or γ_tR.
    Compute(ComputeArgs),
    /// Classify the non-edges (add) or edges (remove) of a graph.
    Classify(ClassifyArgs),
    /// Print a named family member as graph6.
    Family(FamilyArgs),
    /// Run registered checks.
    Verify(VerifyArgs),
    /// Search for counterexamples to the conjectures or witnesses for the open question.
    Search(SearchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InvArg {
    G,
    Gt,
    Gtr,
}

impl From<InvArg> for Invariant {
    fn from(a: InvArg) -> Self {
        match a {
            InvArg::G => Invariant::Domination,
            InvArg::Gt => Invariant::TotalDomination,
            InvArg::Gtr => Invariant::TotalRoman,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Add,
    Remove,
}

impl From<ModeArg> for Mode {
    fn from(a: ModeArg) -> Self {
        match a {
            ModeArg::Add => Mode::Addition,
            ModeArg::Remove => Mode::Removal,
        }
    }
}

#[derive(Args)]
struct GraphInput {
    /// Graphs in graph6.
    graphs: Vec<String>,
    /// Read graph6 lines from a file, or `-` for stdin.
    #[arg(long)]
    source: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "gtr")]
    inv: InvArg,
    /// Also print one optimal set or labelling.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "add")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "gtr")]
    inv: InvArg,
    /// Classify a single edge `u-v` instead of the whole graph.
    #[arg(long)]
    edge: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family description, e.g. `gr 2`, `f 3 3 0 0`, `corona complete 4`, `complete 3 + complete 3`.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    spec: Vec<String>,
    /// Reject unsorted ℱ parameters instead of sorting them.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id; see `--list`.
    id: Option<String>,
    /// Run every registered check.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// List the registered checks.
    #[arg(long, conflicts_with_all = ["id", "all"])]
    list: bool,
    /// Largest order swept (default: the check's own; 7 with --all).
    #[arg(long, env = "TRDOM_MAX_N")]
    max_n: Option<usize>,
    /// `builtin`, a graph6 file, or `-` for stdin.
    #[arg(long, default_value = "builtin")]
    source: String,
}

#[derive(Args)]
struct SearchArgs {
    /// conj-1-Vf-plus, conj-2-union-Kn or question-diam2-6super.
    id: String,
    #[arg(long, env = "TRDOM_MAX_N", default_value_t = 8)]
    max_n: usize,
    /// `builtin`, a graph6 file, or `-` for stdin.
    #[arg(long, default_value = "builtin")]
    source: String,
    /// Seed for the spot-check sample.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fraction of filtered-out graphs classified anyway.
    #[arg(long, default_value_t = 0.01)]
    spot_check_rate: f64,
    /// Resume from a logged checkpoint `n:index`.
    #[arg(long)]
    resume: Option<String>,
    #[arg(long, default_value_t = 10_000)]
    checkpoint_every: usize,
}

/// A failed command: exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownCheck(_) | Error::UnknownSearch(_) | Error::InvalidParameter(_) => EXIT_USAGE,
            Error::EnumerationTooLarge { .. } => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn read_stream(source: &str) -> Result<Vec<Graph>, Failure> {
    let graphs: Result<Vec<Graph>, Error> = if source == "-" {
        read_graph6_stream(io::stdin().lock()).collect()
    } else {
        let file = File::open(source).map_err(|e| Failure(EXIT_INPUT, format!("{source}: {e}")))?;
        read_graph6_stream(BufReader::new(file)).collect()
    };
    Ok(graphs?)
}

fn input_graphs(input: &GraphInput) -> Result<Vec<Graph>, Failure> {
    let mut out = input
        .graphs
        .iter()
        .map(|s| parse_graph6(s))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(src) = &input.source {
        out.extend(read_stream(src)?);
    }
    if out.is_empty() {
        return Err(Failure(EXIT_USAGE, "no input graphs (pass graph6 strings or --source)".into()));
    }
    Ok(out)
}

fn graph_source(source: &str) -> Result<GraphSource, Failure> {
    if source == "builtin" {
        Ok(GraphSource::Builtin)
    } else {
        Ok(GraphSource::from_graphs(read_stream(source)?))
    }
}

fn vertex_list(s: VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn ms(d: std::time::Duration) -> Value {
    json!(d.as_millis() as u64)
}

fn compute(args: &ComputeArgs, out: &mut Printer) -> CmdResult {
    let inv: Invariant = args.inv.into();
    for g in input_graphs(&args.input)? {
        let mut r = Record::new("compute");
        r.set("graph6", to_graph6(&g)).set("n", g.order()).set("invariant", inv.short_name());
        let value = match inv {
            Invariant::Domination => gamma(&g),
            Invariant::TotalDomination => gamma_t(&g)?,
            Invariant::TotalRoman => gamma_tr(&g)?,
        };
        r.set("value", value);
        if args.witness {
            match inv {
                Invariant::Domination => r.set("witness", vertex_list(min_dominating_set(&g))),
                Invariant::TotalDomination => r.set("witness", vertex_list(min_total_dominating_set(&g)?)),
                Invariant::TotalRoman => r.set("witness", optimal_trd_function(&g)?.render(g.order())),
            };
        }
        out.emit(r)?;
    }
    Ok(0)
}

fn parse_edge(s: &str) -> Result<Edge, Failure> {
    let bad = || Failure(EXIT_USAGE, format!("edge must look like `u-v`, got `{s}`"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(Edge::new(a, b)?)
}

fn classify(args: &ClassifyArgs, out: &mut Printer) -> CmdResult {
    let (mode, inv): (Mode, Invariant) = (args.mode.into(), args.inv.into());
    let edge = args.edge.as_deref().map(parse_edge).transpose()?;
    let ev = Evaluator::new();
    for g in input_graphs(&args.input)? {
        let start = Instant::now();
        let mut r = Record::new("classify");
        r.set("graph6", to_graph6(&g))
            .set("n", g.order())
            .set("mode", mode.to_string())
            .set("invariant", inv.to_string());
        if let Some(e) = edge {
            let c = match mode {
                Mode::Addition => ev.classify_added_edge(&g, e, inv)?,
                Mode::Removal => ev.classify_removed_edge(&g, e, inv)?,
            };
            r.set("edge", e.to_string())
                .set("before", c.before.to_string())
                .set("after", c.after.to_string())
                .set("verdict", c.verdict.to_string());
        } else {
            let c = ev.classify_graph(&g, mode, inv)?;
            let rows: Vec<Value> = c
                .per_edge
                .iter()
                .map(|e| {
                    json!({
                        "edge": e.edge.to_string(),
                        "before": e.before.to_string(),
                        "after": e.after.to_string(),
                        "verdict": e.verdict.to_string(),
                    })
                })
                .collect();
            r.set("k", c.k)
                .set("verdict", c.verdict.label(mode))
                .set("edges", rows.len())
                .set("per_edge", rows);
        }
        r.set("wall_time_ms", ms(start.elapsed()));
        out.emit(r)?;
    }
    Ok(0)
}

fn family(args: &FamilyArgs, out: &mut Printer) -> CmdResult {
    let tokens: Vec<&str> = args.spec.iter().flat_map(|s| s.split_whitespace()).collect();
    let spec = FamilySpec::parse_tokens(&tokens)?;
    let g = spec.build(args.strict)?;
    if out.is_json() {
        let mut r = Record::new("family");
        r.set("spec", spec.to_string()).set("n", g.order()).set("graph6", to_graph6(&g));
        out.emit(r)?;
    } else {
        println!("{}", to_graph6(&g));
    }
    Ok(0)
}

fn theorem_record(rep: &TheoremReport) -> Record {
    let mut r = Record::new("verify");
    r.set("id", rep.id.clone())
        .set("scope", rep.scope.clone())
        .set("graphs_checked", rep.graphs_checked)
        .set("failures", rep.failures.len())
        .set("status", if rep.passed() { "PASS" } else { "FAIL" })
        .set("wall_time_ms", ms(rep.wall_time));
    let rows: Vec<Value> = rep
        .failures
        .iter()
        .map(|f| json!({"graph6": f.graph6, "detail": f.detail}))
        .collect();
    if !rows.is_empty() {
        r.set("failure", rows);
    }
    r
}

fn verify(args: &VerifyArgs, out: &mut Printer) -> CmdResult {
    if args.list {
        for c in registry() {
            let scope = match c.scope {
                Scope::Sweep { .. } => format!("{:?}", c.scope),
                Scope::Instances { describe, .. } => describe.to_string(),
            };
            let mut r = Record::new("verify-list");
            r.set("id", c.id).set("statement", c.statement).set("scope", scope);
            out.emit(r)?;
        }
        return Ok(0);
    }
    let source = graph_source(&args.source)?;
    let reports = if args.all {
        run_all_from(args.max_n.unwrap_or(7), &source)
    } else {
        let id = args
            .id
            .as_deref()
            .ok_or_else(|| Failure(EXIT_USAGE, "give a check id, --all or --list".into()))?;
        vec![run_check(id, args.max_n, &source)?]
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for rep in &reports {
        out.emit(theorem_record(rep))?;
    }
    if args.all {
        let mut r = Record::new("verify-summary");
        r.set("checks", reports.len()).set("failed", failed);
        out.emit(r)?;
    }
    Ok(if failed == 0 { 0 } else { EXIT_FAILURE })
}

fn parse_checkpoint(s: &str) -> Result<Checkpoint, Failure> {
    let bad = || Failure(EXIT_USAGE, format!("checkpoint must look like `n:index`, got `{s}`"));
    let (n, i) = s.split_once(':').ok_or_else(bad)?;
    Ok(Checkpoint {
        n: n.parse().map_err(|_| bad())?,
        index: i.parse().map_err(|_| bad())?,
    })
}

fn search_record(rep: &SearchReport) -> Record {
    let mut r = Record::new("search");
    r.set("id", rep.id.id())
        .set("kind", if rep.id.is_conjecture() { "counterexamples" } else { "witnesses" })
        .set("scope", rep.scope.clone())
        .set("graphs_examined", rep.graphs_examined)
        .set("candidates", rep.candidates)
        .set("found_count", rep.found.len())
        .set("found", json!(rep.found))
        .set("spot_checked", rep.spot_checked)
        .set("spot_check_failures", json!(rep.spot_check_failures))
        .set(
            "last_checkpoint",
            rep.last_checkpoint
                .map(|c| format!("{}:{}", c.n, c.index))
                .unwrap_or_default(),
        )
        .set("wall_time_ms", ms(rep.wall_time));
    r
}

fn search(args: &SearchArgs, out: &mut Printer) -> CmdResult {
    let id: ConjectureId = args.id.parse()?;
    let opts = SearchOptions {
        max_n: args.max_n,
        source: graph_source(&args.source)?,
        resume: args.resume.as_deref().map(parse_checkpoint).transpose()?,
        seed: args.seed,
        spot_check_rate: args.spot_check_rate,
        checkpoint_every: args.checkpoint_every,
    };
    let rep = search_counterexample(id, &opts)?;
    let bad = !rep.spot_check_failures.is_empty() || (id.is_conjecture() && !rep.found.is_empty());
    out.emit(search_record(&rep))?;
    Ok(if bad { EXIT_FAILURE } else { 0 })
}

fn run(cli: &Cli) -> CmdResult {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    }
    let mut out = Printer::new(cli.json);
    match &cli.command {
        Command::Compute(a) => compute(a, &mut out),
        Command::Classify(a) => classify(a, &mut out),
        Command::Family(a) => family(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Search(a) => search(a, &mut out),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
