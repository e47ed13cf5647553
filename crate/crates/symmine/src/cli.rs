//! The `symmine` command line.
//!
//! Text mode prints only the answer on stdout; diagnostics go to stderr.
//! Exit codes: 0 ok, 1 I/O, 2 bad input, 3 count overflow.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use symmine_core::cost::rank_schedules;
use symmine_core::oracle::SubsetCensus;
use symmine_core::{
    automorphisms, compile_plan, generate_valid_recursive, orient_reindex, select_schedule, CostModelParams, Graph,
    Pattern, Plan, PlanOptions, Selection,
};
use thiserror::Error;

use crate::engine;
use crate::io::{load_edge_list, write_edge_list, LoadError};
use crate::plan_json::{self, PlanJsonError};

#[derive(Debug, Parser)]
#[command(name = "symmine", version, about = "Symmetry-breaking graph pattern miner")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Select a schedule, compile it and print pseudo-code plus the plan JSON.
    Compile(CompileArgs),
    /// List the distinct schedules of a pattern with restrictions and costs.
    Schedules(SchedulesArgs),
    /// Count induced instances of a pattern in a graph.
    Count(CountArgs),
    /// Count every connected pattern of a given size.
    Motifs(MotifArgs),
    /// Reindex a graph by descending degree and write it as an edge list.
    Orient(OrientArgs),
    /// Brute-force induced and labeled counts for small inputs.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Vertex count of the cost-model graph.
    #[arg(long, default_value_t = 1000.0)]
    pub n_model: f64,
    /// Average degree of the cost-model graph.
    #[arg(long, default_value_t = 5.0)]
    pub d_model: f64,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Compile without symmetry-breaking restrictions.
    #[arg(long)]
    pub no_restrictions: bool,
    /// Check restrictions per candidate instead of bounding set operations.
    #[arg(long)]
    pub no_bounds: bool,
    /// Use the i-th distinct schedule instead of the cost-model pick.
    #[arg(long)]
    pub schedule_index: Option<usize>,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    /// Pattern file, or a name such as `rectangle` or `clique:4`.
    #[arg(long)]
    pub pattern: String,
    #[command(flatten)]
    pub plan: PlanArgs,
}

#[derive(Debug, Args)]
pub struct SchedulesArgs {
    #[arg(long)]
    pub pattern: String,
    /// Also report the number of valid (not necessarily distinct) schedules.
    #[arg(long)]
    pub all_valid: bool,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Edge-list file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, required_unless_present = "plan", conflicts_with = "plan")]
    pub pattern: Option<String>,
    /// Plan JSON produced by `compile --json`.
    #[arg(long)]
    pub plan: Option<PathBuf>,
    /// Reindex the graph by descending degree before counting.
    #[arg(long)]
    pub orient: bool,
    /// Worker threads (defaults to available parallelism).
    #[arg(long, env = "SYMMINE_THREADS")]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub plan_args: PlanArgs,
}

#[derive(Debug, Args)]
pub struct MotifArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Motif vertex count, 3 to 5.
    #[arg(long)]
    pub size: usize,
    #[arg(long)]
    pub orient: bool,
    #[arg(long, env = "SYMMINE_THREADS")]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct OrientArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Output edge-list path.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub pattern: String,
}

/// Failures mapped to exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Input(String),
    #[error("count overflowed 64 bits")]
    Overflow,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Input(_) => 2,
            CliError::Overflow => 3,
        }
    }
}

impl From<symmine_core::Error> for CliError {
    fn from(e: symmine_core::Error) -> Self {
        match e {
            symmine_core::Error::Overflow => CliError::Overflow,
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// Resolves a pattern argument: an existing file is parsed, anything else is
/// read as `name` or `name:k`.
pub fn resolve_pattern(spec: &str) -> Result<Pattern, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        return Pattern::parse(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")));
    }
    let (name, k) = match spec.split_once(':') {
        Some((name, k)) => {
            let k = k.parse::<usize>().map_err(|_| CliError::Input(format!("bad pattern size in `{spec}`")))?;
            (name, Some(k))
        }
        None => (spec, None),
    };
    match Pattern::named(name, k) {
        Err(symmine_core::Error::UnknownPattern) if spec.contains(['/', '.']) => {
            Err(CliError::Io(format!("{spec}: no such pattern file")))
        }
        Err(e) => Err(CliError::Input(format!("{spec}: {e}"))),
        Ok(p) => Ok(p),
    }
}

fn load_graph(path: &Path, err: &mut dyn Write) -> Result<Graph, CliError> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    let loaded = load_edge_list(BufReader::new(file)).map_err(|e| match e {
        LoadError::Io(e) => io_err(path, e),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })?;
    let _ = writeln!(
        err,
        "loaded {}: {} vertices, {} edges ({} duplicate, {} self-loop edges dropped)",
        path.display(),
        loaded.graph.n(),
        loaded.graph.edge_count(),
        loaded.stats.duplicates,
        loaded.stats.self_loops
    );
    Ok(loaded.graph)
}

fn params(m: &ModelArgs) -> Result<CostModelParams, CliError> {
    CostModelParams::new(m.n_model, m.d_model).map_err(CliError::from)
}

fn threads(requested: Option<usize>) -> Result<usize, CliError> {
    match requested {
        Some(0) => Err(CliError::Input("--threads must be at least 1".into())),
        Some(t) => Ok(t),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn choose_schedule(p: &Pattern, args: &PlanArgs) -> Result<Selection, CliError> {
    let params = params(&args.model)?;
    match args.schedule_index {
        None => Ok(select_schedule(p, &params)),
        Some(i) => {
            let mut ranked = rank_schedules(p, &params);
            if i >= ranked.len() {
                return Err(CliError::Input(format!(
                    "--schedule-index {i} out of range: pattern has {} distinct schedules",
                    ranked.len()
                )));
            }
            Ok(ranked.swap_remove(i))
        }
    }
}

fn build_plan(p: &Pattern, args: &PlanArgs) -> Result<Plan, CliError> {
    let pick = choose_schedule(p, args)?;
    let options = PlanOptions { use_restrictions: !args.no_restrictions, use_bounds: !args.no_bounds };
    Ok(compile_plan(p, &pick.schedule, &pick.restrictions, options)?)
}

fn fraction(denominator: u64) -> String {
    format!("1/{denominator}")
}

#[derive(Serialize)]
struct ScheduleRow {
    index: usize,
    schedule: Vec<usize>,
    relations: Vec<[usize; 2]>,
    parents: Vec<Option<usize>>,
    z: Vec<usize>,
    cum_prob: Vec<String>,
    cost: f64,
}

#[derive(Serialize)]
struct SchedulesDoc {
    multiplicity: usize,
    distinct: usize,
    valid: Option<usize>,
    schedules: Vec<ScheduleRow>,
}

#[derive(Serialize)]
struct CountDoc {
    count: u64,
    wall_ms: u64,
    schedule: Vec<usize>,
    workers: usize,
}

#[derive(Serialize)]
struct MotifRow {
    code: String,
    name: Option<&'static str>,
    count: u64,
}

#[derive(Serialize)]
struct MotifsDoc {
    size: usize,
    motifs: Vec<MotifRow>,
    total: u64,
}

#[derive(Serialize)]
struct OracleDoc {
    induced: u64,
    labeled: u64,
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("documents serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

/// Runs a parsed command, writing the answer to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let json = cli.json;
    match cli.command {
        Command::Compile(args) => {
            let p = resolve_pattern(&args.pattern)?;
            let plan = build_plan(&p, &args.plan)?;
            if !json {
                writeln!(out, "# pattern: n={} edges={:?}", p.n(), p.edges())?;
                writeln!(out, "# schedule: {:?}", plan.schedule().order())?;
                write!(out, "{}", plan.pseudo_code())?;
                writeln!(out)?;
            }
            writeln!(out, "{}", plan_json::to_json(&plan))?;
        }
        Command::Schedules(args) => {
            let p = resolve_pattern(&args.pattern)?;
            let ranked = rank_schedules(&p, &params(&args.model)?);
            let valid = args.all_valid.then(|| generate_valid_recursive(&p).len());
            let rows: Vec<ScheduleRow> = ranked
                .iter()
                .enumerate()
                .map(|(index, sel)| {
                    let mut denom = 1u64;
                    let cum_prob = sel
                        .cost
                        .per_level
                        .iter()
                        .map(|l| {
                            denom *= l.z as u64;
                            fraction(denom)
                        })
                        .collect();
                    ScheduleRow {
                        index,
                        schedule: sel.schedule.order().to_vec(),
                        relations: sel.order.relations().iter().map(|&(a, b)| [a, b]).collect(),
                        parents: sel.restrictions.parents().to_vec(),
                        z: sel.cost.per_level.iter().map(|l| l.z).collect(),
                        cum_prob,
                        cost: sel.cost.total,
                    }
                })
                .collect();
            let doc =
                SchedulesDoc { multiplicity: automorphisms(&p).len(), distinct: rows.len(), valid, schedules: rows };
            if json {
                json_line(out, &doc)?;
            } else {
                writeln!(out, "multiplicity {}", doc.multiplicity)?;
                writeln!(out, "distinct {}", doc.distinct)?;
                if let Some(v) = doc.valid {
                    writeln!(out, "valid {v}")?;
                }
                for r in &doc.schedules {
                    let join = |xs: Vec<String>| xs.join(",");
                    writeln!(
                        out,
                        "[{}] schedule={} relations={} parents={} z={} cum_prob={} cost={:.6e}",
                        r.index,
                        join(r.schedule.iter().map(|x| x.to_string()).collect()),
                        join(r.relations.iter().map(|[a, b]| format!("{a}>{b}")).collect()),
                        join(r.parents.iter().map(|p| p.map_or("-".to_string(), |z| z.to_string())).collect()),
                        join(r.z.iter().map(|x| x.to_string()).collect()),
                        r.cum_prob.join(","),
                        r.cost
                    )?;
                }
            }
        }
        Command::Count(args) => {
            let workers = threads(args.threads)?;
            let plan = match (&args.pattern, &args.plan) {
                (Some(spec), _) => build_plan(&resolve_pattern(spec)?, &args.plan_args)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
                    plan_json::from_json(&text).map_err(|e| match e {
                        PlanJsonError::Core(c) => CliError::from(c),
                        other => CliError::Input(format!("{}: {other}", path.display())),
                    })?
                }
                (None, None) => return Err(CliError::Input("--pattern or --plan is required".into())),
            };
            let mut g = load_graph(&args.graph, err)?;
            if args.orient {
                g = orient_reindex(&g).0;
            }
            let result = engine::count(&g, &plan, workers)?;
            let _ = writeln!(err, "counted in {:?} with {workers} workers", result.wall_time);
            if json {
                let doc = CountDoc {
                    count: result.count,
                    wall_ms: result.wall_time.as_millis() as u64,
                    schedule: plan.schedule().order().to_vec(),
                    workers,
                };
                json_line(out, &doc)?;
            } else {
                writeln!(out, "{}", result.count)?;
            }
        }
        Command::Motifs(args) => {
            if !(3..=5).contains(&args.size) {
                return Err(CliError::Input(format!("--size {} outside 3..=5", args.size)));
            }
            let workers = threads(args.threads)?;
            let mut g = load_graph(&args.graph, err)?;
            if args.orient {
                g = orient_reindex(&g).0;
            }
            let rows = engine::motif_counts(&g, args.size, &params(&args.model)?, workers)?;
            let total = rows.iter().try_fold(0u64, |acc, r| acc.checked_add(r.count)).ok_or(CliError::Overflow)?;
            let doc = MotifsDoc {
                size: args.size,
                motifs: rows.into_iter().map(|r| MotifRow { code: r.code, name: r.name, count: r.count }).collect(),
                total,
            };
            if json {
                json_line(out, &doc)?;
            } else {
                for r in &doc.motifs {
                    writeln!(out, "{} {} {}", r.code, r.name.unwrap_or("-"), r.count)?;
                }
                writeln!(out, "total {}", doc.total)?;
            }
        }
        Command::Orient(args) => {
            let g = load_graph(&args.graph, err)?;
            let (o, _) = orient_reindex(&g);
            let file = File::create(&args.out).map_err(|e| io_err(&args.out, e))?;
            write_edge_list(&o, BufWriter::new(file)).map_err(|e| io_err(&args.out, e))?;
            let _ = writeln!(err, "wrote {} edges to {}", o.edge_count(), args.out.display());
        }
        Command::Oracle(args) => {
            let p = resolve_pattern(&args.pattern)?;
            let g = load_graph(&args.graph, err)?;
            let census = SubsetCensus::new(&g, p.n())?;
            let pick = select_schedule(&p, &CostModelParams::default());
            let report = census.report(&p, &pick.schedule, &pick.order, &pick.restrictions);
            let doc = OracleDoc { induced: report.induced_count, labeled: report.labeled_mapping_count };
            if json {
                json_line(out, &doc)?;
            } else {
                writeln!(out, "induced {}", doc.induced)?;
                writeln!(out, "labeled {}", doc.labeled)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
