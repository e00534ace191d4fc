//! The `mbcut` command line. [`run`] does the work and returns the exit
//! code (0 yes, 1 no, 2 usage or error); [`main`] wires it to the process.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::analysis::{
    build_maze, check_bounds, find_bowtie, find_flower, largest_bowtie, largest_flower, maximal_disjoint_subfamilies,
    AnalysisGuard, FamilyKind, Maze,
};
use crate::error::{Error, Result};
use crate::flow::{max_flow_z, FlowOutcome};
use crate::format::{parse_instance, write_instance};
use crate::generate::{self, RandomParams};
use crate::graph::{CutSet, EdgeId, EdgeSet, Vertex};
use crate::important::{enumerate_candidates, filter_important, filter_relative, CutFamily};
use crate::instance::{ChainInstance, CutInstance, Instance, WeightedCutInstance};
use crate::oracle::{self, SizeGuard};
use crate::reductions::{self, Bipartite, ReductionMap};
use crate::skew::{solve_dfas_with, solve_skew_with};
use crate::solver::{solve_mbcut_with, SolveStats, SolverOptions};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "mbcut",
    version,
    about = "Exact solvers for multi-budgeted directed cut problems"
)]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Emit a JSON run report on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Include search statistics in the human-readable summary.
    #[arg(long, global = true)]
    stats: bool,
    /// Explore sibling branches concurrently.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a multi-budgeted cut instance.
    Solve { file: PathBuf },
    /// Decide a skew edge multicut instance.
    Skew { file: PathBuf },
    /// Decide a multi-budgeted directed feedback arc set instance.
    Dfas { file: PathBuf },
    /// Enumerate important budget-respecting cuts of a cut instance.
    Important {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FilterMode::Exact)]
        filter: FilterMode,
    },
    /// Run the Z-respecting max-flow on a cut instance.
    Flow {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ZMode::Colored)]
        z: ZMode,
        /// Give up when the minimum cut exceeds this size (default: number of edges).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive reference solvers.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Transform instances between problems.
    Reduce {
        #[command(subcommand)]
        which: ReduceCommand,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
    /// Mazes, bowties and flowers of cut families.
    Analyze {
        #[command(subcommand)]
        which: AnalyzeCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterMode {
    Exact,
    Relative,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZMode {
    All,
    Colored,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Brute-force decision for any instance kind.
    Solve { file: PathBuf },
    /// All minimal XY-cuts of a cut instance up to a size.
    MinimalCuts {
        file: PathBuf,
        /// Largest cut size (default: sum of budgets).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Brute-force chain instance with its path cost.
    Chain { file: PathBuf },
    /// The minimum solution family F and its closest-to-sink part G.
    Families { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ReduceCommand {
    /// Bipartite vertex cover (`p vc` file) to a two-color cut instance.
    Vc {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Two-color cut instance to weighted st-cut.
    ToWeighted {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Weighted st-cut to two-color cut instance.
    FromWeighted {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        max_edges: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Mbcut,
    Skew,
    Dfas,
    Chain,
    Wcut,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// The k-path family with exactly k! important cuts.
    Factorial {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// A seeded random instance.
    Random {
        #[arg(long, value_enum, default_value_t = GenKind::Mbcut)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 14)]
        m: usize,
        /// Comma-separated budgets, one per color.
        #[arg(long, default_value = "1,1")]
        budgets: String,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        /// Terminal pairs (skew).
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Paths and extra cross paths (chain).
        #[arg(long, default_value_t = 4)]
        paths: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        extra: usize,
        /// Cardinality bound (chain, wcut).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Weight bound and largest edge weight (wcut).
        #[arg(long, default_value_t = 6)]
        w: u64,
        #[arg(long, default_value_t = 4)]
        max_weight: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// A large layered two-color cut instance.
    Layered {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        channels: usize,
        #[arg(long, default_value_t = 50)]
        layers: usize,
        #[arg(long, default_value_t = 20)]
        width: usize,
        #[arg(long, default_value_t = 3)]
        out_degree: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    file: PathBuf,
    /// Cuts, one per line as edge ids; default is the closest-to-sink family
    /// of a wcut or chain instance.
    #[arg(long)]
    family: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum AnalyzeCommand {
    /// Print the orientation table of a pairwise disjoint family.
    Maze(FamilyArgs),
    /// Find an a-bowtie (default: the largest).
    Bowtie {
        #[command(flatten)]
        args: FamilyArgs,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Find a flower of b members (default: the largest).
    Flower {
        #[command(flatten)]
        args: FamilyArgs,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Check the bowtie and flower bounds of a closest-to-sink family.
    Bounds(FamilyArgs),
}

/// Machine-readable result of one command.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceInfo>,
    pub answer: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub usage: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub stats: Value,
    pub version: &'static str,
}

#[derive(Debug, Serialize)]
pub struct InstanceInfo {
    pub kind: &'static str,
    /// SHA-256 of the input bytes.
    pub digest: String,
    pub n: usize,
    pub m: usize,
    pub colors: usize,
}

struct Outcome {
    answer: &'static str,
    exit: u8,
    cut: Option<CutSet>,
    usage: Option<Vec<usize>>,
    result: Value,
    stats: Value,
    /// Human-readable lines.
    text: Vec<String>,
}

impl Outcome {
    fn decision(cut: Option<CutSet>, inst: &Instance) -> Self {
        let usage = cut.as_ref().map(|c| c.usage(inst.graph()));
        Outcome {
            answer: if cut.is_some() { "yes" } else { "no" },
            exit: if cut.is_some() { 0 } else { 1 },
            text: vec![match &cut {
                Some(c) => format!("yes: cut {} ({} edges)", numbers(c), c.len()),
                None => "no".to_string(),
            }],
            cut,
            usage,
            result: Value::Null,
            stats: Value::Null,
        }
    }

    fn done(result: Value, text: Vec<String>) -> Self {
        Outcome {
            answer: "ok",
            exit: 0,
            cut: None,
            usage: None,
            result,
            stats: Value::Null,
            text,
        }
    }
}

fn numbers(c: &CutSet) -> String {
    format!("{:?}", c.numbers())
}

fn solve_stats(stats: &SolveStats) -> Value {
    json!({
        "nodes": stats.nodes,
        "flow_calls": stats.flow_calls,
        "depth_max": stats.depth_max,
        "same_lambda_children": stats.same_lambda_children,
        "ms": stats.elapsed.as_secs_f64() * 1000.0,
    })
}

fn stats_line(stats: &Value) -> String {
    match stats.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" "),
        None => String::new(),
    }
}

struct Loaded {
    instance: Instance,
    info: InstanceInfo,
}

fn load(path: &Path) -> Result<Loaded> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    let instance = parse_instance(&bytes)?;
    let g = instance.graph();
    let info = InstanceInfo {
        kind: instance.kind(),
        digest: hex_digest(&bytes),
        n: g.num_vertices(),
        m: g.num_edges(),
        colors: g.num_colors(),
    };
    Ok(Loaded { instance, info })
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn want_cut(inst: &Instance) -> Result<&CutInstance> {
    match inst {
        Instance::Cut(c) => Ok(c),
        other => Err(Error::invalid(format!(
            "expected an mbcut instance, found {}",
            other.kind()
        ))),
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(parsed) => parsed,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let output = cli.output;
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, output) {
        Ok((info, outcome)) => {
            let written = if output.json {
                let report = RunReport {
                    schema: SCHEMA,
                    command: echo,
                    instance: info,
                    answer: outcome.answer,
                    cut: outcome.cut.as_ref().map(CutSet::numbers),
                    usage: outcome.usage.clone(),
                    result: outcome.result,
                    stats: outcome.stats,
                    version: env!("CARGO_PKG_VERSION"),
                };
                serde_json::to_string_pretty(&report)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                let mut lines = outcome.text;
                if output.stats && !outcome.stats.is_null() {
                    lines.push(format!("stats: {}", stats_line(&outcome.stats)));
                }
                lines.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            match written {
                Ok(()) => outcome.exit,
                Err(e) => {
                    let _ = writeln!(err, "mbcut: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "mbcut: {e}");
            2
        }
    }
}

type Dispatched = (Option<InstanceInfo>, Outcome);

fn dispatch(command: Command, output: Output) -> Result<Dispatched> {
    let opts = SolverOptions {
        parallel: output.parallel,
    };
    match command {
        Command::Solve { file } => {
            let l = load(&file)?;
            let (cut, stats) = solve_mbcut_with(want_cut(&l.instance)?, opts)?;
            let mut o = Outcome::decision(cut, &l.instance);
            o.stats = solve_stats(&stats);
            Ok((Some(l.info), o))
        }
        Command::Skew { file } => {
            let l = load(&file)?;
            let Instance::Skew(inst) = &l.instance else {
                return Err(Error::invalid(format!(
                    "expected a skew instance, found {}",
                    l.info.kind
                )));
            };
            let (cut, stats) = solve_skew_with(inst, opts)?;
            let mut o = Outcome::decision(cut, &l.instance);
            o.stats = solve_stats(&stats);
            Ok((Some(l.info), o))
        }
        Command::Dfas { file } => {
            let l = load(&file)?;
            let Instance::Dfas(inst) = &l.instance else {
                return Err(Error::invalid(format!(
                    "expected a dfas instance, found {}",
                    l.info.kind
                )));
            };
            let (cut, stats) = solve_dfas_with(inst, opts)?;
            let mut o = Outcome::decision(cut, &l.instance);
            o.stats = solve_stats(&stats);
            Ok((Some(l.info), o))
        }
        Command::Important { file, filter } => {
            let l = load(&file)?;
            let o = important(want_cut(&l.instance)?, filter)?;
            Ok((Some(l.info), o))
        }
        Command::Flow { file, z, k } => {
            let l = load(&file)?;
            let o = flow(want_cut(&l.instance)?, z, k)?;
            Ok((Some(l.info), o))
        }
        Command::Oracle { which } => oracle_cmd(which),
        Command::Reduce { which } => reduce_cmd(which),
        Command::Gen { which } => gen_cmd(which).map(|o| (None, o)),
        Command::Analyze { which } => analyze_cmd(which),
    }
}

fn family_json(family: &CutFamily) -> Vec<Vec<usize>> {
    family.cuts().map(CutSet::numbers).collect()
}

fn important(inst: &CutInstance, filter: FilterMode) -> Result<Outcome> {
    let start = Instant::now();
    let z = inst.graph.colored_edges();
    let (candidates, stats) = enumerate_candidates(inst, &z)?;
    let family = match filter {
        FilterMode::Exact => filter_important(inst, &z, &candidates, &SizeGuard::from_env()?)?,
        FilterMode::Relative => filter_relative(inst, &candidates)?,
        FilterMode::None => candidates.clone(),
    };
    let mut text = vec![format!(
        "{} candidates, {} after filtering ({})",
        candidates.len(),
        family.len(),
        serde_json::to_value(family.origin)
            .unwrap_or(Value::Null)
            .as_str()
            .unwrap_or("")
    )];
    text.extend(family.cuts().map(numbers));
    let mut o = Outcome::done(
        json!({
            "origin": family.origin,
            "candidates": candidates.len(),
            "size": family.len(),
            "family": family_json(&family),
        }),
        text,
    );
    o.stats = json!({
        "important_calls": stats.important_calls,
        "enum_calls": stats.enum_calls,
        "flow_calls": stats.flow_calls,
        "node_bound": stats.node_bound.to_string(),
        "ms": start.elapsed().as_secs_f64() * 1000.0,
    });
    Ok(o)
}

fn flow(inst: &CutInstance, z: ZMode, k: Option<usize>) -> Result<Outcome> {
    let g = &inst.graph;
    let z = match z {
        ZMode::All => EdgeSet::full(g.num_edges()),
        ZMode::Colored => g.colored_edges(),
    };
    let k = k.unwrap_or(g.num_edges());
    match max_flow_z(g, &inst.x, &inst.y, &z, k)? {
        FlowOutcome::NoCutWithinK => Ok(Outcome {
            answer: "no",
            exit: 1,
            cut: None,
            usage: None,
            result: json!({ "within_k": false, "k": k }),
            stats: Value::Null,
            text: vec![format!("no Z-respecting cut of size at most {k}")],
        }),
        FlowOutcome::Certificate(cert) => {
            let paths: Vec<Vec<usize>> = cert
                .paths
                .iter()
                .map(|p| p.iter().map(|e| e.number()).collect())
                .collect();
            let text = vec![
                format!("lambda = {}", cert.lambda),
                format!("paths = {paths:?}"),
                format!("B = {}", numbers(&cert.bottleneck)),
                format!("C = {}", numbers(&cert.cut)),
            ];
            Ok(Outcome {
                answer: "yes",
                exit: 0,
                usage: Some(cert.cut.usage(g)),
                result: json!({
                    "lambda": cert.lambda,
                    "paths": paths,
                    "bottleneck": cert.bottleneck.numbers(),
                    "closest": cert.cut.numbers(),
                }),
                cut: Some(cert.cut),
                stats: Value::Null,
                text,
            })
        }
    }
}

fn oracle_cmd(which: OracleCommand) -> Result<Dispatched> {
    let guard = SizeGuard::from_env()?;
    match which {
        OracleCommand::Solve { file } => {
            let l = load(&file)?;
            let cut = match &l.instance {
                Instance::Cut(i) => oracle::brute_solve_mbcut(i, &guard)?,
                Instance::Skew(i) => oracle::brute_solve_skew(i, &guard)?,
                Instance::Dfas(i) => oracle::brute_solve_dfas(i, &guard)?,
                Instance::Chain(i) => oracle::brute_solve_chain(i, &guard)?,
                Instance::Weighted(i) => oracle::brute_solve_weighted(i, &guard)?,
            };
            Ok((Some(l.info), Outcome::decision(cut, &l.instance)))
        }
        OracleCommand::MinimalCuts { file, max_size } => {
            let l = load(&file)?;
            let inst = want_cut(&l.instance)?;
            let max = max_size.unwrap_or(inst.budgets.total().max(0) as usize);
            let family = oracle::brute_minimal_cuts(&inst.graph, &inst.x, &inst.y, max, &guard)?;
            let mut text = vec![format!("{} minimal cuts of size at most {max}", family.len())];
            text.extend(family.cuts().map(numbers));
            let o = Outcome::done(json!({ "size": family.len(), "family": family_json(&family) }), text);
            Ok((Some(l.info), o))
        }
        OracleCommand::Chain { file } => {
            let l = load(&file)?;
            let Instance::Chain(inst) = &l.instance else {
                return Err(Error::invalid(format!(
                    "expected a chain instance, found {}",
                    l.info.kind
                )));
            };
            let cut = oracle::brute_solve_chain(inst, &guard)?;
            let mut o = Outcome::decision(cut, &l.instance);
            if let Some(c) = &o.cut {
                let cost = oracle::chain_cost(inst, c);
                o.result = json!({ "paths_touched": cost });
                o.text.push(format!("touches {cost} of {} paths", inst.paths.len()));
            }
            Ok((Some(l.info), o))
        }
        OracleCommand::Families { file } => {
            let l = load(&file)?;
            let (f, g) = closest_families(&l.instance, &guard)?;
            let mut text = vec![format!("|F| = {}, |G| = {}", f.len(), g.len())];
            text.extend(g.cuts().map(|c| format!("G: {}", numbers(c))));
            let o = Outcome::done(
                json!({ "f": family_json(&f), "g": family_json(&g), "f_size": f.len(), "g_size": g.len() }),
                text,
            );
            Ok((Some(l.info), o))
        }
    }
}

fn closest_families(inst: &Instance, guard: &SizeGuard) -> Result<(CutFamily, CutFamily)> {
    match inst {
        Instance::Weighted(i) => oracle::brute_closest_families_weighted(i, guard),
        Instance::Chain(i) => oracle::brute_closest_families_chain(i, guard),
        other => Err(Error::invalid(format!(
            "closest families need a wcut or chain instance, found {}",
            other.kind()
        ))),
    }
}

fn emit_instance(inst: &Instance, out: Option<&Path>, map: Option<&ReductionMap>) -> Result<Outcome> {
    let text = write_instance(inst);
    let mut result = json!({ "kind": inst.kind(), "instance": text });
    if let Some(m) = map {
        result["map"] = json!(m.notes());
    }
    let lines = match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            let mut lines = vec![format!("wrote {} instance to {}", inst.kind(), path.display())];
            if let Some(m) = map {
                lines.extend(m.notes());
            }
            lines
        }
        None => text.lines().map(str::to_string).collect(),
    };
    Ok(Outcome::done(result, lines))
}

fn reduce_cmd(which: ReduceCommand) -> Result<Dispatched> {
    match which {
        ReduceCommand::Vc { file, out } => {
            let bytes = std::fs::read(&file)?;
            let (bip, k_u, k_l) =
                parse_vc(std::str::from_utf8(&bytes).map_err(|_| Error::syntax(0, "input is not UTF-8"))?)?;
            let (inst, map) = reductions::vc_to_mbcut(&bip, k_u, k_l)?;
            let o = emit_instance(&Instance::Cut(inst), out.as_deref(), Some(&map))?;
            let info = InstanceInfo {
                kind: "vc",
                digest: hex_digest(&bytes),
                n: bip.u + bip.l,
                m: bip.edges.len(),
                colors: 0,
            };
            Ok((Some(info), o))
        }
        ReduceCommand::ToWeighted { file, out } => {
            let l = load(&file)?;
            let (inst, map) = reductions::mbcut2_to_weighted(want_cut(&l.instance)?)?;
            let o = emit_instance(&Instance::Weighted(inst), out.as_deref(), Some(&map))?;
            Ok((Some(l.info), o))
        }
        ReduceCommand::FromWeighted { file, out, max_edges } => {
            let l = load(&file)?;
            let Instance::Weighted(w) = &l.instance else {
                return Err(Error::invalid(format!(
                    "expected a wcut instance, found {}",
                    l.info.kind
                )));
            };
            let (inst, map) = reductions::weighted_to_mbcut2(w, max_edges)?;
            let o = emit_instance(&Instance::Cut(inst), out.as_deref(), Some(&map))?;
            Ok((Some(l.info), o))
        }
    }
}

/// Bipartite vertex-cover input:
///
/// ```text
/// p vc <|U|> <|L|> <m>
/// b <k_U> <k_L>
/// e <u> <l>          (1-based within each side)
/// ```
pub fn parse_vc(text: &str) -> Result<(Bipartite, i64, i64)> {
    let mut header = None;
    let mut budgets = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((&tag, rest)) = toks.split_first() else {
            continue;
        };
        let nums = |want: usize| -> Result<Vec<i64>> {
            if rest.len() != want {
                return Err(Error::syntax(line, format!("`{tag}` takes {want} fields")));
            }
            rest.iter()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::syntax(line, format!("expected an integer, found `{t}`")))
                })
                .collect()
        };
        match tag {
            "p" => {
                if rest.first() != Some(&"vc") {
                    return Err(Error::syntax(line, "header must be `p vc <U> <L> <m>`"));
                }
                let rest = &rest[1..];
                if rest.len() != 3 {
                    return Err(Error::syntax(line, "header must be `p vc <U> <L> <m>`"));
                }
                let v: Vec<usize> = rest
                    .iter()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::syntax(line, format!("expected an integer, found `{t}`")))
                    })
                    .collect::<Result<_>>()?;
                header = Some((v[0], v[1], v[2]));
            }
            "b" => {
                let v = nums(2)?;
                budgets = Some((v[0], v[1]));
            }
            "e" => {
                let (u, l, _) = header.ok_or_else(|| Error::syntax(line, "edge before header"))?;
                let v = nums(2)?;
                if v[0] < 1 || v[0] as usize > u || v[1] < 1 || v[1] as usize > l {
                    return Err(Error::syntax(
                        line,
                        format!("edge ({}, {}) outside {u}×{l}", v[0], v[1]),
                    ));
                }
                edges.push((v[0] as usize - 1, v[1] as usize - 1));
            }
            other => return Err(Error::syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let (u, l, m) = header.ok_or_else(|| Error::syntax(1, "missing `p vc` header"))?;
    if edges.len() != m {
        return Err(Error::invalid(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let (k_u, k_l) = budgets.ok_or_else(|| Error::invalid("missing `b <k_U> <k_L>` line"))?;
    Ok((Bipartite::new(u, l, edges)?, k_u, k_l))
}

fn parse_budgets(spec: &str) -> Result<Vec<i64>> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad budget `{t}`")))
        })
        .collect()
}

fn gen_cmd(which: GenCommand) -> Result<Outcome> {
    match which {
        GenCommand::Factorial { k, out } => {
            emit_instance(&Instance::Cut(generate::gen_factorial_family(k)?), out.as_deref(), None)
        }
        GenCommand::Random {
            kind,
            seed,
            n,
            m,
            budgets,
            density,
            q,
            paths,
            max_len,
            extra,
            k,
            w,
            max_weight,
            out,
        } => {
            let budgets = parse_budgets(&budgets)?;
            let p = RandomParams {
                n,
                m,
                num_colors: budgets.len(),
                budgets,
                color_density: density,
                simple: true,
            };
            let inst = match kind {
                GenKind::Mbcut => Instance::Cut(generate::gen_random_cut(seed, &p)?),
                GenKind::Skew => Instance::Skew(generate::gen_random_skew(seed, &p, q)?),
                GenKind::Dfas => Instance::Dfas(generate::gen_random_dfas(seed, &p)?),
                GenKind::Chain => Instance::Chain(generate::gen_random_chain(seed, paths, max_len, extra, k)?),
                GenKind::Wcut => Instance::Weighted(generate::gen_random_weighted(seed, n, m, max_weight, k, w)?),
            };
            emit_instance(&inst, out.as_deref(), None)
        }
        GenCommand::Layered {
            seed,
            channels,
            layers,
            width,
            out_degree,
            out,
        } => {
            let inst = generate::gen_layered(seed, channels, layers, width, out_degree)?;
            emit_instance(&Instance::Cut(inst), out.as_deref(), None)
        }
    }
}

/// Cuts listed one per line as edge ids; `#` starts a comment.
pub fn parse_family(text: &str, num_edges: usize) -> Result<Vec<CutSet>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut edges = Vec::new();
        for tok in body.split_whitespace() {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::syntax(i + 1, format!("expected an edge id, found `{tok}`")))?;
            if e == 0 || e > num_edges {
                return Err(Error::syntax(i + 1, format!("edge {e} not in 1..={num_edges}")));
            }
            edges.push(EdgeId::from_number(e));
        }
        out.push(CutSet::new(edges));
    }
    Ok(out)
}

struct AnalysisInput {
    info: InstanceInfo,
    instance: Instance,
    s: Vertex,
    t: Vertex,
    family: Vec<CutSet>,
    /// True when the family came from the closest-family oracle.
    derived: bool,
}

fn analysis_input(args: &FamilyArgs) -> Result<AnalysisInput> {
    let l = load(&args.file)?;
    let (s, t) = match &l.instance {
        Instance::Weighted(i) => (i.s, i.t),
        Instance::Chain(i) => (i.s, i.t),
        Instance::Cut(i) if i.x.len() == 1 && i.y.len() == 1 => (i.x[0], i.y[0]),
        other => {
            return Err(Error::invalid(format!(
                "analysis needs a single source and sink; {} instance does not have them",
                other.kind()
            )))
        }
    };
    let (family, derived) = match &args.family {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            (parse_family(&text, l.instance.graph().num_edges())?, false)
        }
        None => {
            let (_, g) = closest_families(&l.instance, &SizeGuard::from_env()?)?;
            (g.into_vec(), true)
        }
    };
    Ok(AnalysisInput {
        info: l.info,
        instance: l.instance,
        s,
        t,
        family,
        derived,
    })
}

/// The maze of a given family, or of the first largest pairwise disjoint
/// equal-size subfamily of an oracle-derived family.
fn maze_of(input: &AnalysisInput) -> Result<(Maze, Vec<CutSet>)> {
    let members = if input.derived {
        let subs = maximal_disjoint_subfamilies(&input.family);
        let best = subs.iter().max_by_key(|s| (s.len(), std::cmp::Reverse((*s).clone())));
        best.map(|s| s.iter().map(|&i| input.family[i].clone()).collect())
            .unwrap_or_default()
    } else {
        input.family.clone()
    };
    let maze = build_maze(input.instance.graph(), input.s, input.t, &members)?;
    Ok((maze, members))
}

fn member_numbers(maze: &Maze) -> Vec<Vec<usize>> {
    maze.members()
        .iter()
        .map(|m| m.iter().map(|e| e.number()).collect())
        .collect()
}

fn edge_numbers(es: &[EdgeId]) -> Vec<usize> {
    es.iter().map(|e| e.number()).collect()
}

fn analyze_cmd(which: AnalyzeCommand) -> Result<Dispatched> {
    let guard = AnalysisGuard::default();
    match which {
        AnalyzeCommand::Maze(args) => {
            let input = analysis_input(&args)?;
            let (maze, _) = maze_of(&input)?;
            let mut table = Vec::new();
            let mut text = vec![format!("maze of {} members of size {}", maze.len(), maze.k())];
            for u in 0..maze.len() {
                let mut row = Vec::new();
                for v in 0..maze.len() {
                    if u == v {
                        row.push(Value::Null);
                        continue;
                    }
                    let vals: Vec<_> = (0..maze.k()).map(|p| maze.f(u, v, p)).collect();
                    text.push(format!(
                        "f[{},{}] = {}",
                        u + 1,
                        v + 1,
                        vals.iter().map(ToString::to_string).collect::<String>()
                    ));
                    row.push(json!(vals));
                }
                table.push(row);
            }
            let o = Outcome::done(json!({ "members": member_numbers(&maze), "f": table }), text);
            Ok((Some(input.info), o))
        }
        AnalyzeCommand::Bowtie { args, size } => {
            let input = analysis_input(&args)?;
            let (maze, _) = maze_of(&input)?;
            let found = match size {
                Some(a) => find_bowtie(&maze, a, &guard)?,
                None => largest_bowtie(&maze, &guard)?.1,
            };
            let members = member_numbers(&maze);
            let o = match found {
                Some(bt) => {
                    let seq: Vec<usize> = bt.sequence.iter().map(|u| u + 1).collect();
                    let a: Vec<_> = bt.a.iter().map(|x| edge_numbers(x)).collect();
                    let b: Vec<_> = bt.b.iter().map(|x| edge_numbers(x)).collect();
                    let mut o = Outcome::done(
                        json!({ "members": members, "size": bt.len(), "sequence": seq, "a": a, "b": b }),
                        vec![format!("{}-bowtie on members {seq:?}", bt.len())],
                    );
                    o.text
                        .extend((0..bt.len()).map(|i| format!("  a = {:?}, b = {:?}", a[i], b[i])));
                    o.answer = "yes";
                    o
                }
                None => Outcome {
                    answer: "no",
                    exit: 1,
                    cut: None,
                    usage: None,
                    result: json!({ "members": members }),
                    stats: Value::Null,
                    text: vec!["no bowtie".to_string()],
                },
            };
            Ok((Some(input.info), o))
        }
        AnalyzeCommand::Flower { args, size } => {
            let input = analysis_input(&args)?;
            let (maze, _) = maze_of(&input)?;
            let found = match size {
                Some(b) => find_flower(&maze, b, &guard)?,
                None => largest_flower(&maze, &guard)?,
            };
            let members = member_numbers(&maze);
            let o = match found {
                Some(fl) => {
                    let ms: Vec<usize> = fl.members.iter().map(|u| u + 1).collect();
                    let mut o = Outcome::done(
                        json!({
                            "members": members,
                            "size": fl.members.len(),
                            "flower": ms,
                            "zeta": fl.zeta,
                            "elements": edge_numbers(&fl.elements),
                        }),
                        vec![format!(
                            "flower of {} members {ms:?}, zeta {}, elements {:?}",
                            fl.members.len(),
                            fl.zeta,
                            edge_numbers(&fl.elements)
                        )],
                    );
                    o.answer = "yes";
                    o
                }
                None => Outcome {
                    answer: "no",
                    exit: 1,
                    cut: None,
                    usage: None,
                    result: json!({ "members": members }),
                    stats: Value::Null,
                    text: vec!["no flower".to_string()],
                },
            };
            Ok((Some(input.info), o))
        }
        AnalyzeCommand::Bounds(args) => {
            let input = analysis_input(&args)?;
            let kind = match &input.instance {
                Instance::Weighted(WeightedCutInstance { k, .. }) => FamilyKind::Weighted { k: *k },
                Instance::Chain(c @ ChainInstance { .. }) => FamilyKind::Chain {
                    path_of_edge: c.path_of_edge(),
                },
                other => {
                    return Err(Error::invalid(format!(
                        "bounds need a wcut or chain instance, found {}",
                        other.kind()
                    )))
                }
            };
            let family = CutFamily::from_cuts(input.family.clone(), crate::important::FamilyOrigin::Brute);
            let report = check_bounds(input.instance.graph(), input.s, input.t, &family, &kind, &guard)?;
            let passed = report.passed();
            let text = report
                .checks
                .iter()
                .map(|c| format!("{}: {} ({})", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail))
                .collect();
            let o = Outcome {
                answer: if passed { "yes" } else { "no" },
                exit: if passed { 0 } else { 1 },
                cut: None,
                usage: None,
                result: serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
                stats: Value::Null,
                text,
            };
            Ok((Some(input.info), o))
        }
    }
}

/// Process entry point for the `mbcut` binary.
pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
