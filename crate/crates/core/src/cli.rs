//! Command-line front end. `dispatch` takes argv and two sinks so tests can
//! drive it without spawning a process.
//!
//! Output of `sssp`, `csp` and `ksp` is one `key: value` pair per line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use crate::algorithms::{CspAlgorithm, SsspAlgorithm};
use crate::batch::cross_check;
use crate::bench::{run_benchmark, BenchAlgorithm, BenchConfig, Task};
use crate::generate::{random_instance, RandomInstanceSpec};
use crate::graph::{Delay, ProblemInstance, VertexId, Weight};
use crate::ksp::k_shortest_paths;
use crate::oracle::{oracle_csp, oracle_ksp, oracle_sssp};
use crate::sssp::BellmanFordMode;
use crate::timing::PhaseTimings;

#[derive(Debug, Parser)]
#[command(
    name = "pathbench",
    version,
    about = "Shortest-path algorithms and benchmark harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single-source shortest paths.
    Sssp(SsspArgs),
    /// Shortest path under a delay budget.
    Csp(CspArgs),
    /// k lightest walks from a source.
    Ksp(KspArgs),
    /// Time algorithms over sampled vertex pairs and write a CSV.
    Bench(BenchArgs),
    /// Write a seeded random graph file.
    Generate(GenerateArgs),
    /// Check that all single-source algorithms agree on every source.
    Verify(VerifyArgs),
    /// Exhaustive reference answers for small graphs.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct SsspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    target: Option<VertexId>,
    /// dijkstra, bf, bf-yen, bf-yen-random or delta.
    #[arg(long)]
    algo: String,
    /// Seed for bf-yen-random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bucket width for delta; defaults to the rounded-up mean edge weight.
    #[arg(long)]
    delta: Option<Weight>,
}

#[derive(Debug, Args)]
struct CspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    target: VertexId,
    /// Overrides the bound in the graph header.
    #[arg(long)]
    bound: Option<Delay>,
    /// dijkstra or bellman-ford.
    #[arg(long)]
    algo: CspAlgorithm,
}

#[derive(Debug, Args)]
struct KspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    k: usize,
    /// Only report walks ending here.
    #[arg(long)]
    target: Option<VertexId>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    graph: PathBuf,
    /// 1 = single-source shortest paths, 2 = delay-constrained.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    task: u8,
    #[arg(long, default_value_t = BenchConfig::DEFAULT_SAMPLE)]
    sample: usize,
    #[arg(long, default_value_t = BenchConfig::DEFAULT_RUNS)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated algorithm subset; defaults to every algorithm of the task.
    #[arg(long, value_delimiter = ',')]
    algos: Vec<String>,
    /// Bucket width for delta.
    #[arg(long)]
    delta: Option<Weight>,
    /// Overrides the bound in the graph header (task 2).
    #[arg(long)]
    bound: Option<Delay>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 20)]
    max_weight: u32,
    #[arg(long, default_value_t = 0)]
    max_delay: Delay,
    #[arg(long, default_value_t = 0)]
    bound: Delay,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Embed a random Hamiltonian cycle.
    #[arg(long)]
    strongly_connected: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bucket width for delta.
    #[arg(long)]
    delta: Option<Weight>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    source: VertexId,
    /// Required for csp.
    #[arg(long)]
    target: Option<VertexId>,
    /// Walk count; switches to walk enumeration.
    #[arg(long)]
    k: Option<usize>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status: 0 on success, 1 on a runtime error, 2 on a usage
/// error.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                2
            } else {
                let _ = out.write_all(rendered.as_bytes());
                0
            };
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn load(path: &PathBuf) -> anyhow::Result<ProblemInstance> {
    ProblemInstance::from_path(path).with_context(|| format!("cannot load {}", path.display()))
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<u8> {
    match command {
        Command::Sssp(a) => sssp(a, out)?,
        Command::Csp(a) => csp(a, out)?,
        Command::Ksp(a) => ksp(a, out, err)?,
        Command::Bench(a) => bench(a, out)?,
        Command::Generate(a) => generate(a, out)?,
        Command::Verify(a) => return verify(a, out),
        Command::Oracle(a) => oracle(a, out)?,
    }
    Ok(0)
}

fn join_path(path: &[VertexId]) -> String {
    path.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Maps the split-off sink back to the source it was split from.
fn unsplit(path: Vec<VertexId>, sink: Option<VertexId>, s: VertexId) -> Vec<VertexId> {
    match sink {
        Some(sink) => path
            .into_iter()
            .map(|v| if v == sink { s } else { v })
            .collect(),
        None => path,
    }
}

fn write_timings(out: &mut dyn Write, t: &PhaseTimings) -> std::io::Result<()> {
    writeln!(out, "preprocessing_ns: {}", t.preprocessing_ns)?;
    writeln!(out, "computation_ns: {}", t.computation_ns)?;
    writeln!(out, "total_ns: {}", t.total_ns)
}

fn sssp(a: SsspArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let inst = load(&a.graph)?;
    let algo = SsspAlgorithm::from_name(&a.algo, a.seed, a.delta)?;
    // A closed walk through the source is a path to its split-off copy.
    let split = match a.target {
        Some(t) if t == a.source => Some(inst.graph.augment_source(a.source)?),
        _ => None,
    };
    let (graph, target) = match &split {
        Some((g, sink)) => (g, Some(*sink)),
        None => (&inst.graph, a.target),
    };
    let result = algo.run(graph, a.source, target)?;
    let sink = split.as_ref().map(|(_, sink)| *sink);

    writeln!(out, "algorithm: {algo}")?;
    match target {
        Some(t) => {
            let status = if result.dist(t).is_finite() {
                "ok"
            } else {
                "unreachable"
            };
            writeln!(out, "status: {status}")?;
            writeln!(out, "weight: {}", result.dist(t))?;
            match result.path {
                Some(p) => writeln!(out, "path: {}", join_path(&unsplit(p, sink, a.source)))?,
                None => writeln!(out, "path: none")?,
            }
        }
        None => {
            writeln!(out, "status: ok")?;
            let dist: Vec<String> = result.dist.iter().map(|d| d.to_string()).collect();
            writeln!(out, "dist: {}", dist.join(" "))?;
        }
    }
    write_timings(out, &result.timings)?;
    Ok(())
}

fn csp(a: CspArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let mut inst = load(&a.graph)?;
    if let Some(b) = a.bound {
        inst.bound = b;
    }
    let mut sink = None;
    let mut target = a.target;
    if a.source == a.target {
        let (g, s2) = inst.graph.augment_source(a.source)?;
        inst = ProblemInstance::new(g, inst.bound);
        sink = Some(s2);
        target = s2;
    }
    let result = a.algo.run(&inst, a.source, target)?;

    writeln!(out, "algorithm: {}", a.algo)?;
    writeln!(out, "bound: {}", inst.bound)?;
    writeln!(
        out,
        "status: {}",
        if result.is_feasible() {
            "ok"
        } else {
            "infeasible"
        }
    )?;
    writeln!(out, "weight: {}", result.weight)?;
    match result.delay {
        Some(d) => writeln!(out, "delay: {d}")?,
        None => writeln!(out, "delay: none")?,
    }
    match result.path {
        Some(p) => writeln!(out, "path: {}", join_path(&unsplit(p, sink, a.source)))?,
        None => writeln!(out, "path: none")?,
    }
    write_timings(out, &result.timings)?;
    Ok(())
}

fn ksp(a: KspArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<()> {
    let inst = load(&a.graph)?;
    let start = Instant::now();
    let paths = k_shortest_paths(&inst.graph, a.source, a.k, a.target)?;
    let total_ns = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX);

    if paths.len() < a.k {
        let noun = if paths.len() == 1 {
            "path exists"
        } else {
            "paths exist"
        };
        writeln!(err, "warning: only {} {noun}", paths.len())?;
    }
    writeln!(out, "count: {}", paths.len())?;
    for (i, p) in paths.iter().enumerate() {
        writeln!(
            out,
            "path {}: weight {}: {}",
            i + 1,
            p.weight,
            join_path(&p.vertices)
        )?;
    }
    writeln!(out, "total_ns: {total_ns}")?;
    Ok(())
}

fn bench_algorithm(
    name: &str,
    task: Task,
    seed: u64,
    delta: Option<Weight>,
) -> anyhow::Result<BenchAlgorithm> {
    Ok(match task {
        Task::Sssp => BenchAlgorithm::Sssp(SsspAlgorithm::from_name(name, seed, delta)?),
        Task::Csp => BenchAlgorithm::Csp(name.parse()?),
    })
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let task = if a.task == 1 { Task::Sssp } else { Task::Csp };
    let mut cfg = BenchConfig::new(&a.graph, task, &a.out);
    cfg.sample = a.sample;
    cfg.runs = a.runs;
    cfg.seed = a.seed;
    cfg.bound = a.bound;
    if !a.algos.is_empty() {
        cfg.algorithms = a
            .algos
            .iter()
            .map(|name| bench_algorithm(name, task, a.seed, a.delta))
            .collect::<anyhow::Result<_>>()?;
    } else if a.delta.is_some() {
        for algo in &mut cfg.algorithms {
            if let BenchAlgorithm::Sssp(SsspAlgorithm::DeltaStepping { delta }) = algo {
                *delta = a.delta;
            }
        }
    }

    let summary = run_benchmark(&cfg)?;
    writeln!(out, "rows: {}", summary.rows)?;
    writeln!(out, "sample: {}", join_path(&summary.sample))?;
    for s in &summary.per_algorithm {
        writeln!(
            out,
            "{}: rows {} mean_preprocessing_ns {:.0} mean_computation_ns {:.0} mean_total_ns {:.0}",
            s.algorithm, s.rows, s.mean_preprocessing_ns, s.mean_computation_ns, s.mean_total_ns
        )?;
    }
    if !summary.weight_mismatches.is_empty() {
        bail!(
            "path weights disagree on {} pair(s), first {:?}",
            summary.weight_mismatches.len(),
            summary.weight_mismatches[0]
        );
    }
    writeln!(out, "csv: {}", a.out.display())?;
    Ok(())
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let spec = RandomInstanceSpec {
        n: a.n,
        m: a.m,
        max_weight: a.max_weight,
        max_delay: a.max_delay,
        bound: a.bound,
        strongly_connected: a.strongly_connected,
    };
    let inst = random_instance(&spec, a.seed)?;
    std::fs::write(&a.out, inst.to_text())
        .with_context(|| format!("cannot write {}", a.out.display()))?;
    writeln!(
        out,
        "wrote {} ({} vertices, {} edges)",
        a.out.display(),
        a.n,
        a.m
    )?;
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let inst = load(&a.graph)?;
    let mut algos = vec![
        SsspAlgorithm::Dijkstra,
        SsspAlgorithm::BellmanFord(BellmanFordMode::Naive),
        SsspAlgorithm::BellmanFord(BellmanFordMode::Yen),
        SsspAlgorithm::BellmanFord(BellmanFordMode::YenRandom { seed: a.seed }),
        SsspAlgorithm::DeltaStepping { delta: a.delta },
    ];
    algos.dedup();
    let sources: Vec<_> = inst.graph.vertices().collect();
    let disagreements = cross_check(&inst.graph, &algos, &sources)?;
    for d in disagreements.iter().take(20) {
        writeln!(
            out,
            "mismatch: source {} vertex {} {} {} vs dijkstra {}",
            d.source, d.vertex, d.algorithm, d.found, d.expected
        )?;
    }
    writeln!(out, "sources: {}", sources.len())?;
    writeln!(out, "disagreements: {}", disagreements.len())?;
    Ok(if disagreements.is_empty() { 0 } else { 1 })
}

fn oracle(a: OracleArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let inst = load(&a.graph)?;
    if let Some(k) = a.k {
        let weights: Vec<String> = oracle_ksp(&inst.graph, a.source, k)?
            .iter()
            .map(|w| w.to_string())
            .collect();
        writeln!(out, "walk_weights: {}", weights.join(" "))?;
    } else if let Some(t) = a.target {
        match oracle_csp(&inst, a.source, t)? {
            Some((w, d)) => writeln!(out, "weight: {w}\ndelay: {d}")?,
            None => writeln!(out, "weight: inf\ndelay: none")?,
        }
    } else {
        let dist: Vec<String> = oracle_sssp(&inst.graph, a.source)?
            .iter()
            .map(|d| d.to_string())
            .collect();
        writeln!(out, "dist: {}", dist.join(" "))?;
    }
    Ok(())
}
