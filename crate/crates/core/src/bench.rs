//! Benchmark protocol: sample distinct vertices, time every algorithm on
//! every ordered pair of distinct sampled vertices a fixed number of times,
//! and write one CSV row per run.
//!
//! Runs are strictly sequential. Pairs with `source == target` are skipped.

use std::collections::HashMap;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algorithms::{CspAlgorithm, SsspAlgorithm};
use crate::error::{Error, Result};
use crate::graph::{Delay, ProblemInstance, VertexId, Weight};
use crate::timing::PhaseTimings;

/// Header of the benchmark CSV, in column order.
pub const CSV_HEADER: [&str; 9] = [
    "algorithm",
    "source",
    "target",
    "run",
    "preprocessing_ns",
    "computation_ns",
    "total_ns",
    "path_weight",
    "path_delay",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    /// Single-source shortest paths, reported for one target.
    Sssp,
    /// Delay-constrained shortest paths.
    Csp,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BenchAlgorithm {
    Sssp(SsspAlgorithm),
    Csp(CspAlgorithm),
}

impl BenchAlgorithm {
    pub fn name(&self) -> &'static str {
        match self {
            BenchAlgorithm::Sssp(a) => a.name(),
            BenchAlgorithm::Csp(a) => a.name(),
        }
    }

    pub fn task(&self) -> Task {
        match self {
            BenchAlgorithm::Sssp(_) => Task::Sssp,
            BenchAlgorithm::Csp(_) => Task::Csp,
        }
    }

    pub fn default_set(task: Task) -> Vec<BenchAlgorithm> {
        match task {
            Task::Sssp => SsspAlgorithm::BENCHMARK_SET
                .into_iter()
                .map(BenchAlgorithm::Sssp)
                .collect(),
            Task::Csp => CspAlgorithm::BENCHMARK_SET
                .into_iter()
                .map(BenchAlgorithm::Csp)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub graph: PathBuf,
    pub task: Task,
    pub sample: usize,
    pub runs: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub algorithms: Vec<BenchAlgorithm>,
    /// Replaces the bound from the graph header (csp task).
    pub bound: Option<Delay>,
}

impl BenchConfig {
    pub const DEFAULT_SAMPLE: usize = 30;
    pub const DEFAULT_RUNS: usize = 50;

    pub fn new(graph: impl Into<PathBuf>, task: Task, out: impl Into<PathBuf>) -> Self {
        BenchConfig {
            graph: graph.into(),
            task,
            sample: Self::DEFAULT_SAMPLE,
            runs: Self::DEFAULT_RUNS,
            seed: 0,
            out: out.into(),
            algorithms: BenchAlgorithm::default_set(task),
            bound: None,
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidArgument("runs must be at least 1".into()));
        }
        if self.sample > n {
            return Err(Error::InvalidArgument(format!(
                "sample size {} exceeds vertex count {n}",
                self.sample
            )));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidArgument("no algorithms selected".into()));
        }
        if let Some(a) = self.algorithms.iter().find(|a| a.task() != self.task) {
            return Err(Error::InvalidArgument(format!(
                "algorithm `{}` does not belong to the selected task",
                a.name()
            )));
        }
        Ok(())
    }

    /// Rows the benchmark writes: `sample * (sample - 1) * runs` per algorithm.
    pub fn expected_rows(&self) -> usize {
        self.sample * self.sample.saturating_sub(1) * self.runs * self.algorithms.len()
    }
}

/// One timed run.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingRecord {
    pub algorithm: String,
    pub source: VertexId,
    pub target: VertexId,
    pub run: usize,
    pub timings: PhaseTimings,
    /// `f64::INFINITY` when the target is unreachable.
    pub path_weight: Weight,
    /// Constrained task only; `None` on unreachable pairs too.
    pub path_delay: Option<Delay>,
}

struct WeightField(Weight);

impl fmt::Display for WeightField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_finite() {
            write!(f, "{}", self.0)
        } else {
            f.write_str("inf")
        }
    }
}

impl TimingRecord {
    fn to_row(&self) -> [String; 9] {
        [
            self.algorithm.clone(),
            self.source.to_string(),
            self.target.to_string(),
            self.run.to_string(),
            self.timings.preprocessing_ns.to_string(),
            self.timings.computation_ns.to_string(),
            self.timings.total_ns.to_string(),
            WeightField(self.path_weight).to_string(),
            self.path_delay.map(|d| d.to_string()).unwrap_or_default(),
        ]
    }

    fn from_row(row: &csv::StringRecord, line: usize) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("csv row {line}: bad {what}"));
        if row.len() != CSV_HEADER.len() {
            return Err(bad("column count"));
        }
        let int = |i: usize| row[i].parse::<u64>().map_err(|_| bad(CSV_HEADER[i]));
        let path_weight = match &row[7] {
            "inf" => f64::INFINITY,
            w => w.parse().map_err(|_| bad("path_weight"))?,
        };
        let path_delay = match &row[8] {
            "" => None,
            d => Some(d.parse().map_err(|_| bad("path_delay"))?),
        };
        Ok(TimingRecord {
            algorithm: row[0].to_string(),
            source: int(1)? as VertexId,
            target: int(2)? as VertexId,
            run: int(3)? as usize,
            timings: PhaseTimings {
                preprocessing_ns: int(4)?,
                computation_ns: int(5)?,
                total_ns: int(6)?,
            },
            path_weight,
            path_delay,
        })
    }
}

/// Reads a benchmark CSV back, checking the header.
pub fn read_records(reader: impl Read) -> Result<Vec<TimingRecord>> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let header = csv.headers()?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::InvalidArgument(format!(
            "unexpected csv header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    csv.records()
        .enumerate()
        .map(|(i, row)| TimingRecord::from_row(&row?, i + 2))
        .collect()
}

/// Draws `count` distinct vertices of `1..=n`, uniformly without
/// replacement. Same seed, same sample.
pub fn sample_vertices(n: usize, count: usize, seed: u64) -> Result<Vec<VertexId>> {
    if count > n {
        return Err(Error::InvalidArgument(format!(
            "cannot sample {count} distinct vertices out of {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(rand::seq::index::sample(&mut rng, n, count)
        .into_iter()
        .map(|i| i + 1)
        .collect())
}

/// Aggregates over one benchmark run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSummary {
    pub sample: Vec<VertexId>,
    pub rows: usize,
    pub per_algorithm: Vec<AlgorithmSummary>,
    /// `(source, target)` pairs whose reported weight differed between runs
    /// or algorithms.
    pub weight_mismatches: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSummary {
    pub algorithm: &'static str,
    pub rows: usize,
    pub mean_preprocessing_ns: f64,
    pub mean_computation_ns: f64,
    pub mean_total_ns: f64,
}

/// Loads `cfg.graph`, runs the protocol and writes the CSV to `cfg.out`.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchSummary> {
    let inst = ProblemInstance::from_path(&cfg.graph)?;
    let file = std::fs::File::create(&cfg.out).map_err(|source| Error::File {
        path: cfg.out.clone(),
        source,
    })?;
    run_benchmark_on(&inst, cfg, std::io::BufWriter::new(file))
}

/// Runs the protocol on an already loaded instance, writing CSV to `out`.
/// `cfg.graph` and `cfg.out` are ignored.
pub fn run_benchmark_on(
    inst: &ProblemInstance,
    cfg: &BenchConfig,
    out: impl Write,
) -> Result<BenchSummary> {
    cfg.validate(inst.graph.n())?;
    let mut inst_for_csp;
    let inst = match cfg.bound {
        Some(b) if cfg.task == Task::Csp => {
            inst_for_csp = inst.clone();
            inst_for_csp.bound = b;
            &inst_for_csp
        }
        _ => inst,
    };
    let sample = sample_vertices(inst.graph.n(), cfg.sample, cfg.seed)?;
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;

    let mut per_algorithm = Vec::with_capacity(cfg.algorithms.len());
    let mut weights: HashMap<(VertexId, VertexId), Weight> = HashMap::new();
    let mut weight_mismatches = Vec::new();
    let mut rows = 0;

    for algo in &cfg.algorithms {
        let mut sums = [0u128; 3];
        let mut algo_rows = 0usize;
        for &source in &sample {
            for &target in &sample {
                if source == target {
                    continue;
                }
                for run in 0..cfg.runs {
                    let (timings, path_weight, path_delay) = match algo {
                        BenchAlgorithm::Sssp(a) => {
                            let r = a.run(&inst.graph, source, Some(target))?;
                            (r.timings, r.dist(target), None)
                        }
                        BenchAlgorithm::Csp(a) => {
                            let r = a.run(inst, source, target)?;
                            (r.timings, r.weight, r.delay)
                        }
                    };
                    let record = TimingRecord {
                        algorithm: algo.name().to_string(),
                        source,
                        target,
                        run,
                        timings,
                        path_weight,
                        path_delay,
                    };
                    writer.write_record(record.to_row())?;

                    sums[0] += timings.preprocessing_ns as u128;
                    sums[1] += timings.computation_ns as u128;
                    sums[2] += timings.total_ns as u128;
                    algo_rows += 1;
                    let seen = *weights.entry((source, target)).or_insert(path_weight);
                    if seen != path_weight && !(seen.is_infinite() && path_weight.is_infinite()) {
                        weight_mismatches.push((source, target));
                    }
                }
            }
        }
        let mean = |s: u128| {
            if algo_rows == 0 {
                0.0
            } else {
                s as f64 / algo_rows as f64
            }
        };
        per_algorithm.push(AlgorithmSummary {
            algorithm: algo.name(),
            rows: algo_rows,
            mean_preprocessing_ns: mean(sums[0]),
            mean_computation_ns: mean(sums[1]),
            mean_total_ns: mean(sums[2]),
        });
        rows += algo_rows;
    }
    writer.flush()?;
    weight_mismatches.sort_unstable();
    weight_mismatches.dedup();

    Ok(BenchSummary {
        sample,
        rows,
        per_algorithm,
        weight_mismatches,
    })
}
