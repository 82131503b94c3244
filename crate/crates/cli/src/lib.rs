//! Command-line front end: argument types, dispatch and text rendering.
//!
//! Every command writes plain text. `--porcelain` swaps the human layout for
//! one `tag value...` record per line with stable tags.

mod table;

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use grooming_core::bounds::{bound_report, check_monotonicity, known_m, GroomingInstance, MTable};
use grooming_core::constructive::{
    decompose_bridgeless_cubic, decompose_degree2, decompose_linear_forest, degree2_caps,
};
use grooming_core::error::{CertificateError, GraphError, PreconditionError, SolveError};
use grooming_core::exact::{
    feasible_under_caps_with_limits, min_cost_partition_with_limits, min_cost_with_class, worst_case_a_with_limits,
    SolveLimits, WorstCaseResult,
};
use grooming_core::graph::io::{parse_graph, parse_graph_with_extra};
use grooming_core::graph::Graph;
use grooming_core::harness::{
    check_degree2_tightness, compact_graph, find_m33_witness, parse_certificate, test_conjecture_43,
    test_thomassen_consistency, verify_certificate, Certificate, ScanConfig, ScanOutcome, Verdict, WitnessConfig,
};
use grooming_core::partition::{verify_partition, AdmAssignment, Partition};

pub use table::{cell_text, emit_table};

#[derive(Debug, Parser)]
#[command(name = "grooming", version, about = "ADM minimization for traffic grooming on rings")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Emit tagged records instead of the human layout.
    #[arg(long, global = true)]
    pub porcelain: bool,
    /// Recorded in the output header; no command draws random numbers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Per-graph search timeout in seconds.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: Option<u64>,
    /// Read the graph or certificate from this file instead of stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of known M(C, Δ) values, or bounds on A(n, C, Δ) with --n.
    Bounds {
        #[arg(long = "C", value_parser = parse_range, default_value = "1..6")]
        capacity: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "1..6")]
        delta: RangeInclusive<usize>,
        /// Report bounds on A(n, C, Δ) for this ring size.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
    /// Partition a graph with one of the constructions.
    Decompose {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_parser = positive)]
        grooming: usize,
        /// Vertices limited to one appearance (degree2 only), comma separated.
        #[arg(long, value_delimiter = ',')]
        singles: Vec<usize>,
    },
    /// Cheapest partition of one request graph.
    SolveGraph {
        #[arg(long, value_parser = positive)]
        grooming: usize,
    },
    /// Feasibility under per-node ADM caps given as `A <v> <k>` lines.
    Check {
        #[arg(long, value_parser = positive)]
        grooming: usize,
    },
    /// A(n, C, Δ): fewest ADMs that serve every request graph.
    SolveWorstCase {
        #[arg(value_parser = positive)]
        n: usize,
        #[arg(value_parser = positive)]
        capacity: usize,
        delta: usize,
        /// Restrict the request graphs to a class.
        #[arg(long, value_enum)]
        class: Option<GraphClass>,
    },
    /// Search for a cubic graph that needs three ADMs per node.
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        #[arg(long, value_parser = positive)]
        max_n: usize,
    },
    /// Exhaustive scans over connected graphs of maximum degree 3.
    Conjecture {
        #[arg(value_enum)]
        kind: ConjectureKind,
        #[arg(long, value_parser = positive)]
        max_n: usize,
        /// Checkpoint file; progress found there is resumed.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Stop after this many graphs, leaving the checkpoint behind.
        #[arg(long, value_parser = positive)]
        stop_after: Option<usize>,
    },
    /// Check that 2n - (C - 1) ADMs are exactly what degree-2 requests need.
    Tightness {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = positive)]
        grooming: usize,
    },
    /// Re-check a certificate.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Degree2,
    Cubic,
    LinearForest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    BridgelessCubic,
    PerfectMatching,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    M33,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureKind {
    #[value(name = "4-3")]
    FourThree,
    PathColoring,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (positive(a)?, positive(b.trim_start_matches('='))?),
        None => {
            let v = positive(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error("{path}: {source}")]
    Certificate { path: String, source: CertificateError },
}

/// What the process exit status should say.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Success, feasible, or verified.
    Ok,
    /// A refutation was found; a result rather than an error.
    Refuted,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Refuted => 1,
        }
    }
}

/// Exit status for errors: usage and I/O problems alike.
pub const ERROR_CODE: i32 = 2;

/// Collects report lines in either layout.
struct Report {
    porcelain: bool,
    text: String,
}

impl Report {
    fn new(global: &Global, command: &str) -> Self {
        let mut r = Report {
            porcelain: global.porcelain,
            text: String::new(),
        };
        if r.porcelain {
            r.text.push_str(&format!("command {command}\nseed {}\n", global.seed));
        } else {
            r.text.push_str(&format!("# grooming {command} seed {}\n", global.seed));
        }
        r
    }

    /// `human` in the human layout, `tag value` in porcelain.
    fn line(&mut self, tag: &str, value: impl AsRef<str>, human: impl AsRef<str>) {
        let line = if self.porcelain {
            format!("{tag} {}", value.as_ref())
        } else {
            human.as_ref().to_string()
        };
        self.text.push_str(line.trim_end());
        self.text.push('\n');
    }

    /// Same text in both layouts.
    fn tagged(&mut self, tag: &str, value: impl AsRef<str>) {
        let v = value.as_ref();
        self.line(tag, v, format!("{tag} {v}"));
    }

    fn partition(&mut self, p: &Partition) {
        for line in p.to_string().lines() {
            let edges = line.trim_start_matches("B:").trim();
            self.line("part", edges, line);
        }
    }

    fn trailer(&mut self, p: &Partition) {
        let human = format!("cost {} max-appearances {}", p.cost(), p.max_appearances());
        self.line("cost", p.cost().to_string(), human);
        if self.porcelain {
            self.tagged("max-appearances", p.max_appearances().to_string());
        }
    }

    fn certificate(&mut self, c: &Certificate) {
        if self.porcelain {
            for line in c.to_string().lines() {
                match line.split_once(' ') {
                    Some((tag, rest)) => self.tagged(tag, rest),
                    None => self.tagged("verdict", line),
                }
            }
        } else {
            self.text.push_str(&c.to_string());
        }
    }
}

fn read_input(global: &Global) -> Result<(String, String), CliError> {
    match &global.input {
        Some(p) => fs::read_to_string(p)
            .map(|t| (t, p.display().to_string()))
            .map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            }),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            Ok((s, "<stdin>".into()))
        }
    }
}

fn read_graph(global: &Global) -> Result<Graph, CliError> {
    let (text, path) = read_input(global)?;
    parse_graph(&text).map_err(|source| CliError::Graph { path, source })
}

/// Graph plus `A <v> <k>` cap lines; unlisted vertices are capped at their degree.
fn read_graph_with_caps(global: &Global) -> Result<(Graph, AdmAssignment), CliError> {
    let (text, path) = read_input(global)?;
    let graph_err = |source| CliError::Graph {
        path: path.clone(),
        source,
    };
    let (g, extra) = parse_graph_with_extra(&text).map_err(graph_err)?;
    let mut caps: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    for (line, content) in extra {
        let bad = |message: &str| {
            graph_err(GraphError::Parse {
                line,
                message: message.to_string(),
            })
        };
        let t: Vec<&str> = content.split_whitespace().collect();
        if t.len() != 3 || t[0] != "A" {
            return Err(bad("expected `A <vertex> <adms>`"));
        }
        let v: usize = t[1].parse().map_err(|_| bad("bad vertex"))?;
        let k: usize = t[2].parse().map_err(|_| bad("bad ADM count"))?;
        if v >= g.n() {
            return Err(bad("vertex out of range"));
        }
        caps[v] = k;
    }
    Ok((g, AdmAssignment::new(caps)))
}

fn limits(global: &Global) -> SolveLimits {
    let mut l = SolveLimits::unbounded_edges();
    l.timeout = global.timeout.map(Duration::from_secs);
    l
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Bounds { .. } => "bounds",
        Command::Decompose { .. } => "decompose",
        Command::SolveGraph { .. } => "solve-graph",
        Command::Check { .. } => "check",
        Command::SolveWorstCase { .. } => "solve-worst-case",
        Command::Witness { .. } => "witness",
        Command::Conjecture { .. } => "conjecture",
        Command::Tightness { .. } => "tightness",
        Command::Verify => "verify",
    }
}

/// Runs one command and writes its report to `--output` or `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    if let Some(t) = cli.global.threads {
        // Fails only when a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global();
    }
    let mut report = Report::new(&cli.global, command_name(&cli.command));
    let status = dispatch(cli, &mut report)?;
    match &cli.global.output {
        Some(p) => fs::write(p, &report.text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?,
        None => out.write_all(report.text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })?,
    }
    Ok(status)
}

fn dispatch(cli: &Cli, r: &mut Report) -> Result<Status, CliError> {
    let global = &cli.global;
    match &cli.command {
        Command::Bounds { capacity, delta, n } => bounds(r, capacity, delta, *n),
        Command::Decompose {
            method,
            grooming,
            singles,
        } => {
            let g = read_graph(global)?;
            let (p, caps) = match method {
                Method::Degree2 => (decompose_degree2(&g, *grooming, singles)?, degree2_caps(&g, singles)),
                Method::Cubic => {
                    if *grooming < 3 {
                        return Err(CliError::Usage(
                            "--grooming must be at least 3 for --method cubic".into(),
                        ));
                    }
                    let mut p = decompose_bridgeless_cubic(&g)?;
                    p = Partition::new(g.clone(), *grooming, p.parts().to_vec());
                    (p, AdmAssignment::uniform(g.n(), 2))
                }
                Method::LinearForest => (
                    decompose_linear_forest(&g, *grooming)?,
                    AdmAssignment::uniform(g.n(), 2),
                ),
            };
            if let Err(v) = verify_partition(&p, &caps) {
                return Err(SolveError::Exhausted(format!("construction produced an invalid partition: {v}")).into());
            }
            r.partition(&p);
            r.trailer(&p);
            Ok(Status::Ok)
        }
        Command::SolveGraph { grooming } => {
            let g = read_graph(global)?;
            let res = min_cost_partition_with_limits(&g, *grooming, &limits(global))?;
            r.tagged("optimum", res.optimum.to_string());
            r.partition(&res.witness);
            r.trailer(&res.witness);
            Ok(Status::Ok)
        }
        Command::Check { grooming } => {
            let (g, caps) = read_graph_with_caps(global)?;
            let f = feasible_under_caps_with_limits(&g, *grooming, &caps, &limits(global))?;
            r.tagged("caps", caps.to_string());
            match &f.witness {
                Some(p) => {
                    r.line("verdict", "feasible", "feasible");
                    r.partition(p);
                    r.trailer(p);
                    Ok(Status::Ok)
                }
                None => {
                    r.line("verdict", "infeasible", "infeasible");
                    Ok(Status::Refuted)
                }
            }
        }
        Command::SolveWorstCase {
            n,
            capacity,
            delta,
            class,
        } => {
            let mut l = limits(global);
            l.max_ring = l.max_ring.max(*n);
            let res = match class {
                None => worst_case_a_with_limits(*n, *capacity, *delta, &l)?,
                Some(GraphClass::BridgelessCubic) => min_cost_with_class(
                    *n,
                    *capacity,
                    *delta,
                    &|g: &Graph| g.is_cubic() && g.is_bridgeless(),
                    &l,
                )?,
                Some(GraphClass::PerfectMatching) => {
                    min_cost_with_class(*n, *capacity, *delta, &|g: &Graph| g.is_regular(1), &l)?
                }
            };
            worst_case(r, &res);
            Ok(Status::Ok)
        }
        Command::Witness {
            kind: WitnessKind::M33,
            max_n,
        } => {
            if *max_n < 4 {
                return Err(CliError::Usage("--max-n must be at least 4".into()));
            }
            let mut cfg = WitnessConfig::new(*max_n);
            cfg.limits.timeout = limits(global).timeout;
            let c = find_m33_witness(&cfg)?;
            r.certificate(&c);
            Ok(status_of(&c))
        }
        Command::Conjecture {
            kind,
            max_n,
            resume,
            stop_after,
        } => {
            let mut cfg = ScanConfig::new(*max_n);
            if let Some(t) = global.timeout {
                cfg.timeout = Some(Duration::from_secs(t));
            }
            cfg.checkpoint = resume.clone();
            cfg.resume = resume.is_some();
            cfg.stop_after = *stop_after;
            let outcome = match kind {
                ConjectureKind::FourThree => test_conjecture_43(&cfg)?,
                ConjectureKind::PathColoring => {
                    if *max_n < 4 {
                        return Err(CliError::Usage("--max-n must be at least 4".into()));
                    }
                    test_thomassen_consistency(&cfg)?
                }
            };
            match outcome {
                ScanOutcome::Finished(c) => {
                    r.certificate(&c);
                    Ok(status_of(&c))
                }
                ScanOutcome::Interrupted { processed } => {
                    let path = resume.as_deref().map_or_else(|| "(none)".to_string(), display);
                    r.line(
                        "interrupted",
                        format!("{processed} {path}"),
                        format!("interrupted after {processed} graphs; checkpoint {path}"),
                    );
                    Ok(Status::Ok)
                }
            }
        }
        Command::Tightness { n, grooming } => {
            let mut l = limits(global);
            l.max_ring = l.max_ring.max(*n);
            let c = check_degree2_tightness(*n, *grooming, &l)?;
            r.certificate(&c);
            Ok(status_of(&c))
        }
        Command::Verify => {
            let (text, path) = read_input(global)?;
            let cert = parse_certificate(&text).map_err(|source| CliError::Certificate {
                path: path.clone(),
                source,
            })?;
            let mut l = limits(global);
            l.max_ring = usize::MAX;
            match verify_certificate(&cert, &l) {
                Ok(()) => {
                    r.tagged("claim", cert.claim.to_string());
                    r.line("check", "ok", "evidence checks out");
                    Ok(status_of(&cert))
                }
                Err(CertificateError::Mismatch(m)) => {
                    r.tagged("claim", cert.claim.to_string());
                    r.line("check", format!("mismatch {m}"), format!("evidence does not hold: {m}"));
                    Ok(Status::Refuted)
                }
                Err(source) => Err(CliError::Certificate { path, source }),
            }
        }
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

fn status_of(c: &Certificate) -> Status {
    match c.verdict {
        Verdict::RefutedByGraph(_) | Verdict::RefutedByAssignment(_) => Status::Refuted,
        Verdict::Verified | Verdict::Incomplete => Status::Ok,
    }
}

fn worst_case(r: &mut Report, res: &WorstCaseResult) {
    r.tagged("optimum", res.optimum.to_string());
    r.tagged("assignment", res.assignment.to_string());
    r.tagged("adversaries", res.adversaries.to_string());
    for refutation in &res.refuted_below {
        let value = format!("{} by {}", refutation.assignment, compact_graph(&refutation.graph));
        r.line("refuted", &value, format!("refuted {value}"));
    }
}

fn bounds(
    r: &mut Report,
    capacity: &RangeInclusive<usize>,
    delta: &RangeInclusive<usize>,
    n: Option<u64>,
) -> Result<Status, CliError> {
    if let Some(n) = n {
        for c in capacity.clone() {
            for d in delta.clone() {
                let inst = GroomingInstance::new(n as usize, c, d)?;
                let b = bound_report(&inst);
                let exact = b.exact.map_or_else(|| "-".to_string(), |v| v.to_string());
                let sources: Vec<&str> = b.provenance.iter().map(|s| s.label()).collect();
                r.tagged(
                    "bounds",
                    format!(
                        "n {n} C {c} delta {d} lower {} upper {} exact {exact} from {}",
                        b.lower,
                        b.upper,
                        sources.join(",")
                    ),
                );
            }
        }
        return Ok(Status::Ok);
    }
    let table = MTable::known(capacity.clone(), delta.clone());
    if r.porcelain {
        for c in capacity.clone() {
            for d in delta.clone() {
                let e = known_m(c, d);
                r.tagged(
                    "cell",
                    format!("C {c} delta {d} value {} source {}", cell_text(e.value), e.source),
                );
            }
        }
    } else {
        r.text.push_str(&emit_table(&table));
    }
    let violations = check_monotonicity(&table);
    for v in &violations {
        r.tagged("violation", v.to_string());
    }
    Ok(if violations.is_empty() {
        Status::Ok
    } else {
        Status::Refuted
    })
}
