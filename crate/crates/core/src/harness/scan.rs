//! Scans over every connected graph of maximum degree 3, order by order,
//! with a resumable plain-text checkpoint.
//!
//! Checkpoint format, rewritten after every chunk:
//!
//! ```text
//! checkpoint conjecture-4-3
//! scan n 1 method exhaustive classes 1 holds 1 path4 1 timeouts 0
//! at n 9 next 1536 holds 1536 path4 1530 timeouts 0
//! timeout n=9 0-1 1-2 ...
//! ```
//!
//! `scan` lines are finished orders; `at` gives the next graph index (in
//! enumeration order) of the order in progress.

use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use rayon::prelude::*;

use super::certificate::{parse_compact_graph, Certificate, Claim, Evidence, Verdict};
use crate::constructive::{decompose_linear_forest, path_two_coloring};
use crate::error::{CertificateError, SolveError};
use crate::exact::{feasible_under_caps_with_limits, SolveLimits};
use crate::graph::enumerate::enumerate_graphs_max_degree;
use crate::graph::Graph;
use crate::partition::{verify_partition, AdmAssignment};

const CHUNK: usize = 256;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub max_n: usize,
    /// Per-graph time budget; graphs that hit it are listed, not skipped.
    pub timeout: Option<Duration>,
    pub checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint file when it exists.
    pub resume: bool,
    /// Stop (with the checkpoint saved) after this many graphs in this run.
    pub stop_after: Option<usize>,
}

impl ScanConfig {
    pub fn new(max_n: usize) -> Self {
        ScanConfig {
            max_n,
            timeout: Some(Duration::from_secs(60)),
            checkpoint: None,
            resume: false,
            stop_after: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    Finished(Certificate),
    /// `stop_after` was reached; the checkpoint holds the progress.
    Interrupted {
        processed: usize,
    },
}

/// Progress of a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub kind: String,
    pub done: Vec<Evidence>,
    pub n: usize,
    pub next: usize,
    pub counts: Vec<(String, u64)>,
    pub timeouts: Vec<Graph>,
}

impl Checkpoint {
    fn fresh(kind: &str, keys: &[&str]) -> Self {
        Checkpoint {
            kind: kind.to_string(),
            done: Vec::new(),
            n: 1,
            next: 0,
            counts: keys.iter().map(|k| (k.to_string(), 0)).collect(),
            timeouts: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("checkpoint {}\n", self.kind);
        for e in &self.done {
            s.push_str(&format!("{e}\n"));
        }
        s.push_str(&format!("at n {} next {}", self.n, self.next));
        for (k, v) in &self.counts {
            s.push_str(&format!(" {k} {v}"));
        }
        s.push('\n');
        for g in &self.timeouts {
            s.push_str(&format!("timeout {}\n", super::certificate::compact_graph(g)));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, CertificateError> {
        let err = |line: usize, message: &str| CertificateError::Parse {
            line,
            message: message.to_string(),
        };
        let mut cp: Option<Checkpoint> = None;
        for (i, line) in text.lines().enumerate() {
            let no = i + 1;
            let t: Vec<&str> = line.split_whitespace().collect();
            match t.first().copied() {
                None => {}
                Some("checkpoint") if t.len() == 2 && cp.is_none() => cp = Some(Checkpoint::fresh(t[1], &[])),
                Some(_) if cp.is_none() => return Err(err(no, "expected a checkpoint header")),
                Some("scan") => {
                    let c = cp.as_mut().expect("checked");
                    let text = format!("claim m33-witness\nevidence {line}\nVERIFIED\n");
                    let parsed = super::certificate::parse_certificate(&text).map_err(|_| err(no, "bad scan line"))?;
                    c.done.extend(parsed.evidence);
                }
                Some("at") if t.len() >= 5 && t[1] == "n" && t[3] == "next" && t.len() % 2 == 1 => {
                    let c = cp.as_mut().expect("checked");
                    c.n = t[2].parse().map_err(|_| err(no, "bad order"))?;
                    c.next = t[4].parse().map_err(|_| err(no, "bad index"))?;
                    c.counts = t[5..]
                        .chunks(2)
                        .map(|p| p[1].parse().map(|v| (p[0].to_string(), v)))
                        .collect::<Result<_, _>>()
                        .map_err(|_| err(no, "bad counter"))?;
                }
                Some("timeout") => {
                    let g = parse_compact_graph(&t[1..].join(" ")).map_err(|m| err(no, &m))?;
                    cp.as_mut().expect("checked").timeouts.push(g);
                }
                Some(_) => return Err(err(no, "unrecognized checkpoint line")),
            }
        }
        cp.ok_or_else(|| err(1, "empty checkpoint"))
    }
}

/// Result for one graph.
enum Check {
    /// Holds; the flag feeds the optional extra counter.
    Holds(bool),
    Fails,
    TimedOut,
}

struct ScanKind<'a> {
    name: &'static str,
    claim: Claim,
    extra: Option<&'static str>,
    check: &'a (dyn Fn(&Graph) -> Result<Check, SolveError> + Sync),
}

/// Checks that every connected graph with maximum degree 3 and at most
/// `max_n` vertices splits into parts of at most four edges with every
/// vertex in at most two parts. Also counts (`path4`) the graphs whose edges
/// 2-color into paths of at most four edges, a stronger property.
pub fn test_conjecture_43(config: &ScanConfig) -> Result<ScanOutcome, SolveError> {
    let timeout = config.timeout;
    let check = move |g: &Graph| -> Result<Check, SolveError> {
        let mut limits = SolveLimits::unbounded_edges();
        limits.timeout = timeout;
        match feasible_under_caps_with_limits(g, 4, &AdmAssignment::uniform(g.n(), 2), &limits) {
            Ok(f) if f.is_feasible() => Ok(Check::Holds(path_two_coloring(g, 4).is_some())),
            Ok(_) => Ok(Check::Fails),
            Err(SolveError::TimedOut { .. }) => Ok(Check::TimedOut),
            Err(e) => Err(e),
        }
    };
    let kind = ScanKind {
        name: "conjecture-4-3",
        claim: Claim::Conjecture43UpTo(config.max_n),
        extra: Some("path4"),
        check: &check,
    };
    run(&kind, config)
}

/// Runs the path 2-coloring decomposition on every connected graph with
/// maximum degree 3 and at most `max_n` vertices and verifies each output.
pub fn test_thomassen_consistency(config: &ScanConfig) -> Result<ScanOutcome, SolveError> {
    let check = |g: &Graph| -> Result<Check, SolveError> {
        match decompose_linear_forest(g, 5) {
            Ok(p) => {
                let ok = verify_partition(&p, &AdmAssignment::uniform(g.n(), 2)).is_ok()
                    && p.parts().iter().all(|b| b.is_path() && b.len() <= 5);
                Ok(if ok { Check::Holds(false) } else { Check::Fails })
            }
            Err(SolveError::Exhausted(_)) => Ok(Check::Fails),
            Err(e) => Err(e),
        }
    };
    let kind = ScanKind {
        name: "path-coloring",
        claim: Claim::PathColoringUpTo(config.max_n),
        extra: None,
        check: &check,
    };
    run(&kind, config)
}

fn keys(kind: &ScanKind) -> Vec<&'static str> {
    let mut k = vec!["holds"];
    k.extend(kind.extra);
    k.push("timeouts");
    k
}

fn save(config: &ScanConfig, cp: &Checkpoint) -> Result<(), SolveError> {
    let Some(path) = &config.checkpoint else {
        return Ok(());
    };
    let tmp = path.with_extension("tmp");
    let io = |e: std::io::Error| SolveError::InvalidInstance(format!("checkpoint {}: {e}", path.display()));
    fs::write(&tmp, cp.to_text()).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn load(kind: &ScanKind, config: &ScanConfig) -> Result<Checkpoint, SolveError> {
    let fresh = Checkpoint::fresh(kind.name, &keys(kind));
    let Some(path) = config.checkpoint.as_ref().filter(|_| config.resume) else {
        return Ok(fresh);
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(fresh),
        Err(e) => {
            return Err(SolveError::InvalidInstance(format!(
                "checkpoint {}: {e}",
                path.display()
            )))
        }
    };
    let cp = Checkpoint::parse(&text)
        .map_err(|e| SolveError::InvalidInstance(format!("checkpoint {}: {e}", path.display())))?;
    if cp.kind != kind.name {
        return Err(SolveError::InvalidInstance(format!(
            "checkpoint {} belongs to a {} scan",
            path.display(),
            cp.kind
        )));
    }
    Ok(cp)
}

fn bump(counts: &mut [(String, u64)], key: &str) {
    if let Some(c) = counts.iter_mut().find(|(k, _)| k == key) {
        c.1 += 1;
    }
}

fn run(kind: &ScanKind, config: &ScanConfig) -> Result<ScanOutcome, SolveError> {
    let mut cp = load(kind, config)?;
    let mut processed = 0usize;
    while cp.n <= config.max_n {
        let n = cp.n;
        let graphs: Vec<Graph> = enumerate_graphs_max_degree(n, 3, true).collect();
        while cp.next < graphs.len() {
            let budget = config.stop_after.map_or(usize::MAX, |s| s.saturating_sub(processed));
            if budget == 0 {
                save(config, &cp)?;
                return Ok(ScanOutcome::Interrupted { processed });
            }
            let end = graphs.len().min(cp.next + CHUNK.min(budget));
            let chunk = &graphs[cp.next..end];
            let results: Vec<Check> = chunk.par_iter().map(|g| (kind.check)(g)).collect::<Result<_, _>>()?;
            for (g, r) in chunk.iter().zip(results) {
                match r {
                    Check::Holds(flag) => {
                        bump(&mut cp.counts, "holds");
                        if flag {
                            bump(&mut cp.counts, kind.extra.unwrap_or(""));
                        }
                    }
                    Check::TimedOut => {
                        bump(&mut cp.counts, "timeouts");
                        cp.timeouts.push(g.clone());
                    }
                    Check::Fails => {
                        let mut evidence = cp.done.clone();
                        evidence.push(scan_line(n, cp.next + 1, &cp.counts, "partial"));
                        evidence.extend(cp.timeouts.iter().cloned().map(Evidence::Timeout));
                        return Ok(ScanOutcome::Finished(Certificate {
                            claim: kind.claim.clone(),
                            graph: Some(g.clone()),
                            evidence,
                            verdict: Verdict::RefutedByGraph(g.clone()),
                        }));
                    }
                }
                cp.next += 1;
            }
            processed += chunk.len();
            save(config, &cp)?;
        }
        cp.done.push(scan_line(n, graphs.len(), &cp.counts, "exhaustive"));
        cp.n += 1;
        cp.next = 0;
        for c in &mut cp.counts {
            c.1 = 0;
        }
        save(config, &cp)?;
    }
    let mut evidence: Vec<Evidence> = cp
        .done
        .iter()
        .filter(|e| matches!(e, Evidence::Scan { n, .. } if *n <= config.max_n))
        .cloned()
        .collect();
    evidence.extend(cp.timeouts.iter().cloned().map(Evidence::Timeout));
    let verdict = if cp.timeouts.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Incomplete
    };
    Ok(ScanOutcome::Finished(Certificate {
        claim: kind.claim.clone(),
        graph: None,
        evidence,
        verdict,
    }))
}

fn scan_line(n: usize, classes: usize, counts: &[(String, u64)], method: &str) -> Evidence {
    let mut all = vec![("classes".to_string(), classes as u64)];
    all.extend(counts.iter().cloned());
    Evidence::Scan {
        n,
        method: method.to_string(),
        counts: all,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finished(o: ScanOutcome) -> Certificate {
        match o {
            ScanOutcome::Finished(c) => c,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_orders_hold() {
        let c = finished(test_conjecture_43(&ScanConfig::new(5)).unwrap());
        assert!(c.is_verified(), "{c}");
        let classes: Vec<u64> = c.scans().map(|e| e.count("classes").unwrap()).collect();
        // connected graphs with maximum degree 3 on 1..=5 vertices
        assert_eq!(classes, vec![1, 1, 2, 6, 10]);
        let t = finished(test_thomassen_consistency(&ScanConfig::new(6)).unwrap());
        assert!(t.is_verified());
    }

    #[test]
    fn checkpoint_round_trip() {
        let mut cp = Checkpoint::fresh("conjecture-4-3", &["holds", "path4", "timeouts"]);
        cp.done
            .push(Evidence::scan(1, "exhaustive", &[("classes", 1), ("holds", 1)]));
        cp.n = 2;
        cp.next = 7;
        cp.timeouts.push(crate::graph::named::path(3));
        assert_eq!(Checkpoint::parse(&cp.to_text()).unwrap(), cp);
        assert!(Checkpoint::parse("at n 1 next 0").is_err());
    }
}
