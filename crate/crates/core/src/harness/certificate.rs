//! Plain-text certificates: a claim line, an optional graph in edge-list
//! format, evidence lines, and a final verdict line.
//!
//! ```text
//! claim m33-witness
//! n 22
//! e 0 1
//! ...
//! evidence infeasible C 3 A 2 nodes 124
//! evidence scan n 22 method composed pairs 9 infeasible 1
//! VERIFIED
//! ```

use std::fmt;

use crate::error::CertificateError;
use crate::graph::io::{parse_graph, write_graph};
use crate::graph::Graph;
use crate::partition::AdmAssignment;

/// What a certificate asserts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// The stored cubic graph admits no partition with `C = 3` and two
    /// appearances per vertex.
    M33Witness,
    /// No such graph exists among the scanned graphs up to this order.
    M33NoneUpTo(usize),
    /// `2n - (C - 1)` ADMs suffice for every degree-2 request graph on `n`
    /// nodes and `2n - C` never do.
    Degree2Tight { n: usize, capacity: usize },
    /// Every connected graph of maximum degree 3 up to this order splits into
    /// parts of four edges with every vertex in at most two parts.
    Conjecture43UpTo(usize),
    /// Every connected graph of maximum degree 3 up to this order has a
    /// 2-coloring into paths of at most five edges.
    PathColoringUpTo(usize),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::M33Witness => write!(f, "m33-witness"),
            Claim::M33NoneUpTo(n) => write!(f, "m33-none-up-to {n}"),
            Claim::Degree2Tight { n, capacity } => write!(f, "degree2-tight n {n} C {capacity}"),
            Claim::Conjecture43UpTo(n) => write!(f, "conjecture-4-3-holds-up-to {n}"),
            Claim::PathColoringUpTo(n) => write!(f, "path-coloring-holds-up-to {n}"),
        }
    }
}

/// One evidence line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The solver found no partition with `adms` appearances per vertex.
    Infeasible {
        capacity: usize,
        adms: usize,
        nodes: u64,
    },
    Bridges(usize),
    /// Per-order scan summary: named counters in a fixed order.
    Scan {
        n: usize,
        method: String,
        counts: Vec<(String, u64)>,
    },
    /// Survives every adversary under every placement.
    Feasible(AdmAssignment),
    /// Ring-labeled request graph that no partition serves under `assignment`.
    Refuted {
        assignment: AdmAssignment,
        graph: Graph,
    },
    /// An assignment the claim says should be refuted, but is not.
    Survivor(AdmAssignment),
    /// A graph whose search hit the time limit.
    Timeout(Graph),
}

impl Evidence {
    pub fn scan(n: usize, method: &str, counts: &[(&str, u64)]) -> Self {
        Evidence::Scan {
            n,
            method: method.to_string(),
            counts: counts.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    /// Value of a named counter of a scan line.
    pub fn count(&self, key: &str) -> Option<u64> {
        match self {
            Evidence::Scan { counts, .. } => counts.iter().find(|(k, _)| k == key).map(|&(_, v)| v),
            _ => None,
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Infeasible { capacity, adms, nodes } => {
                write!(f, "infeasible C {capacity} A {adms} nodes {nodes}")
            }
            Evidence::Bridges(k) => write!(f, "bridges {k}"),
            Evidence::Scan { n, method, counts } => {
                write!(f, "scan n {n} method {method}")?;
                for (k, v) in counts {
                    write!(f, " {k} {v}")?;
                }
                Ok(())
            }
            Evidence::Feasible(a) => write!(f, "feasible {a}"),
            Evidence::Refuted { assignment, graph } => {
                write!(f, "refuted {assignment} by {}", compact_graph(graph))
            }
            Evidence::Survivor(a) => write!(f, "survivor {a}"),
            Evidence::Timeout(g) => write!(f, "timeout {}", compact_graph(g)),
        }
    }
}

/// The final line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    RefutedByGraph(Graph),
    RefutedByAssignment(AdmAssignment),
    /// Some graphs timed out, so the claim is neither established nor refuted.
    Incomplete,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "VERIFIED"),
            Verdict::RefutedByGraph(g) => write!(f, "REFUTED-BY {}", compact_graph(g)),
            Verdict::RefutedByAssignment(a) => write!(f, "REFUTED-BY assignment {a}"),
            Verdict::Incomplete => write!(f, "INCOMPLETE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub claim: Claim,
    pub graph: Option<Graph>,
    pub evidence: Vec<Evidence>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn is_refuted(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::RefutedByGraph(_) | Verdict::RefutedByAssignment(_)
        )
    }

    pub fn scans(&self) -> impl Iterator<Item = &Evidence> {
        self.evidence.iter().filter(|e| matches!(e, Evidence::Scan { .. }))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim {}", self.claim)?;
        if let Some(g) = &self.graph {
            write!(f, "{}", write_graph(g))?;
        }
        for e in &self.evidence {
            writeln!(f, "evidence {e}")?;
        }
        writeln!(f, "{}", self.verdict)
    }
}

/// `n=<N> u-v u-v ...`, one token per edge.
pub fn compact_graph(g: &Graph) -> String {
    let mut s = format!("n={}", g.n());
    for e in g.edges() {
        s.push_str(&format!(" {}-{}", e.u(), e.v()));
    }
    s
}

pub fn parse_compact_graph(text: &str) -> Result<Graph, String> {
    let mut tokens = text.split_whitespace();
    let head = tokens.next().ok_or("empty graph")?;
    let n: usize = head
        .strip_prefix("n=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("expected n=<N>, found {head:?}"))?;
    let mut edges = Vec::new();
    for t in tokens {
        let (u, v) = t.split_once('-').ok_or_else(|| format!("bad edge {t:?}"))?;
        let u: usize = u.parse().map_err(|_| format!("bad edge {t:?}"))?;
        let v: usize = v.parse().map_err(|_| format!("bad edge {t:?}"))?;
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| e.to_string())
}

fn parse_numbers(tokens: &[&str]) -> Result<Vec<usize>, String> {
    tokens
        .iter()
        .map(|t| t.parse().map_err(|_| format!("expected a number, found {t:?}")))
        .collect()
}

fn parse_claim(rest: &str) -> Result<Claim, String> {
    let t: Vec<&str> = rest.split_whitespace().collect();
    let num = |i: usize| -> Result<usize, String> {
        t.get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("malformed claim {rest:?}"))
    };
    match t.first().copied() {
        Some("m33-witness") => Ok(Claim::M33Witness),
        Some("m33-none-up-to") => Ok(Claim::M33NoneUpTo(num(1)?)),
        Some("degree2-tight") if t.get(1) == Some(&"n") && t.get(3) == Some(&"C") => Ok(Claim::Degree2Tight {
            n: num(2)?,
            capacity: num(4)?,
        }),
        Some("conjecture-4-3-holds-up-to") => Ok(Claim::Conjecture43UpTo(num(1)?)),
        Some("path-coloring-holds-up-to") => Ok(Claim::PathColoringUpTo(num(1)?)),
        _ => Err(format!("unknown claim {rest:?}")),
    }
}

fn parse_evidence(rest: &str) -> Result<Evidence, String> {
    let t: Vec<&str> = rest.split_whitespace().collect();
    let bad = || format!("malformed evidence {rest:?}");
    match t.first().copied() {
        Some("infeasible") => {
            if t.len() != 7 || t[1] != "C" || t[3] != "A" || t[5] != "nodes" {
                return Err(bad());
            }
            Ok(Evidence::Infeasible {
                capacity: t[2].parse().map_err(|_| bad())?,
                adms: t[4].parse().map_err(|_| bad())?,
                nodes: t[6].parse().map_err(|_| bad())?,
            })
        }
        Some("bridges") if t.len() == 2 => Ok(Evidence::Bridges(t[1].parse().map_err(|_| bad())?)),
        Some("scan") => {
            if t.len() < 5 || t[1] != "n" || t[3] != "method" || t.len().is_multiple_of(2) {
                return Err(bad());
            }
            let mut counts = Vec::new();
            for pair in t[5..].chunks(2) {
                counts.push((pair[0].to_string(), pair[1].parse().map_err(|_| bad())?));
            }
            Ok(Evidence::Scan {
                n: t[2].parse().map_err(|_| bad())?,
                method: t[4].to_string(),
                counts,
            })
        }
        Some("feasible") => Ok(Evidence::Feasible(AdmAssignment::new(parse_numbers(&t[1..])?))),
        Some("survivor") => Ok(Evidence::Survivor(AdmAssignment::new(parse_numbers(&t[1..])?))),
        Some("refuted") => {
            let by = t.iter().position(|&s| s == "by").ok_or_else(bad)?;
            let assignment = AdmAssignment::new(parse_numbers(&t[1..by])?);
            let graph = parse_compact_graph(&t[by + 1..].join(" "))?;
            Ok(Evidence::Refuted { assignment, graph })
        }
        Some("timeout") => Ok(Evidence::Timeout(parse_compact_graph(&t[1..].join(" "))?)),
        _ => Err(bad()),
    }
}

fn parse_verdict(line: &str) -> Result<Verdict, String> {
    match line {
        "VERIFIED" => Ok(Verdict::Verified),
        "INCOMPLETE" => Ok(Verdict::Incomplete),
        _ => {
            let rest = line
                .strip_prefix("REFUTED-BY ")
                .ok_or_else(|| format!("unknown verdict {line:?}"))?;
            if let Some(a) = rest.strip_prefix("assignment") {
                let t: Vec<&str> = a.split_whitespace().collect();
                Ok(Verdict::RefutedByAssignment(AdmAssignment::new(parse_numbers(&t)?)))
            } else {
                Ok(Verdict::RefutedByGraph(parse_compact_graph(rest)?))
            }
        }
    }
}

/// Reads one certificate. Blank lines and `#` comments are ignored.
pub fn parse_certificate(text: &str) -> Result<Certificate, CertificateError> {
    let err = |line: usize, message: String| CertificateError::Parse { line, message };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(err(1, "empty certificate".into()));
    };
    let claim = first
        .strip_prefix("claim ")
        .ok_or_else(|| err(first_no, "expected a claim line".into()))
        .and_then(|rest| parse_claim(rest).map_err(|m| err(first_no, m)))?;
    let mut i = 1;
    let mut graph_text = String::new();
    let graph_start = lines.get(i).map_or(first_no, |l| l.0);
    while i < lines.len() && (lines[i].1.starts_with("n ") || lines[i].1.starts_with("e ")) {
        graph_text.push_str(lines[i].1);
        graph_text.push('\n');
        i += 1;
    }
    let graph = if graph_text.is_empty() {
        None
    } else {
        Some(parse_graph(&graph_text).map_err(|e| err(graph_start, e.to_string()))?)
    };
    let mut evidence = Vec::new();
    while i < lines.len() {
        let (no, line) = lines[i];
        match line.strip_prefix("evidence ") {
            Some(rest) => evidence.push(parse_evidence(rest).map_err(|m| err(no, m))?),
            None => break,
        }
        i += 1;
    }
    let Some(&(no, line)) = lines.get(i) else {
        return Err(err(lines.last().map_or(1, |l| l.0), "missing verdict line".into()));
    };
    let verdict = parse_verdict(line).map_err(|m| err(no, m))?;
    if let Some(&(extra, _)) = lines.get(i + 1) {
        return Err(err(extra, "text after the verdict line".into()));
    }
    Ok(Certificate {
        claim,
        graph,
        evidence,
        verdict,
    })
}
