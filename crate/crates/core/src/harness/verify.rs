use std::collections::BTreeSet;

use super::certificate::{Certificate, Claim, Evidence, Verdict};
use crate::constructive::path_two_coloring;
use crate::error::CertificateError;
use crate::exact::{feasible_under_caps_with_limits, maximal_graphs, sorted_vectors, survives_all, SolveLimits};
use crate::graph::Graph;
use crate::partition::AdmAssignment;

fn mismatch(msg: impl Into<String>) -> CertificateError {
    CertificateError::Mismatch(msg.into())
}

/// Re-checks a certificate against its own evidence, re-running the solver
/// wherever a line names a graph or an assignment.
pub fn verify_certificate(cert: &Certificate, limits: &SolveLimits) -> Result<(), CertificateError> {
    match &cert.claim {
        Claim::M33Witness => verify_witness(cert, limits),
        Claim::M33NoneUpTo(_) => {
            for e in cert.scans() {
                if e.count("infeasible").unwrap_or(0) != 0 {
                    return Err(mismatch(format!("scan line reports an infeasible graph: {e}")));
                }
            }
            Ok(())
        }
        Claim::Degree2Tight { n, capacity } => verify_tightness(cert, *n, *capacity, limits),
        Claim::Conjecture43UpTo(max_n) | Claim::PathColoringUpTo(max_n) => verify_scan(cert, *max_n, limits),
    }
}

fn infeasible(g: &Graph, capacity: usize, a: &AdmAssignment, limits: &SolveLimits) -> Result<bool, CertificateError> {
    Ok(!feasible_under_caps_with_limits(g, capacity, a, limits)?.is_feasible())
}

fn verify_witness(cert: &Certificate, limits: &SolveLimits) -> Result<(), CertificateError> {
    let g = cert
        .graph
        .as_ref()
        .ok_or_else(|| mismatch("witness certificate carries no graph"))?;
    if !g.is_cubic() || !g.is_connected() {
        return Err(mismatch("witness is not a connected cubic graph"));
    }
    for e in &cert.evidence {
        match e {
            Evidence::Bridges(k) if *k != crate::graph::find_bridges(g).len() => {
                return Err(mismatch(format!("bridge count {k} is wrong")));
            }
            Evidence::Infeasible { capacity, adms, .. }
                if !infeasible(g, *capacity, &AdmAssignment::uniform(g.n(), *adms), limits)? =>
            {
                return Err(mismatch(format!("witness is feasible with C {capacity} A {adms}")));
            }
            _ => {}
        }
    }
    if !infeasible(g, 3, &AdmAssignment::uniform(g.n(), 2), limits)? {
        return Err(mismatch("witness is feasible with C 3 A 2"));
    }
    Ok(())
}

fn verify_tightness(
    cert: &Certificate,
    n: usize,
    capacity: usize,
    limits: &SolveLimits,
) -> Result<(), CertificateError> {
    if n < 3 || capacity == 0 || capacity > n {
        return Err(mismatch(format!("n {n} C {capacity} is out of range")));
    }
    let adversaries = maximal_graphs(n, 2);
    let upper = 2 * n + 1 - capacity;
    let mut refuted = BTreeSet::new();
    let mut survivors = BTreeSet::new();
    for e in &cert.evidence {
        match e {
            Evidence::Refuted { assignment, graph } => {
                if graph.n() != n || graph.max_degree() > 2 || assignment.len() != n {
                    return Err(mismatch("refuting graph does not fit the ring"));
                }
                if !infeasible(graph, capacity, assignment, limits)? {
                    return Err(mismatch(format!("graph does not refute {assignment}")));
                }
                let mut key = assignment.counts().to_vec();
                key.sort_unstable();
                refuted.insert(key);
            }
            Evidence::Feasible(a) | Evidence::Survivor(a) => {
                if survives_all(&adversaries, capacity, a, limits)?.is_some() {
                    return Err(mismatch(format!("{a} does not survive")));
                }
                if matches!(e, Evidence::Survivor(_)) {
                    survivors.insert(a.counts().to_vec());
                }
            }
            _ => {}
        }
    }
    let lower_side_done = sorted_vectors(n, 1, 2, upper - 1)
        .into_iter()
        .all(|v| refuted.contains(&v) || survivors.contains(&v));
    match &cert.verdict {
        Verdict::Verified => {
            let feasible = cert.evidence.iter().any(|e| match e {
                Evidence::Feasible(a) => a.total() == upper,
                _ => false,
            });
            if !feasible || !survivors.is_empty() || !lower_side_done {
                return Err(mismatch("tightness evidence is incomplete"));
            }
        }
        Verdict::RefutedByAssignment(a) => {
            if survives_all(&adversaries, capacity, a, limits)?.is_some() || a.total() >= upper {
                return Err(mismatch(format!("{a} does not refute the lower side")));
            }
        }
        Verdict::RefutedByGraph(g) => {
            let proposed = cert
                .evidence
                .iter()
                .find_map(|e| match e {
                    Evidence::Refuted { assignment, graph } if graph == g && assignment.total() == upper => {
                        Some(assignment)
                    }
                    _ => None,
                })
                .ok_or_else(|| mismatch("refuting graph has no matching evidence line"))?;
            if !infeasible(g, capacity, proposed, limits)? {
                return Err(mismatch("refuting graph is served"));
            }
        }
        Verdict::Incomplete => {}
    }
    Ok(())
}

fn verify_scan(cert: &Certificate, max_n: usize, limits: &SolveLimits) -> Result<(), CertificateError> {
    let conjecture = matches!(cert.claim, Claim::Conjecture43UpTo(_));
    let mut expected = 1;
    for e in &cert.evidence {
        match e {
            Evidence::Scan { n, method, .. } => {
                if *n != expected || *n > max_n {
                    return Err(mismatch(format!("scan lines skip or repeat order {n}")));
                }
                let classes = e.count("classes").unwrap_or(0);
                let holds = e.count("holds").unwrap_or(0);
                let timeouts = e.count("timeouts").unwrap_or(0);
                let extra = e.count("path4").unwrap_or(0);
                if extra > holds || holds + timeouts > classes {
                    return Err(mismatch(format!("counters do not add up: {e}")));
                }
                if method == "exhaustive" {
                    if holds + timeouts != classes {
                        return Err(mismatch(format!("exhaustive scan misses graphs: {e}")));
                    }
                    expected += 1;
                }
            }
            Evidence::Timeout(g) if g.max_degree() > 3 || !g.is_connected() => {
                return Err(mismatch("timed-out graph is outside the class"));
            }
            _ => {}
        }
    }
    match &cert.verdict {
        Verdict::Verified => {
            if expected != max_n + 1 {
                return Err(mismatch(format!("scan stops before order {max_n}")));
            }
            if cert.evidence.iter().any(|e| matches!(e, Evidence::Timeout(_))) {
                return Err(mismatch("verified scan lists timeouts"));
            }
        }
        Verdict::RefutedByGraph(g) => {
            if g.max_degree() > 3 || !g.is_connected() || g.n() > max_n {
                return Err(mismatch("counterexample is outside the class"));
            }
            let fails = if conjecture {
                infeasible(g, 4, &AdmAssignment::uniform(g.n(), 2), limits)?
            } else {
                path_two_coloring(g, 5).is_none()
            };
            if !fails {
                return Err(mismatch("counterexample satisfies the claim"));
            }
        }
        Verdict::RefutedByAssignment(_) => return Err(mismatch("scan claims are refuted by graphs")),
        Verdict::Incomplete => {}
    }
    Ok(())
}
