use super::certificate::{Certificate, Claim, Evidence, Verdict};
use crate::error::SolveError;
use crate::exact::{maximal_graphs, sorted_vectors, survives_all, SolveLimits};
use crate::partition::AdmAssignment;

/// Checks both sides of `A(n, C, 2) = 2n - (C - 1)` on a ring of `n` nodes:
/// the assignment with `C - 1` single-ADM nodes serves every request graph of
/// maximum degree 2, and every assignment of total `2n - C` is refuted.
///
/// The first failing side becomes the `REFUTED-BY` line: the refuting graph
/// for the upper side, a surviving assignment for the lower side.
pub fn check_degree2_tightness(n: usize, capacity: usize, limits: &SolveLimits) -> Result<Certificate, SolveError> {
    if n < 3 || capacity == 0 || capacity > n {
        return Err(SolveError::InvalidInstance(format!(
            "tightness needs n >= 3 and 1 <= C <= n, got n = {n}, C = {capacity}"
        )));
    }
    if n > limits.max_ring {
        return Err(SolveError::TooLarge {
            what: "ring size",
            value: n,
            limit: limits.max_ring,
        });
    }
    let adversaries = maximal_graphs(n, 2);
    let mut evidence = Vec::new();
    let mut verdict = Verdict::Verified;

    let upper = 2 * n + 1 - capacity;
    let mut counts = vec![1; capacity - 1];
    counts.resize(n, 2);
    let proposed = AdmAssignment::new(counts);
    match survives_all(&adversaries, capacity, &proposed, limits)? {
        None => evidence.push(Evidence::Feasible(proposed)),
        Some(r) => {
            verdict = Verdict::RefutedByGraph(r.graph.clone());
            evidence.push(Evidence::Refuted {
                assignment: r.assignment,
                graph: r.graph,
            });
        }
    }

    for counts in sorted_vectors(n, 1, 2, upper - 1) {
        let a = AdmAssignment::new(counts);
        match survives_all(&adversaries, capacity, &a, limits)? {
            Some(r) => evidence.push(Evidence::Refuted {
                assignment: r.assignment,
                graph: r.graph,
            }),
            None => {
                if verdict == Verdict::Verified {
                    verdict = Verdict::RefutedByAssignment(a.clone());
                }
                evidence.push(Evidence::Survivor(a));
            }
        }
    }
    Ok(Certificate {
        claim: Claim::Degree2Tight { n, capacity },
        graph: None,
        evidence,
        verdict,
    })
}
