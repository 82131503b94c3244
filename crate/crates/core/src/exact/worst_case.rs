//! `A(n, C, Δ)`: the fewest ADMs that serve every request graph of maximum
//! degree at most `Δ` on an `n`-node ring.
//!
//! Only the multiset of per-node counts matters, so candidates are sorted
//! vectors, tried in increasing total. A candidate survives when every
//! adversary graph is feasible under every placement of the counts onto its
//! vertices. Removing an edge never breaks feasibility, so the adversaries can
//! be restricted to edge-maximal graphs.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use super::engine::{Abort, Engine};
use super::SolveLimits;
use crate::error::SolveError;
use crate::graph::enumerate::enumerate_graphs_max_degree;
use crate::graph::Graph;
use crate::partition::AdmAssignment;

/// A placed request graph that no partition can serve under `assignment`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub assignment: AdmAssignment,
    /// Labeled on ring nodes: vertex `i` has `assignment[i]` ADMs.
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCaseResult {
    pub optimum: usize,
    /// A cheapest surviving assignment, sorted ascending.
    pub assignment: AdmAssignment,
    /// One refutation per sorted assignment of total `optimum - 1`, when that
    /// level was searched.
    pub refuted_below: Vec<Refutation>,
    /// Number of adversary classes quantified over.
    pub adversaries: usize,
    pub nodes_explored: u64,
}

/// Edge-maximal graphs on `n` vertices with maximum degree at most `max_degree`.
///
/// A graph is edge-maximal iff its vertices of degree below the bound are
/// pairwise adjacent.
pub fn maximal_graphs(n: usize, max_degree: usize) -> Vec<Graph> {
    enumerate_graphs_max_degree(n, max_degree, false)
        .filter(|g| {
            let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) < max_degree).collect();
            low.iter()
                .enumerate()
                .all(|(i, &u)| low[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .collect()
}

/// `A(n, C, Δ)` with default limits.
pub fn worst_case_a(n: usize, capacity: usize, max_degree: usize) -> Result<WorstCaseResult, SolveError> {
    worst_case_a_with_limits(n, capacity, max_degree, &SolveLimits::default())
}

pub fn worst_case_a_with_limits(
    n: usize,
    capacity: usize,
    max_degree: usize,
    limits: &SolveLimits,
) -> Result<WorstCaseResult, SolveError> {
    check_ring(n, capacity, limits)?;
    let d = max_degree.min(n - 1);
    let adversaries = maximal_graphs(n, d);
    // For n >= 2 any node can carry a request, so every node needs an ADM.
    let floor = usize::from(n >= 2 && d >= 1);
    search(n, capacity, d, floor, adversaries, limits)
}

/// Like [`worst_case_a`] but the adversary ranges over the request graphs on
/// `n` vertices with maximum degree at most `Δ` that satisfy `class`.
pub fn min_cost_with_class(
    n: usize,
    capacity: usize,
    max_degree: usize,
    class: &(dyn Fn(&Graph) -> bool + Sync),
    limits: &SolveLimits,
) -> Result<WorstCaseResult, SolveError> {
    check_ring(n, capacity, limits)?;
    let members: Vec<Graph> = enumerate_graphs_max_degree(n, max_degree.min(n - 1), false)
        .filter(|g| class(g))
        .collect();
    let d = members.iter().map(Graph::max_degree).max().unwrap_or(0);
    search(n, capacity, d, 0, members, limits)
}

fn check_ring(n: usize, capacity: usize, limits: &SolveLimits) -> Result<(), SolveError> {
    if n == 0 {
        return Err(SolveError::InvalidInstance("the ring needs at least one node".into()));
    }
    if capacity == 0 {
        return Err(SolveError::InvalidInstance("grooming factor must be at least 1".into()));
    }
    if n > limits.max_ring {
        return Err(SolveError::TooLarge {
            what: "ring size",
            value: n,
            limit: limits.max_ring,
        });
    }
    Ok(())
}

struct Adversary {
    graph: Graph,
    /// Vertices by decreasing degree: the greedy placement puts the smallest
    /// counts there first.
    heavy_first: Vec<usize>,
    cache: Mutex<HashMap<Vec<u8>, bool>>,
}

impl Adversary {
    fn new(graph: Graph) -> Self {
        let mut heavy_first: Vec<usize> = (0..graph.n()).collect();
        heavy_first.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        Adversary {
            graph,
            heavy_first,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Feasibility with `caps[v]` ADMs on vertex `v`.
    fn feasible(
        &self,
        capacity: usize,
        caps: &[usize],
        limits: &SolveLimits,
        nodes: &AtomicU64,
    ) -> Result<bool, SolveError> {
        let key: Vec<u8> = caps
            .iter()
            .enumerate()
            .map(|(v, &c)| c.min(self.graph.degree(v)) as u8)
            .collect();
        if let Some(&known) = self.cache.lock().unwrap().get(&key) {
            return Ok(known);
        }
        let clamped: Vec<usize> = key.iter().map(|&c| c as usize).collect();
        let deadline = limits.timeout.map(|t| std::time::Instant::now() + t);
        let mut engine = Engine::new(&self.graph, capacity, Some(&clamped), deadline);
        let all = engine.all_edges();
        let result = engine.find_any(all);
        nodes.fetch_add(engine.nodes, Ordering::Relaxed);
        let ok = match result {
            Ok(found) => found.is_some(),
            Err(Abort::Timeout) => return Err(SolveError::TimedOut { nodes: engine.nodes }),
        };
        self.cache.lock().unwrap().insert(key, ok);
        Ok(ok)
    }

    /// First placement of the sorted counts `a` that makes this graph
    /// infeasible, as caps per graph vertex.
    fn refute(
        &self,
        capacity: usize,
        a: &[usize],
        limits: &SolveLimits,
        nodes: &AtomicU64,
    ) -> Result<Option<Vec<usize>>, SolveError> {
        let n = a.len();
        let mut greedy = vec![0; n];
        for (i, &v) in self.heavy_first.iter().enumerate() {
            greedy[v] = a[i];
        }
        if !self.feasible(capacity, &greedy, limits, nodes)? {
            return Ok(Some(greedy));
        }
        let mut caps = a.to_vec();
        loop {
            if !self.feasible(capacity, &caps, limits, nodes)? {
                return Ok(Some(caps));
            }
            if !next_permutation(&mut caps) {
                return Ok(None);
            }
        }
    }
}

/// Lexicographic successor among the distinct permutations; false at the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Sorted vectors of length `n` with entries in `lo..=hi` summing to `total`,
/// in lexicographic order.
pub fn sorted_vectors(n: usize, lo: usize, hi: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, lo: usize, hi: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let left = n - prefix.len();
        for x in lo..=hi {
            // remaining entries are all >= x and <= hi
            if x * left > total || hi * left < total {
                continue;
            }
            prefix.push(x);
            rec(n, x, hi, total - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, lo, hi, total, &mut Vec::new(), &mut out);
    out
}

/// Builds the ring-labeled graph for a refuting placement: vertex `v` of the
/// adversary goes to a ring node holding `caps[v]` ADMs.
fn place(adversary: &Graph, caps: &[usize], a: &[usize]) -> Graph {
    let mut used = vec![false; a.len()];
    let perm: Vec<usize> = caps
        .iter()
        .map(|&c| {
            let slot = (0..a.len()).find(|&i| !used[i] && a[i] == c).unwrap();
            used[slot] = true;
            slot
        })
        .collect();
    adversary.relabel(&perm)
}

/// First refutation of the sorted counts `a` over the adversaries, if any.
fn check(
    adversaries: &[Adversary],
    capacity: usize,
    a: &[usize],
    limits: &SolveLimits,
    nodes: &AtomicU64,
) -> Result<Option<Refutation>, SolveError> {
    for adv in adversaries {
        if let Some(caps) = adv.refute(capacity, a, limits, nodes)? {
            return Ok(Some(Refutation {
                assignment: AdmAssignment::new(a.to_vec()),
                graph: place(&adv.graph, &caps, a),
            }));
        }
    }
    Ok(None)
}

/// Does the assignment serve every graph in `graphs` under every placement?
/// Returns the first refutation otherwise. `a` need not be sorted.
pub fn survives_all(
    graphs: &[Graph],
    capacity: usize,
    a: &AdmAssignment,
    limits: &SolveLimits,
) -> Result<Option<Refutation>, SolveError> {
    let mut sorted = a.counts().to_vec();
    sorted.sort_unstable();
    let adversaries: Vec<Adversary> = graphs.iter().cloned().map(Adversary::new).collect();
    let nodes = AtomicU64::new(0);
    check(&adversaries, capacity, &sorted, limits, &nodes)
}

fn search(
    n: usize,
    capacity: usize,
    hi: usize,
    lo: usize,
    graphs: Vec<Graph>,
    limits: &SolveLimits,
) -> Result<WorstCaseResult, SolveError> {
    let count = graphs.len();
    let adversaries: Vec<Adversary> = graphs.into_iter().map(Adversary::new).collect();
    let nodes = AtomicU64::new(0);
    let mut below: Vec<Refutation> = Vec::new();
    for total in lo * n..=hi * n {
        let candidates = sorted_vectors(n, lo, hi, total);
        let outcomes: Vec<Result<Option<Refutation>, SolveError>> = candidates
            .par_iter()
            .map(|a| check(&adversaries, capacity, a, limits, &nodes))
            .collect();
        let mut refuted = Vec::with_capacity(candidates.len());
        for (a, outcome) in candidates.iter().zip(outcomes) {
            match outcome? {
                Some(r) => refuted.push(r),
                None => {
                    return Ok(WorstCaseResult {
                        optimum: total,
                        assignment: AdmAssignment::new(a.clone()),
                        refuted_below: below,
                        adversaries: count,
                        nodes_explored: nodes.load(Ordering::Relaxed),
                    });
                }
            }
        }
        below = refuted;
    }
    unreachable!("the all-maximum assignment never constrains any vertex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_are_sorted_and_complete() {
        let v = sorted_vectors(3, 1, 2, 5);
        assert_eq!(v, vec![vec![1, 2, 2]]);
        assert_eq!(sorted_vectors(3, 0, 3, 3).len(), 3); // 003 012 111
        assert!(sorted_vectors(2, 1, 2, 5).is_empty());
    }

    #[test]
    fn permutations_are_distinct() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn maximal_two_regular_adversaries() {
        // n = 5, degree <= 2: C5, C3 + K2, C4 + K1
        let m = maximal_graphs(5, 2);
        assert_eq!(m.len(), 3);
        assert!(m.iter().any(|g| g.is_regular(2)));
    }

    #[test]
    fn degree_two_small_rings() {
        let r = worst_case_a(5, 3, 2).unwrap();
        assert_eq!(r.optimum, 8);
        assert_eq!(r.assignment.counts(), &[1, 1, 2, 2, 2]);
        assert_eq!(r.refuted_below.len(), 1);
        assert_eq!(worst_case_a(3, 1, 2).unwrap().optimum, 6);
        assert_eq!(worst_case_a(4, 6, 3).unwrap().optimum, 4);
    }

    #[test]
    fn refutations_are_genuine() {
        let r = worst_case_a(5, 3, 2).unwrap();
        for refutation in &r.refuted_below {
            let f = crate::exact::feasible_under_caps(&refutation.graph, 3, &refutation.assignment).unwrap();
            assert!(!f.is_feasible());
        }
    }

    #[test]
    fn classes() {
        let limits = SolveLimits::default();
        let bridgeless_cubic = |g: &Graph| g.is_cubic() && g.is_bridgeless();
        assert_eq!(
            min_cost_with_class(4, 3, 3, &bridgeless_cubic, &limits)
                .unwrap()
                .optimum,
            7
        );
        let edgeless = |g: &Graph| g.edge_count() == 0;
        assert_eq!(min_cost_with_class(5, 2, 3, &edgeless, &limits).unwrap().optimum, 0);
        let perfect = |g: &Graph| g.is_regular(1);
        assert_eq!(min_cost_with_class(6, 2, 3, &perfect, &limits).unwrap().optimum, 6);
    }

    #[test]
    fn guards() {
        assert!(matches!(worst_case_a(9, 3, 2), Err(SolveError::TooLarge { .. })));
        assert!(matches!(worst_case_a(0, 3, 2), Err(SolveError::InvalidInstance(_))));
        assert_eq!(worst_case_a(1, 3, 2).unwrap().optimum, 0);
    }
}
