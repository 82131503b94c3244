//! Exhaustive solvers: cheapest partition of one request graph, feasibility
//! under per-node ADM caps, and the worst case over all request graphs.

mod engine;
mod worst_case;

use std::time::{Duration, Instant};

use crate::error::SolveError;
use crate::graph::{Edge, EdgeSubset, Graph};
use crate::partition::{AdmAssignment, Partition};

pub use engine::{MAX_EDGES, MAX_VERTICES};
pub use worst_case::{
    maximal_graphs, min_cost_with_class, sorted_vectors, survives_all, worst_case_a, worst_case_a_with_limits,
    Refutation, WorstCaseResult,
};

use engine::{Abort, Engine};

/// Size guards and time budget for the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveLimits {
    /// Largest edge count accepted by the single-graph solvers.
    pub max_edges: usize,
    /// Largest ring size accepted by [`worst_case_a`].
    pub max_ring: usize,
    /// Wall-clock budget per single-graph search.
    pub timeout: Option<Duration>,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_edges: 24,
            max_ring: 8,
            timeout: None,
        }
    }
}

impl SolveLimits {
    /// Raises the edge guard to what the engine can represent.
    pub fn unbounded_edges() -> Self {
        SolveLimits {
            max_edges: MAX_EDGES,
            ..Self::default()
        }
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    fn check_graph(&self, g: &Graph) -> Result<(), SolveError> {
        let limit = self.max_edges.min(MAX_EDGES);
        if g.edge_count() > limit {
            return Err(SolveError::TooLarge {
                what: "edge count",
                value: g.edge_count(),
                limit,
            });
        }
        if g.n() > MAX_VERTICES {
            return Err(SolveError::TooLarge {
                what: "vertex count",
                value: g.n(),
                limit: MAX_VERTICES,
            });
        }
        Ok(())
    }

    fn deadline(&self) -> Option<Instant> {
        self.timeout.map(|t| Instant::now() + t)
    }
}

/// Optimum with a witness partition achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: Partition,
    pub nodes_explored: u64,
}

/// Outcome of a feasibility question; `witness` is `None` when infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub witness: Option<Partition>,
    pub nodes_explored: u64,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        self.witness.is_some()
    }
}

fn check_capacity(capacity: usize) -> Result<(), SolveError> {
    if capacity == 0 {
        return Err(SolveError::InvalidInstance("grooming factor must be at least 1".into()));
    }
    Ok(())
}

fn to_partition(g: &Graph, capacity: usize, parts: &[u128]) -> Partition {
    let subsets = parts
        .iter()
        .map(|&mask| {
            let mut edges: Vec<Edge> = Vec::new();
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                edges.push(g.edges()[i]);
            }
            EdgeSubset::new(edges)
        })
        .collect();
    Partition::new(g.clone(), capacity, subsets)
}

fn timed_out(nodes: u64) -> SolveError {
    SolveError::TimedOut { nodes }
}

/// Minimum of `sum |V(B)|` over partitions of `E(g)` into parts of at most
/// `capacity` edges, with default limits.
pub fn min_cost_partition(g: &Graph, capacity: usize) -> Result<SolveResult, SolveError> {
    min_cost_partition_with_limits(g, capacity, &SolveLimits::default())
}

pub fn min_cost_partition_with_limits(
    g: &Graph,
    capacity: usize,
    limits: &SolveLimits,
) -> Result<SolveResult, SolveError> {
    limits.check_graph(g)?;
    check_capacity(capacity)?;
    let mut engine = Engine::new(g, capacity, None, limits.deadline());
    let all = engine.all_edges();
    match engine.cheapest(all, u32::MAX) {
        Ok(Some((cost, parts))) => Ok(SolveResult {
            optimum: cost as usize,
            witness: to_partition(g, capacity, &parts),
            nodes_explored: engine.nodes,
        }),
        Ok(None) => unreachable!("single edges always form a valid partition"),
        Err(Abort::Timeout) => Err(timed_out(engine.nodes)),
    }
}

/// Cheapest partition that also respects the caps, if any exists.
pub fn min_cost_under_caps(
    g: &Graph,
    capacity: usize,
    a: &AdmAssignment,
    limits: &SolveLimits,
) -> Result<Option<SolveResult>, SolveError> {
    limits.check_graph(g)?;
    check_capacity(capacity)?;
    check_assignment(g, a)?;
    let mut engine = Engine::new(g, capacity, Some(a.counts()), limits.deadline());
    let all = engine.all_edges();
    match engine.cheapest(all, u32::MAX) {
        Ok(found) => Ok(found.map(|(cost, parts)| SolveResult {
            optimum: cost as usize,
            witness: to_partition(g, capacity, &parts),
            nodes_explored: engine.nodes,
        })),
        Err(Abort::Timeout) => Err(timed_out(engine.nodes)),
    }
}

fn check_assignment(g: &Graph, a: &AdmAssignment) -> Result<(), SolveError> {
    if a.len() != g.n() {
        return Err(SolveError::InvalidInstance(format!(
            "assignment has {} entries for {} vertices",
            a.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Is there a partition with parts of at most `capacity` edges in which each
/// vertex `v` lies in at most `a(v)` parts? Uses default limits.
pub fn feasible_under_caps(g: &Graph, capacity: usize, a: &AdmAssignment) -> Result<Feasibility, SolveError> {
    feasible_under_caps_with_limits(g, capacity, a, &SolveLimits::default())
}

pub fn feasible_under_caps_with_limits(
    g: &Graph,
    capacity: usize,
    a: &AdmAssignment,
    limits: &SolveLimits,
) -> Result<Feasibility, SolveError> {
    limits.check_graph(g)?;
    check_capacity(capacity)?;
    check_assignment(g, a)?;
    let mut engine = Engine::new(g, capacity, Some(a.counts()), limits.deadline());
    let all = engine.all_edges();
    match engine.find_any(all) {
        Ok(found) => Ok(Feasibility {
            witness: found.map(|parts| to_partition(g, capacity, &parts)),
            nodes_explored: engine.nodes,
        }),
        Err(Abort::Timeout) => Err(timed_out(engine.nodes)),
    }
}
