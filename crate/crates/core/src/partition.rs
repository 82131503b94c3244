//! Edge partitions, per-node ADM assignments and the feasibility checker.

use std::fmt;

use crate::error::GraphError;
use crate::graph::{Edge, EdgeSubset, Graph};

/// ADM counts `A(v)` for every ring node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmAssignment {
    counts: Vec<usize>,
}

impl AdmAssignment {
    pub fn new(counts: Vec<usize>) -> Self {
        AdmAssignment { counts }
    }

    /// Every node gets `k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        AdmAssignment { counts: vec![k; n] }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> usize {
        self.counts[v]
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for AdmAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Edge-disjoint parts covering a parent graph, each with at most `capacity` edges.
///
/// Construction only normalizes the part order (by smallest edge); whether the
/// parts really form a valid partition is decided by [`verify_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parent: Graph,
    capacity: usize,
    parts: Vec<EdgeSubset>,
}

impl Partition {
    pub fn new(parent: Graph, capacity: usize, parts: Vec<EdgeSubset>) -> Self {
        let mut parts = parts;
        parts.sort();
        Partition {
            parent,
            capacity,
            parts,
        }
    }

    pub fn parent(&self) -> &Graph {
        &self.parent
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn parts(&self) -> &[EdgeSubset] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts whose vertex set contains each vertex.
    pub fn appearances(&self) -> Vec<usize> {
        let mut count = vec![0; self.parent.n()];
        for part in &self.parts {
            for v in part.vertices() {
                if v < count.len() {
                    count[v] += 1;
                }
            }
        }
        count
    }

    /// Total ADM cost: the sum of the parts' vertex counts.
    pub fn cost(&self) -> usize {
        self.parts.iter().map(|p| p.vertices().len()).sum()
    }

    pub fn max_appearances(&self) -> usize {
        self.appearances().into_iter().max().unwrap_or(0)
    }

    /// The cheapest assignment this partition satisfies.
    pub fn induced_assignment(&self) -> AdmAssignment {
        AdmAssignment::new(self.appearances())
    }
}

impl fmt::Display for Partition {
    /// One `B:` line per part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in &self.parts {
            write!(f, "B:")?;
            for e in part.edges() {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The first condition a partition breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The assignment does not have one entry per vertex.
    AssignmentLength {
        expected: usize,
        found: usize,
    },
    EmptyPart {
        part: usize,
    },
    OverCapacity {
        part: usize,
        edges: usize,
        capacity: usize,
    },
    ForeignEdge {
        part: usize,
        edge: Edge,
    },
    /// An edge lies in two parts.
    SharedEdge {
        edge: Edge,
        first: usize,
        second: usize,
    },
    UncoveredEdge {
        edge: Edge,
    },
    TooManyAppearances {
        vertex: usize,
        appearances: usize,
        allowed: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AssignmentLength { expected, found } => {
                write!(f, "assignment has {found} entries, graph has {expected} vertices")
            }
            Violation::EmptyPart { part } => write!(f, "part {part} is empty"),
            Violation::OverCapacity { part, edges, capacity } => {
                write!(f, "part {part} has {edges} edges, capacity is {capacity}")
            }
            Violation::ForeignEdge { part, edge } => {
                write!(f, "part {part} contains {edge}, which is not in the graph")
            }
            Violation::SharedEdge { edge, first, second } => {
                write!(f, "edge {edge} lies in parts {first} and {second}")
            }
            Violation::UncoveredEdge { edge } => write!(f, "edge {edge} is in no part"),
            Violation::TooManyAppearances {
                vertex,
                appearances,
                allowed,
            } => write!(f, "vertex {vertex} appears in {appearances} parts, allowed {allowed}"),
        }
    }
}

/// Checks capacity, exact cover of the edges and the per-vertex limits, in
/// that order, and reports the first violation.
pub fn verify_partition(p: &Partition, a: &AdmAssignment) -> Result<(), Violation> {
    let g = p.parent();
    if a.len() != g.n() {
        return Err(Violation::AssignmentLength {
            expected: g.n(),
            found: a.len(),
        });
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.edge_count()];
    for (i, part) in p.parts().iter().enumerate() {
        if part.is_empty() {
            return Err(Violation::EmptyPart { part: i });
        }
        if part.len() > p.capacity() {
            return Err(Violation::OverCapacity {
                part: i,
                edges: part.len(),
                capacity: p.capacity(),
            });
        }
        for &e in part.edges() {
            let Some(idx) = g.edge_index(e) else {
                return Err(Violation::ForeignEdge { part: i, edge: e });
            };
            if let Some(first) = owner[idx] {
                return Err(Violation::SharedEdge {
                    edge: e,
                    first,
                    second: i,
                });
            }
            owner[idx] = Some(i);
        }
    }
    if let Some(idx) = owner.iter().position(Option::is_none) {
        return Err(Violation::UncoveredEdge { edge: g.edges()[idx] });
    }
    for (v, &count) in p.appearances().iter().enumerate() {
        if count > a.get(v) {
            return Err(Violation::TooManyAppearances {
                vertex: v,
                appearances: count,
                allowed: a.get(v),
            });
        }
    }
    Ok(())
}

/// Reads the `B: (u,v) (u,v) ...` lines written by `Partition`'s `Display`,
/// skipping blank lines, comments and lines of other kinds.
pub fn parse_partition(parent: &Graph, capacity: usize, text: &str) -> Result<Partition, GraphError> {
    let mut parts = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let Some(rest) = raw.trim().strip_prefix("B:") else {
            continue;
        };
        let bad = |message: String| GraphError::Parse { line: idx + 1, message };
        let mut edges = Vec::new();
        for tok in rest.split_whitespace() {
            let inner = tok
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected `(u,v)`, found `{tok}`")))?;
            let (u, v) = inner
                .split_once(',')
                .ok_or_else(|| bad(format!("expected `(u,v)`, found `{tok}`")))?;
            let u: usize = u.parse().map_err(|_| bad(format!("bad endpoint `{u}`")))?;
            let v: usize = v.parse().map_err(|_| bad(format!("bad endpoint `{v}`")))?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push(Edge::new(u, v));
        }
        parts.push(EdgeSubset::new(edges));
    }
    Ok(Partition::new(parent.clone(), capacity, parts))
}
