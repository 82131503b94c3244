//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! A [`Graph`] is immutable once built: the edge list is kept sorted
//! lexicographically and neighbor lists are sorted ascending, so every
//! traversal below is deterministic.

mod bridges;
pub mod canon;
pub mod cubic;
pub mod enumerate;
pub mod io;
mod matching;
pub mod named;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::GraphError;

pub use bridges::find_bridges;
pub use matching::{maximum_matching, perfect_matching_cubic, remove_matching_cycles};

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "self-loop ({u}, {v})");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn has(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.has(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.has(other.0) || self.has(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range vertices.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::new(u, v);
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Internal constructor; `edges` must be sorted, distinct and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub(crate) fn from_edge_set(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(n, edges)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Degrees of all vertices in vertex order.
    pub fn degree_profile(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_bridgeless(&self) -> bool {
        find_bridges(self).is_empty()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[v] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The graph with `removed` deleted (vertex set unchanged).
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let drop: BTreeSet<Edge> = removed.iter().copied().collect();
        let edges = self.edges.iter().copied().filter(|e| !drop.contains(e)).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Self::from_edge_set(self.n, self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])))
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.0] != usize::MAX && index[e.1] != usize::MAX)
            .map(|e| Edge::new(index[e.0], index[e.1]));
        Self::from_edge_set(vertices.len(), edges)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)));
        Self::from_edge_set(self.n + other.n, edges)
    }

    /// Adds edges, panicking on duplicates or loops.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Graph {
        let mut edges = self.edges.clone();
        for &(u, v) in extra {
            assert!(u < self.n && v < self.n);
            let e = Edge::new(u, v);
            assert!(!self.has_edge(u, v), "duplicate edge {e}");
            edges.push(e);
        }
        Self::from_edge_set(self.n, edges)
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated(&self) -> usize {
        self.adj.iter().filter(|a| !a.is_empty()).count()
    }
}

/// A set of edges drawn from a parent graph.
///
/// Isolated vertices are never members: the vertex set is exactly the set of
/// edge endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    edges: Vec<Edge>,
}

impl EdgeSubset {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSubset { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted endpoint set.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.has(v))
    }

    pub fn smallest_edge(&self) -> Option<Edge> {
        self.edges.first().copied()
    }

    /// True when every edge is an edge of `g`.
    pub fn is_subset_of(&self, g: &Graph) -> bool {
        self.edges.iter().all(|e| g.has_edge(e.0, e.1))
    }

    /// Edges as a standalone graph on the parent's vertex count.
    pub fn as_graph(&self, n: usize) -> Graph {
        Graph::from_sorted(n, self.edges.clone())
    }

    /// True when the edges form a single simple path.
    pub fn is_path(&self) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        let vs = self.vertices();
        if vs.len() != self.edges.len() + 1 {
            return false;
        }
        let max_deg = vs
            .iter()
            .map(|&v| self.edges.iter().filter(|e| e.has(v)).count())
            .max()
            .unwrap_or(0);
        max_deg <= 2 && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let vs = self.vertices();
        let Some(&start) = vs.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in self.edges.iter().filter(|e| e.has(v)) {
                let w = e.other(v);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == vs.len()
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Checks disjointness; membership in a graph is checked by the callers that need it.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self, crate::error::PreconditionError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if a.shares_vertex(*b) {
                    return Err(crate::error::PreconditionError::NotAMatching(a.0, a.1, b.0, b.1));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Partner of `v`, if matched.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.has(v)).map(|e| e.other(v))
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.has(v))
    }
}
