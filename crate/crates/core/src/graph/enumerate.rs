//! Isomorph-free enumeration of graphs with bounded maximum degree.
//!
//! Graphs are grown one edge at a time. Every class with `m + 1` edges arises
//! from some class with `m` edges by adding one edge, so keeping a single
//! canonical representative per class at each level yields every class exactly
//! once.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::canonical_form;
use super::{Edge, Graph};

/// Limits for [`enumerate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub max_degree: usize,
    /// Stop growing past this many edges.
    pub max_edges: usize,
    pub connected_only: bool,
}

impl EnumerationSpec {
    pub fn new(n: usize, max_degree: usize, connected_only: bool) -> Self {
        EnumerationSpec {
            n,
            max_degree,
            max_edges: usize::MAX,
            connected_only,
        }
    }
}

/// Finished enumeration, yielded in order of edge count and then canonical code.
pub struct GraphStream {
    inner: std::vec::IntoIter<Graph>,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

/// One canonical representative per isomorphism class of simple graphs on
/// `n` vertices with maximum degree at most `max_degree`.
///
/// Panics when `n == 0`.
pub fn enumerate_graphs_max_degree(n: usize, max_degree: usize, connected_only: bool) -> GraphStream {
    enumerate(EnumerationSpec::new(n, max_degree, connected_only))
}

pub fn enumerate(spec: EnumerationSpec) -> GraphStream {
    let graphs: Vec<Graph> = levels(spec)
        .into_iter()
        .flatten()
        .filter(|g| !spec.connected_only || g.is_connected())
        .collect();
    GraphStream {
        inner: graphs.into_iter(),
    }
}

/// All classes grouped by edge count (index = edge count).
pub fn levels(spec: EnumerationSpec) -> Vec<Vec<Graph>> {
    assert!(spec.n >= 1, "a graph needs at least one vertex");
    let n = spec.n;
    let cap = spec.max_edges.min(n * spec.max_degree.min(n - 1) / 2);
    let mut out = vec![vec![Graph::from_sorted(n, Vec::new())]];
    while out.len() <= cap {
        let prev = out.last().unwrap();
        let found: Vec<(Vec<u64>, Graph)> = prev
            .par_iter()
            .flat_map_iter(|g| extensions(g, spec.max_degree))
            .collect();
        if found.is_empty() {
            break;
        }
        let level: BTreeMap<Vec<u64>, Graph> = found.into_iter().collect();
        out.push(level.into_values().collect());
    }
    out
}

/// Canonical children of `g` with one more edge.
fn extensions(g: &Graph, max_degree: usize) -> Vec<(Vec<u64>, Graph)> {
    let n = g.n();
    let mut seen: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    for u in 0..n {
        if g.degree(u) >= max_degree {
            continue;
        }
        for v in u + 1..n {
            if g.degree(v) >= max_degree || g.has_edge(u, v) {
                continue;
            }
            let mut edges = g.edges().to_vec();
            edges.push(Edge::new(u, v));
            edges.sort_unstable();
            let child = Graph::from_sorted(n, edges);
            let form = canonical_form(&child);
            seen.entry(form.code.clone()).or_insert_with(|| form.graph(&child));
        }
    }
    seen.into_iter().collect()
}
