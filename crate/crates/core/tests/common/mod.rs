//! Brute-force oracles shared by the integration tests. They share no code
//! with the library beyond the `Graph` type.
#![allow(dead_code)]

use grooming_core::graph::{Edge, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Cheapest partition of the edges into blocks of at most `capacity` edges,
/// found by walking every set partition (restricted growth strings). With
/// `caps`, vertex `v` may lie in at most `caps[v]` blocks; `None` when no
/// partition respects them.
pub fn brute_min_cost(g: &Graph, capacity: usize, caps: Option<&[usize]>) -> Option<usize> {
    let edges = g.edges().to_vec();
    let mut blocks: Vec<Vec<Edge>> = Vec::new();
    let mut best = None;
    place(&edges, 0, capacity, caps, g.n(), &mut blocks, &mut best);
    best
}

fn place(
    edges: &[Edge],
    i: usize,
    capacity: usize,
    caps: Option<&[usize]>,
    n: usize,
    blocks: &mut Vec<Vec<Edge>>,
    best: &mut Option<usize>,
) {
    if i == edges.len() {
        let mut appear = vec![0usize; n];
        let mut cost = 0;
        for b in blocks.iter() {
            let mut vs: Vec<usize> = b.iter().flat_map(|e| [e.u(), e.v()]).collect();
            vs.sort_unstable();
            vs.dedup();
            cost += vs.len();
            for v in vs {
                appear[v] += 1;
            }
        }
        if let Some(c) = caps {
            if appear.iter().zip(c).any(|(a, c)| a > c) {
                return;
            }
        }
        if best.is_none_or(|b| cost < b) {
            *best = Some(cost);
        }
        return;
    }
    for k in 0..blocks.len() {
        if blocks[k].len() < capacity {
            blocks[k].push(edges[i]);
            place(edges, i + 1, capacity, caps, n, blocks, best);
            blocks[k].pop();
        }
    }
    blocks.push(vec![edges[i]]);
    place(edges, i + 1, capacity, caps, n, blocks, best);
    blocks.pop();
}

fn components(n: usize, edges: &[Edge]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut count = n;
    for e in edges {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Edges whose deletion adds a component.
pub fn brute_bridges(g: &Graph) -> Vec<Edge> {
    let all = g.edges();
    let base = components(g.n(), all);
    all.iter()
        .filter(|&&e| {
            let rest: Vec<Edge> = all.iter().copied().filter(|&f| f != e).collect();
            components(g.n(), &rest) > base
        })
        .copied()
        .collect()
}

/// Does some set of at most `k` edges contain a cycle?
pub fn has_cycle_within(g: &Graph, k: usize) -> bool {
    let m = g.edge_count();
    (1u32..1 << m).any(|mask| {
        if mask.count_ones() as usize > k {
            return false;
        }
        let sub: Vec<Edge> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i]).collect();
        // a forest on n vertices with s edges has n - s components
        components(g.n(), &sub) != g.n() - sub.len()
    })
}

/// Uniform simple graph on `n` vertices with `m` edges (capped at the maximum).
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m.min(pairs.len()));
    Graph::new(n, pairs).expect("distinct pairs")
}
