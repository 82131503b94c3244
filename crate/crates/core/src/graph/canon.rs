//! Canonical labeling by color/degree refinement plus backtracking
//! individualization, with orbit pruning from automorphisms found on the way.
//!
//! Components are labeled independently and then concatenated in code order,
//! so graphs with many isomorphic components stay cheap. Each component is
//! limited to 64 vertices.

use std::cmp::Ordering;

use super::{Edge, Graph};

/// A canonical code plus the labeling that realizes it.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// Equal codes iff isomorphic (color-preserving when colors are given).
    pub code: Vec<u64>,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.labeling)
    }
}

/// Canonical form of an uncolored graph.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical code, for isomorphism tests and dedup.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    canonical_form(g).code
}

/// Relabeled copy of `g` in canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph(g)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// Canonical form where isomorphisms must preserve `colors`.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.n());
    let mut parts: Vec<(Vec<u64>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let sub = g.induced(&comp);
            let sub_colors: Vec<u32> = comp.iter().map(|&v| colors[v]).collect();
            let (code, order) = canonical_component(&sub, &sub_colors);
            // order[i] = local vertex at canonical position i
            let global: Vec<usize> = order.into_iter().map(|local| comp[local]).collect();
            (code, global)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut code = vec![g.n() as u64, parts.len() as u64];
    let mut labeling = vec![0; g.n()];
    let mut next = 0;
    for (part_code, order) in parts {
        code.extend(part_code);
        for v in order {
            labeling[v] = next;
            next += 1;
        }
    }
    CanonicalForm { code, labeling }
}

/// Ordered partition of the vertices of one component.
type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Returns (code, order) where `order[i]` is the vertex placed at position `i`.
fn canonical_component(g: &Graph, colors: &[u32]) -> (Vec<u64>, Vec<usize>) {
    let k = g.n();
    assert!(k <= 64, "canonical labeling supports components of at most 64 vertices");
    let adj: Vec<u64> = (0..k)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();

    let mut keys: Vec<(u32, usize, usize)> = (0..k).map(|v| (colors[v], g.degree(v), v)).collect();
    keys.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (i, &(c, d, v)) in keys.iter().enumerate() {
        if i > 0 && (keys[i - 1].0, keys[i - 1].1) == (c, d) {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    refine(&adj, &mut cells);

    let mut search = Search {
        adj: &adj,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut fixed = Vec::new();
    search.explore(cells, &mut fixed);
    let (bits, order) = search.best.expect("search visits at least one leaf");

    let mut code = Vec::with_capacity(2 + k + bits.len());
    code.push(k as u64);
    code.push(g.edge_count() as u64);
    code.extend(order.iter().map(|&v| colors[v] as u64));
    code.extend(bits);
    (code, order)
}

/// Splits cells by the multiset of neighbor cells until the partition is
/// equitable (up to hash collisions, which only make it coarser).
///
/// The key of a vertex is a sum of per-cell pseudo-random words over its
/// neighbors, so it depends only on the partition and never on labels.
fn refine(adj: &[u64], cells: &mut Cells) {
    let k = adj.len();
    let mut cell_of = vec![0usize; k];
    let mut key = vec![0u64; k];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        for v in 0..k {
            let mut h = 0u64;
            let mut bits = adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                h = h.wrapping_add(mix(cell_of[w] as u64));
            }
            key[v] = h;
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut sorted = c.clone();
            sorted.sort_unstable_by_key(|&v| (key[v], v));
            let mut start = 0;
            for j in 1..=sorted.len() {
                if j == sorted.len() || key[sorted[j]] != key[sorted[start]] {
                    next.push(sorted[start..j].to_vec());
                    start = j;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Search<'_> {
    fn explore(&mut self, cells: Cells, fixed: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !tried.is_empty() && self.same_orbit(w, &tried, fixed) {
                continue;
            }
            tried.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[t].iter().copied().filter(|&x| x != w).collect();
            child.splice(t..=t, [vec![w], rest]);
            refine(self.adj, &mut child);
            fixed.push(w);
            self.explore(child, fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bits = encode(self.adj, &order);
        match &self.best {
            None => self.best = Some((bits, order)),
            Some((best_bits, best_order)) => match bits.cmp(best_bits) {
                Ordering::Greater => self.best = Some((bits, order)),
                Ordering::Equal => {
                    // best_order[i] -> order[i] is an automorphism
                    let mut gamma = vec![0; order.len()];
                    for (a, b) in best_order.iter().zip(&order) {
                        gamma[*a] = *b;
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                }
                Ordering::Less => {}
            },
        }
    }

    /// Is `w` in the orbit of some tried vertex under the automorphisms
    /// found so far that fix `fixed` pointwise?
    fn same_orbit(&self, w: usize, tried: &[usize], fixed: &[usize]) -> bool {
        let k = self.adj.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if fixed.iter().any(|&f| gamma[f] != f) {
                continue;
            }
            any = true;
            for (v, &image) in gamma.iter().enumerate().take(k) {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == rw)
    }
}

/// Adjacency rows of the relabeled graph, one word per row.
fn encode(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let k = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..k)
        .map(|i| {
            let mut row = 0u64;
            let mut bits = adj[order[i]];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << (63 - pos[w]);
            }
            row
        })
        .collect()
}

/// Edges of the canonical graph, for callers that want the relabeled edge list only.
pub fn canonical_edges(g: &Graph) -> Vec<Edge> {
    canonical_graph(g).edges().to_vec()
}
