use crate::error::{PreconditionError, SolveError};
use crate::graph::{EdgeSubset, Graph};
use crate::partition::Partition;

/// A 2-coloring of `E(g)` (indexed like `g.edges()`) in which every
/// monochromatic component is a path of at most `max_len` edges.
///
/// Backtracking over edges in index order; the first edge of each connected
/// component is fixed to color 0. Returns the first coloring in that order.
pub fn path_two_coloring(g: &Graph, max_len: usize) -> Option<Vec<u8>> {
    if g.max_degree() > 4 || (max_len == 0 && g.edge_count() > 0) {
        return None;
    }
    let mut leading = vec![false; g.edge_count()];
    for comp in g.components() {
        let first = g.edges().iter().position(|e| comp.binary_search(&e.u()).is_ok());
        if let Some(i) = first {
            leading[i] = true;
        }
    }
    let mut state = Coloring {
        g,
        max_len,
        leading,
        colors: Vec::with_capacity(g.edge_count()),
        adj: vec![vec![Vec::with_capacity(2); g.n()]; 2],
    };
    state.extend().then_some(state.colors)
}

struct Coloring<'a> {
    g: &'a Graph,
    max_len: usize,
    leading: Vec<bool>,
    colors: Vec<u8>,
    /// `adj[c][v]`: neighbors of `v` along edges of color `c`.
    adj: Vec<Vec<Vec<usize>>>,
}

impl Coloring<'_> {
    fn extend(&mut self) -> bool {
        let i = self.colors.len();
        if i == self.g.edge_count() {
            return true;
        }
        let (u, v) = self.g.edges()[i].ends();
        let choices: &[u8] = if self.leading[i] { &[0] } else { &[0, 1] };
        for &c in choices {
            if !self.fits(c as usize, u, v) {
                continue;
            }
            self.adj[c as usize][u].push(v);
            self.adj[c as usize][v].push(u);
            self.colors.push(c);
            if self.extend() {
                return true;
            }
            self.colors.pop();
            self.adj[c as usize][u].pop();
            self.adj[c as usize][v].pop();
        }
        false
    }

    fn fits(&self, c: usize, u: usize, v: usize) -> bool {
        if self.adj[c][u].len() >= 2 || self.adj[c][v].len() >= 2 {
            return false;
        }
        let (end_u, len_u) = self.arm(c, u);
        if end_u == v {
            return false;
        }
        let (_, len_v) = self.arm(c, v);
        len_u + len_v < self.max_len
    }

    /// Far end and length of the color-`c` path starting at endpoint `x`.
    fn arm(&self, c: usize, x: usize) -> (usize, usize) {
        let mut prev = usize::MAX;
        let mut cur = x;
        let mut len = 0;
        while let Some(&next) = self.adj[c][cur].iter().find(|&&w| w != prev) {
            prev = cur;
            cur = next;
            len += 1;
        }
        (cur, len)
    }
}

/// Partition of a graph with maximum degree 3 into paths of at most five
/// edges, every vertex in at most two parts: one part per monochromatic path
/// of a [`path_two_coloring`].
///
/// Such a coloring always exists, so running out of colorings is reported as
/// [`SolveError::Exhausted`].
pub fn decompose_linear_forest(g: &Graph, capacity: usize) -> Result<Partition, SolveError> {
    if capacity < 5 {
        return Err(PreconditionError::GroomingTooSmall(capacity, 5).into());
    }
    if g.max_degree() > 3 {
        return Err(PreconditionError::DegreeTooLarge {
            found: g.max_degree(),
            allowed: 3,
        }
        .into());
    }
    let colors = path_two_coloring(g, 5).ok_or_else(|| {
        SolveError::Exhausted("no 2-coloring into paths of at most five edges; this contradicts a theorem".into())
    })?;
    let mut parts = Vec::new();
    for c in 0..2u8 {
        let class: Vec<_> = g
            .edges()
            .iter()
            .zip(&colors)
            .filter(|&(_, &k)| k == c)
            .map(|(e, _)| *e)
            .collect();
        let sub = Graph::new(g.n(), class.iter().map(|e| e.ends())).expect("subgraph of a simple graph");
        for comp in sub.components() {
            if comp.len() > 1 {
                let edges = class.iter().copied().filter(|e| comp.binary_search(&e.u()).is_ok());
                parts.push(EdgeSubset::new(edges));
            }
        }
    }
    Ok(Partition::new(g.clone(), capacity, parts))
}
