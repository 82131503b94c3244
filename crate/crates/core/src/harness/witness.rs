//! Search for a cubic graph that needs three ADMs at some node with `C = 3`.
//!
//! Two passes per even order `n`:
//!
//! * exhaustive: every connected cubic graph with a perfect matching (every
//!   connected cubic graph below 16 vertices) goes to the solver;
//! * composed: graphs `P - Q` made of two rooted pieces joined by a bridge.
//!
//! A rooted piece is a connected graph whose root has degree 2 and every
//! other vertex degree 3. In `P - Q` the part holding the bridge takes `i`
//! edges of `P` and `j` of `Q` with `i + j <= 2`, and every other part lies on
//! one side. So `P - Q` is feasible iff `mu(P) + mu(Q) <= 2`, where `mu(P)` is
//! the fewest edges of `P` the bridge's part must take. `mu` is computed by the
//! solver on `P` plus a pendant path that pins how many edges the bridge's
//! part has left. Every composed witness is still confirmed by a direct solve.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::certificate::{Certificate, Claim, Evidence, Verdict};
use crate::error::SolveError;
use crate::exact::{feasible_under_caps_with_limits, SolveLimits};
use crate::graph::canon::{canonical_form, canonical_form_colored};
use crate::graph::cubic::{cubic_graphs, CubicFilter};
use crate::graph::{find_bridges, Graph};
use crate::partition::AdmAssignment;

/// Search ranges for [`find_m33_witness`].
#[derive(Debug, Clone)]
pub struct WitnessConfig {
    pub max_n: usize,
    /// Largest order scanned exhaustively.
    pub exhaustive_up_to: usize,
    /// Largest piece order used in the composed pass.
    pub piece_order_limit: usize,
    pub limits: SolveLimits,
}

impl WitnessConfig {
    pub fn new(max_n: usize) -> Self {
        WitnessConfig {
            max_n,
            exhaustive_up_to: 14,
            piece_order_limit: 15,
            limits: SolveLimits::unbounded_edges(),
        }
    }
}

const C: usize = 3;
const ADMS: usize = 2;

/// A rooted piece with its `mu` value (3 when even two edges do not help).
#[derive(Debug, Clone)]
pub struct Piece {
    pub graph: Graph,
    pub root: usize,
    pub mu: u8,
}

/// Scans orders `4, 6, ..., max_n` and returns the first graph the solver
/// cannot partition, or a certificate that none was found.
pub fn find_m33_witness(config: &WitnessConfig) -> Result<Certificate, SolveError> {
    let mut evidence = Vec::new();
    let mut cubic: HashMap<usize, Vec<Graph>> = HashMap::new();
    let piece_limit = config.piece_order_limit.min(config.max_n.saturating_sub(5));
    let mut library: Option<Vec<Vec<Piece>>> = None;
    for n in (4..=config.max_n).step_by(2) {
        if n <= config.exhaustive_up_to {
            let graphs = cubic
                .entry(n)
                .or_insert_with(|| cubic_graphs(n, CubicFilter::Connected));
            let (found, line) = exhaustive_pass(n, graphs, &config.limits)?;
            evidence.push(line);
            if let Some(g) = found {
                return finish(g, evidence, &config.limits);
            }
        }
        if n >= 10 && n <= 2 * piece_limit {
            if library.is_none() {
                library = Some(piece_library(piece_limit, &mut cubic, &config.limits)?);
            }
            let lib = library.as_ref().expect("built above");
            let (found, line) = composed_pass(n, lib, piece_limit);
            evidence.push(line);
            if let Some(g) = found {
                return finish(g, evidence, &config.limits);
            }
        }
    }
    Ok(Certificate {
        claim: Claim::M33NoneUpTo(config.max_n),
        graph: None,
        evidence,
        verdict: Verdict::Verified,
    })
}

fn feasible(g: &Graph, caps: &AdmAssignment, limits: &SolveLimits) -> Result<(bool, u64), SolveError> {
    let f = feasible_under_caps_with_limits(g, C, caps, limits)?;
    Ok((f.is_feasible(), f.nodes_explored))
}

fn exhaustive_pass(n: usize, graphs: &[Graph], limits: &SolveLimits) -> Result<(Option<Graph>, Evidence), SolveError> {
    let caps = AdmAssignment::uniform(n, ADMS);
    let verdicts: Vec<bool> = graphs
        .par_iter()
        .map(|g| feasible(g, &caps, limits).map(|(ok, _)| ok))
        .collect::<Result<_, _>>()?;
    let bridgeless = graphs.iter().filter(|g| g.is_bridgeless()).count() as u64;
    let mut infeasible = 0;
    let mut first = None;
    for (g, &ok) in graphs.iter().zip(&verdicts) {
        if !ok {
            if g.is_bridgeless() {
                return Err(SolveError::Exhausted(format!(
                    "bridgeless cubic graph on {n} vertices has no partition with two appearances per vertex"
                )));
            }
            infeasible += 1;
            first.get_or_insert_with(|| g.clone());
        }
    }
    let line = Evidence::scan(
        n,
        "exhaustive",
        &[
            ("classes", graphs.len() as u64),
            ("bridgeless", bridgeless),
            ("infeasible", infeasible),
        ],
    );
    Ok((first, line))
}

fn composed_pass(n: usize, lib: &[Vec<Piece>], limit: usize) -> (Option<Graph>, Evidence) {
    let mut pairs = 0u64;
    let mut found = None;
    'outer: for a in (5..=n / 2).filter(|a| a % 2 == 1) {
        let b = n - a;
        if b > limit {
            continue;
        }
        for (i, p) in lib[a].iter().enumerate() {
            let start = if a == b { i } else { 0 };
            for q in &lib[b][start..] {
                pairs += 1;
                if p.mu + q.mu >= 3 {
                    found = Some(bridge_join(p, q));
                    break 'outer;
                }
            }
        }
    }
    let infeasible = u64::from(found.is_some());
    let line = Evidence::scan(n, "composed", &[("pairs", pairs), ("infeasible", infeasible)]);
    (found, line)
}

fn finish(g: Graph, mut evidence: Vec<Evidence>, limits: &SolveLimits) -> Result<Certificate, SolveError> {
    let g = canonical_form(&g).graph(&g);
    let (ok, nodes) = feasible(&g, &AdmAssignment::uniform(g.n(), ADMS), limits)?;
    if ok {
        return Err(SolveError::InvalidInstance(
            "composed graph predicted infeasible but the solver partitioned it".into(),
        ));
    }
    evidence.insert(
        0,
        Evidence::Infeasible {
            capacity: C,
            adms: ADMS,
            nodes,
        },
    );
    evidence.insert(1, Evidence::Bridges(find_bridges(&g).len()));
    Ok(Certificate {
        claim: Claim::M33Witness,
        graph: Some(g),
        evidence,
        verdict: Verdict::Verified,
    })
}

/// `P` and `Q` with their roots joined by an edge.
pub fn bridge_join(p: &Piece, q: &Piece) -> Graph {
    let off = p.graph.n();
    p.graph.disjoint_union(&q.graph).with_edges(&[(p.root, off + q.root)])
}

/// A new root adjacent to the roots of `p` and `q`.
pub fn join_pieces(p: &Piece, q: &Piece) -> (Graph, usize) {
    let off = p.graph.n();
    let root = off + q.graph.n();
    let g = p
        .graph
        .disjoint_union(&q.graph)
        .disjoint_union(&Graph::empty(1).expect("one vertex"))
        .with_edges(&[(p.root, root), (off + q.root, root)]);
    (g, root)
}

/// `h` with edge `(x, y)` subdivided by a new root.
fn subdivide(h: &Graph, x: usize, y: usize) -> (Graph, usize) {
    let root = h.n();
    let g = h
        .without_edges(&[crate::graph::Edge::new(x, y)])
        .disjoint_union(&Graph::empty(1).expect("one vertex"))
        .with_edges(&[(x, root), (y, root)]);
    (g, root)
}

/// Fewest edges of the piece that the bridge's part must take, via the
/// solver on the piece plus a pendant path of `2 - i` single-ADM vertices.
pub fn piece_mu(graph: &Graph, root: usize, limits: &SolveLimits) -> Result<u8, SolveError> {
    for i in 0..=2usize {
        let tail = 2 - i; // gadget edges besides the bridge
        let p = graph.n();
        let mut extra = vec![(root, p)];
        extra.extend((0..tail).map(|k| (p + k, p + k + 1)));
        let g = graph
            .disjoint_union(&Graph::empty(tail + 1).expect("nonempty"))
            .with_edges(&extra);
        let mut caps = vec![ADMS; p];
        caps.extend(std::iter::repeat_n(1, tail + 1));
        if feasible(&g, &AdmAssignment::new(caps), limits)?.0 {
            return Ok(i as u8);
        }
    }
    Ok(3)
}

/// Rooted pieces by order (odd, `5..=limit`), deduplicated up to
/// root-preserving isomorphism and sorted by canonical code: subdivided edges
/// of connected cubic graphs, and joins of two smaller pieces.
pub fn piece_library(
    limit: usize,
    cubic: &mut HashMap<usize, Vec<Graph>>,
    limits: &SolveLimits,
) -> Result<Vec<Vec<Piece>>, SolveError> {
    let mut lib: Vec<Vec<Piece>> = vec![Vec::new(); limit + 1];
    for k in (5..=limit).step_by(2) {
        let mut found: BTreeMap<Vec<u64>, (Graph, usize)> = BTreeMap::new();
        let mut add = |g: Graph, root: usize| {
            let mut colors = vec![0; g.n()];
            colors[root] = 1;
            let form = canonical_form_colored(&g, &colors);
            found
                .entry(form.code.clone())
                .or_insert_with(|| (form.graph(&g), form.labeling[root]));
        };
        let hosts = cubic
            .entry(k - 1)
            .or_insert_with(|| cubic_graphs(k - 1, CubicFilter::Connected));
        for h in hosts.iter() {
            for e in h.edges() {
                let (g, root) = subdivide(h, e.u(), e.v());
                add(g, root);
            }
        }
        for a in (5..k).step_by(2) {
            let b = k - 1 - a;
            if b < a || b < 5 {
                continue;
            }
            for (i, p) in lib[a].iter().enumerate() {
                let start = if a == b { i } else { 0 };
                for q in &lib[b][start..] {
                    let (g, root) = join_pieces(p, q);
                    add(g, root);
                }
            }
        }
        let entries: Vec<(Graph, usize)> = found.into_values().collect();
        let mus: Vec<u8> = entries
            .par_iter()
            .map(|(g, r)| piece_mu(g, *r, limits))
            .collect::<Result<_, _>>()?;
        lib[k] = entries
            .into_iter()
            .zip(mus)
            .map(|((graph, root), mu)| Piece { graph, root, mu })
            .collect();
    }
    Ok(lib)
}
