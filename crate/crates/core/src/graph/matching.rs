use std::collections::VecDeque;

use super::{find_bridges, Edge, Graph, Matching};
use crate::error::PreconditionError;

const NONE: usize = usize::MAX;

/// Maximum cardinality matching by Edmonds' augmenting paths with blossom
/// contraction. Returns `mate[v]` (`None` when unmatched).
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for root in 0..n {
        if mate[root] == NONE {
            augmenting_path(g, root, &mut mate);
        }
    }
    mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

/// Searches for an augmenting path from `root` and flips it in place.
/// Returns whether the matching grew.
fn augmenting_path(g: &Graph, root: usize, mate: &mut [usize]) -> bool {
    let n = g.n();
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut queue = VecDeque::from([root]);

    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if base[v] == base[w] || mate[v] == w {
                continue;
            }
            if w == root || (mate[w] != NONE && parent[mate[w]] != NONE) {
                // odd cycle: contract the blossom
                let b = lowest_common_base(v, w, &parent, &base, mate);
                let mut in_blossom = vec![false; n];
                mark_blossom(v, b, w, &mut parent, &base, mate, &mut in_blossom);
                mark_blossom(w, b, v, &mut parent, &base, mate, &mut in_blossom);
                for u in 0..n {
                    if in_blossom[base[u]] {
                        base[u] = b;
                        if !in_tree[u] {
                            in_tree[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            } else if parent[w] == NONE {
                parent[w] = v;
                if mate[w] == NONE {
                    // augment along the alternating path ending at w
                    let mut u = w;
                    while u != NONE {
                        let pu = parent[u];
                        let next = mate[pu];
                        mate[u] = pu;
                        mate[pu] = u;
                        u = next;
                    }
                    return true;
                }
                in_tree[mate[w]] = true;
                queue.push_back(mate[w]);
            }
        }
    }
    false
}

fn lowest_common_base(a: usize, b: usize, parent: &[usize], base: &[usize], mate: &[usize]) -> usize {
    let mut on_path = vec![false; parent.len()];
    let mut a = a;
    loop {
        a = base[a];
        on_path[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    let mut b = b;
    loop {
        b = base[b];
        if on_path[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_blossom(
    mut v: usize,
    b: usize,
    mut child: usize,
    parent: &mut [usize],
    base: &[usize],
    mate: &[usize],
    in_blossom: &mut [bool],
) {
    while base[v] != b {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// A perfect matching of a bridgeless cubic graph.
///
/// Such a matching always exists; the input is checked for both properties
/// and rejected otherwise.
pub fn perfect_matching_cubic(g: &Graph) -> Result<Matching, PreconditionError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(PreconditionError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(e) = find_bridges(g).first() {
        return Err(PreconditionError::HasBridge(e.u(), e.v()));
    }
    let mate = maximum_matching(g);
    if mate.iter().any(Option::is_none) {
        return Err(PreconditionError::NoPerfectMatching);
    }
    let edges = mate
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::new(v, w)));
    Matching::new(edges)
}

/// Components of `g - m` as cyclically ordered vertex lists.
///
/// Each cycle starts at its lowest vertex and first steps to the lower of that
/// vertex's two cycle neighbors. Cycles are listed by starting vertex.
pub fn remove_matching_cycles(g: &Graph, m: &Matching) -> Result<Vec<Vec<usize>>, PreconditionError> {
    for e in m.edges() {
        if !g.has_edge(e.u(), e.v()) {
            return Err(PreconditionError::ForeignEdge(e.u(), e.v()));
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| !m.covers(v)) {
        return Err(PreconditionError::NotPerfect(v));
    }
    let rest = g.without_edges(m.edges());
    let mut cycles = Vec::new();
    for comp in rest.components() {
        let start = comp[0];
        if comp.len() < 3 || comp.iter().any(|&v| rest.degree(v) != 2) {
            return Err(PreconditionError::NotACycle(start));
        }
        let mut order = Vec::with_capacity(comp.len());
        let mut prev = start;
        let mut cur = rest.neighbors(start)[0];
        order.push(start);
        while cur != start {
            order.push(cur);
            let nb = rest.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(order);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check_perfect(g: &Graph, m: &Matching) {
        assert_eq!(m.len() * 2, g.n());
        for v in 0..g.n() {
            assert!(m.covers(v));
        }
        for e in m.edges() {
            assert!(g.has_edge(e.u(), e.v()));
        }
    }

    #[test]
    fn matchings_of_named_cubic_graphs() {
        for g in [complete(4), petersen(), complete_bipartite(3, 3), prism(5)] {
            let m = perfect_matching_cubic(&g).unwrap();
            check_perfect(&g, &m);
        }
    }

    #[test]
    fn rejects_non_cubic_and_bridged() {
        assert!(matches!(
            perfect_matching_cubic(&cycle(4)),
            Err(PreconditionError::NotCubic { .. })
        ));
        let mut edges: Vec<(usize, usize)> = subdivided_k4().edges().iter().map(|e| e.ends()).collect();
        edges.extend(subdivided_k4().edges().iter().map(|e| (e.u() + 5, e.v() + 5)));
        edges.push((4, 9));
        let bridged = Graph::new(10, edges).unwrap();
        assert!(bridged.is_cubic());
        assert_eq!(
            perfect_matching_cubic(&bridged),
            Err(PreconditionError::HasBridge(4, 9))
        );
    }

    #[test]
    fn maximum_matching_needs_blossoms() {
        // a 5-cycle with a pendant: augmenting requires contracting the odd cycle
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        let mate = maximum_matching(&g);
        assert_eq!(mate.iter().filter(|m| m.is_some()).count(), 6);
        // odd path: one vertex left over
        let mate = maximum_matching(&path(5));
        assert_eq!(mate.iter().filter(|m| m.is_some()).count(), 4);
    }

    #[test]
    fn cycles_after_matching_removal() {
        let k4 = complete(4);
        let m = perfect_matching_cubic(&k4).unwrap();
        let cycles = remove_matching_cycles(&k4, &m).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 4);

        let p = petersen();
        let spokes = Matching::new((0..5).map(|i| Edge::new(i, i + 5))).unwrap();
        let cycles = remove_matching_cycles(&p, &spokes).unwrap();
        assert_eq!(cycles, vec![vec![0, 1, 2, 3, 4], vec![5, 7, 9, 6, 8]]);

        let k33 = complete_bipartite(3, 3);
        let m = perfect_matching_cubic(&k33).unwrap();
        let cycles = remove_matching_cycles(&k33, &m).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
    }

    #[test]
    fn non_cycle_components_are_rejected() {
        let g = prism(3);
        // matching that is not perfect
        let m = Matching::new([Edge::new(0, 3)]).unwrap();
        assert_eq!(remove_matching_cycles(&g, &m), Err(PreconditionError::NotPerfect(1)));
    }
}
