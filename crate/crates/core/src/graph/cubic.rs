//! Generation of cubic graphs as a 2-factor plus a perfect matching.
//!
//! A cubic graph has a perfect matching `M` iff it is the union of `M` and the
//! disjoint cycles `G - M`. Generating every cycle-length partition and every
//! compatible matching therefore reaches every cubic graph that has a perfect
//! matching, which includes every bridgeless one.
//!
//! Duplicates are cut before canonical labeling: a Hamiltonian graph is only
//! kept from the single-cycle 2-factor, and there only when its chord
//! diagram is the smallest among its rotations and reflections.

use std::collections::BTreeMap;

use super::canon::canonical_form;
use super::{Edge, Graph};

/// Which generated graphs to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicFilter {
    /// Connected and bridgeless.
    Bridgeless,
    /// Connected with at least one bridge.
    Bridged,
    /// Every connected cubic graph that has a perfect matching.
    Connected,
}

/// Canonical representatives of the connected cubic graphs on `n` vertices
/// that have a perfect matching and pass `filter`, sorted by canonical code.
///
/// Odd `n` or `n < 4` give an empty list.
pub fn cubic_graphs(n: usize, filter: CubicFilter) -> Vec<Graph> {
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut found: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    for lengths in cycle_partitions(n, n, 3) {
        let factor = two_factor(&lengths);
        let tops = first_partner_choices(&lengths);
        let mut mate = vec![usize::MAX; n];
        for w in tops {
            mate[0] = w;
            mate[w] = 0;
            complete_matching(&factor, &mut mate, &mut |mate, edges| {
                if lengths.len() == 1 && !is_min_chord_diagram(mate) {
                    return;
                }
                let g = Graph::from_edge_set(n, edges);
                if !g.is_connected() || (lengths.len() > 1 && is_hamiltonian(&g)) {
                    return;
                }
                let keep = match filter {
                    CubicFilter::Bridgeless => g.is_bridgeless(),
                    CubicFilter::Bridged => !g.is_bridgeless(),
                    CubicFilter::Connected => true,
                };
                if keep {
                    let form = canonical_form(&g);
                    found.entry(form.code.clone()).or_insert_with(|| form.graph(&g));
                }
            });
            mate[0] = usize::MAX;
            mate[w] = usize::MAX;
        }
    }
    found.into_values().collect()
}

/// Non-increasing sequences of parts `>= min` summing to `n`, parts `<= max`.
fn cycle_partitions(n: usize, max: usize, min: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (min..=max.min(n)).rev() {
        for mut rest in cycle_partitions(n - first, first, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Disjoint cycles on consecutive labels.
fn two_factor(lengths: &[usize]) -> Graph {
    let n: usize = lengths.iter().sum();
    let mut edges = Vec::new();
    let mut start = 0;
    for &len in lengths {
        for i in 0..len {
            edges.push(Edge::new(start + i, start + (i + 1) % len));
        }
        start += len;
    }
    Graph::from_edge_set(n, edges)
}

/// Partners for vertex 0 up to the symmetries of the 2-factor that fix 0:
/// reflection of the first cycle, and rotations, reflections and swaps of the
/// other cycles.
fn first_partner_choices(lengths: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = (2..=lengths[0] / 2).collect();
    let mut start = lengths[0];
    let mut last_len = 0;
    for (i, &len) in lengths.iter().enumerate().skip(1) {
        if i == 1 || len != last_len {
            out.push(start);
        }
        last_len = len;
        start += len;
    }
    out
}

fn complete_matching(factor: &Graph, mate: &mut [usize], emit: &mut dyn FnMut(&[usize], Vec<Edge>)) {
    let n = factor.n();
    let Some(v) = (0..n).find(|&v| mate[v] == usize::MAX) else {
        let mut edges = factor.edges().to_vec();
        edges.extend((0..n).filter(|&v| v < mate[v]).map(|v| Edge::new(v, mate[v])));
        emit(mate, edges);
        return;
    };
    for w in v + 1..n {
        if mate[w] != usize::MAX || factor.has_edge(v, w) {
            continue;
        }
        mate[v] = w;
        mate[w] = v;
        complete_matching(factor, mate, emit);
        mate[v] = usize::MAX;
        mate[w] = usize::MAX;
    }
}

/// Is `mate` (chords of the cycle `0..n`) lexicographically smallest among
/// its images under the dihedral group?
fn is_min_chord_diagram(mate: &[usize]) -> bool {
    let n = mate.len();
    let mut image = vec![0; n];
    for shift in 0..n {
        for flip in [false, true] {
            // sigma(v) = shift + v or shift - v (mod n)
            let sigma = |v: usize| if flip { (shift + n - v) % n } else { (shift + v) % n };
            for v in 0..n {
                image[sigma(v)] = sigma(mate[v]);
            }
            if image.as_slice() < mate {
                return false;
            }
        }
    }
    true
}

/// Hamiltonian cycle test by backtracking from vertex 0.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut on_path = vec![false; n];
    on_path[0] = true;
    fn extend(g: &Graph, v: usize, len: usize, on_path: &mut [bool]) -> bool {
        if len == g.n() {
            return g.has_edge(v, 0);
        }
        for &w in g.neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                if extend(g, w, len + 1, on_path) {
                    return true;
                }
                on_path[w] = false;
            }
        }
        false
    }
    extend(g, 0, 1, &mut on_path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::canonical_code;
    use crate::graph::enumerate::enumerate_graphs_max_degree;
    use std::collections::BTreeSet;

    #[test]
    fn partitions_of_ten() {
        let parts = cycle_partitions(10, 10, 3);
        assert!(parts.contains(&vec![10]));
        assert!(parts.contains(&vec![4, 3, 3]));
        assert!(parts.iter().all(|p| p.iter().sum::<usize>() == 10));
        assert_eq!(parts.len(), 5); // 10, 7+3, 6+4, 5+5, 4+3+3
    }

    #[test]
    fn matches_generic_enumeration_up_to_eight() {
        for n in [4, 6, 8] {
            let generic: BTreeSet<Vec<u64>> = enumerate_graphs_max_degree(n, 3, true)
                .filter(|g| g.is_cubic())
                .map(|g| canonical_code(&g))
                .collect();
            let ours: BTreeSet<Vec<u64>> = cubic_graphs(n, CubicFilter::Connected)
                .iter()
                .map(canonical_code)
                .collect();
            assert_eq!(ours, generic, "n={n}");
        }
    }

    #[test]
    fn filters_split_the_connected_graphs() {
        let all = cubic_graphs(10, CubicFilter::Connected).len();
        let bridgeless = cubic_graphs(10, CubicFilter::Bridgeless);
        let bridged = cubic_graphs(10, CubicFilter::Bridged);
        assert_eq!(all, bridgeless.len() + bridged.len());
        assert!(bridgeless.iter().all(|g| g.is_bridgeless() && g.is_cubic()));
        assert!(bridged.iter().all(|g| !g.is_bridgeless()));
    }

    #[test]
    fn hamiltonicity() {
        use crate::graph::named::*;
        assert!(!is_hamiltonian(&petersen()));
        assert!(is_hamiltonian(&prism(5)));
        assert!(is_hamiltonian(&complete(4)));
        assert!(!is_hamiltonian(&path(4)));
    }

    #[test]
    fn odd_or_tiny_orders_are_empty() {
        assert!(cubic_graphs(7, CubicFilter::Connected).is_empty());
        assert!(cubic_graphs(2, CubicFilter::Connected).is_empty());
    }
}
