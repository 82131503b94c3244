use super::{Edge, Graph};

/// Edges lying on no cycle, found with an iterative lowlink DFS.
///
/// The result is sorted; the graph is bridgeless iff it is empty.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut slot)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*slot) {
                *slot += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(Edge::new(parent, v));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn tree_edges_are_bridges() {
        assert_eq!(find_bridges(&path(3)), vec![Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn cycle_has_none() {
        assert!(find_bridges(&cycle(4)).is_empty());
        assert!(find_bridges(&petersen()).is_empty());
    }

    #[test]
    fn joined_triangles() {
        assert_eq!(find_bridges(&two_triangles_bridged()), vec![Edge::new(2, 3)]);
    }

    #[test]
    fn isolated_vertices_and_forests() {
        let g = Graph::new(6, [(0, 1), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(find_bridges(&g), vec![Edge::new(0, 1)]);
    }
}
