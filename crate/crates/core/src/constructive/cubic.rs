use crate::error::PreconditionError;
use crate::graph::{perfect_matching_cubic, remove_matching_cycles, Edge, EdgeSubset, Graph};
use crate::partition::Partition;

/// Splits a bridgeless cubic graph into `n/2` paths of three edges with every
/// vertex in exactly two of them.
///
/// Take a perfect matching, orient each remaining cycle in its listed order,
/// and give every matching edge `uv` the two cycle edges entering `u` and `v`.
pub fn decompose_bridgeless_cubic(g: &Graph) -> Result<Partition, PreconditionError> {
    let m = perfect_matching_cubic(g)?;
    let cycles = remove_matching_cycles(g, &m)?;
    let mut pred = vec![usize::MAX; g.n()];
    for cycle in &cycles {
        for (i, &v) in cycle.iter().enumerate() {
            pred[v] = cycle[(i + cycle.len() - 1) % cycle.len()];
        }
    }
    let parts = m
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.ends();
            EdgeSubset::new([Edge::new(pred[u], u), *e, Edge::new(pred[v], v)])
        })
        .collect();
    Ok(Partition::new(g.clone(), 3, parts))
}
