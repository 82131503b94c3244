use crate::error::PreconditionError;
use crate::graph::{Edge, EdgeSubset, Graph};
use crate::partition::{AdmAssignment, Partition};

/// Splits a graph of maximum degree 2 into paths and cycles of at most `C`
/// edges, keeping every vertex of `singles` inside a single part.
///
/// Each component is cut at as few vertices as possible, never at a single:
/// a cycle of at most `C` edges stays whole, longer cycles and paths are cut
/// greedily at the farthest allowed vertex, trying every cycle start. Runs of
/// singles are shorter than `C`, so an allowed cut is always within reach.
pub fn decompose_degree2(g: &Graph, capacity: usize, singles: &[usize]) -> Result<Partition, PreconditionError> {
    if capacity < 2 {
        return Err(PreconditionError::GroomingTooSmall(capacity, 2));
    }
    if g.max_degree() > 2 {
        return Err(PreconditionError::DegreeTooLarge {
            found: g.max_degree(),
            allowed: 2,
        });
    }
    let mut single = vec![false; g.n()];
    for &v in singles {
        if v >= g.n() {
            return Err(PreconditionError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        single[v] = true;
    }
    let count = single.iter().filter(|&&s| s).count();
    if count > capacity - 1 {
        return Err(PreconditionError::TooManySingles {
            found: count,
            allowed: capacity - 1,
        });
    }
    let mut parts = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (walk, closed) = walk_component(g, &comp);
        let cuts = if closed {
            cycle_cuts(&walk, &single, capacity)
        } else {
            path_cuts(&walk, &single, capacity)
        };
        parts.extend(pieces(&walk, closed, &cuts));
    }
    Ok(Partition::new(g.clone(), capacity, parts))
}

/// The caps the construction respects: 1 at degree-2 singles, 2 elsewhere.
pub fn degree2_caps(g: &Graph, singles: &[usize]) -> AdmAssignment {
    let mut caps = vec![2; g.n()];
    for &v in singles {
        if v < g.n() && g.degree(v) == 2 {
            caps[v] = 1;
        }
    }
    AdmAssignment::new(caps)
}

/// Vertices of a path or cycle component in order; a path starts at its
/// lower endpoint, a cycle at its lowest vertex toward the lower neighbor.
fn walk_component(g: &Graph, comp: &[usize]) -> (Vec<usize>, bool) {
    let closed = comp.iter().all(|&v| g.degree(v) == 2);
    let start = if closed {
        comp[0]
    } else {
        *comp
            .iter()
            .find(|&&v| g.degree(v) == 1)
            .expect("a path has an endpoint")
    };
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
        match next {
            Some(w) if w != start => {
                walk.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    (walk, closed)
}

/// Positions along an open walk where a part ends, including the last.
fn path_cuts(walk: &[usize], single: &[bool], capacity: usize) -> Vec<usize> {
    let last = walk.len() - 1;
    let mut cuts = Vec::new();
    let mut at = 0;
    while at < last {
        let reach = (at + capacity).min(last);
        let next = if reach == last {
            last
        } else {
            (at + 1..=reach)
                .rev()
                .find(|&i| !single[walk[i]])
                .expect("runs of singles are shorter than C")
        };
        cuts.push(next);
        at = next;
    }
    cuts
}

/// Cut positions around a cycle, fewest first; empty when it fits whole.
fn cycle_cuts(walk: &[usize], single: &[bool], capacity: usize) -> Vec<usize> {
    let len = walk.len();
    if len <= capacity {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    for start in (0..len).filter(|&i| !single[walk[i]]) {
        let mut cuts = vec![start];
        let mut at = 0; // offset from start
        loop {
            if len - at <= capacity {
                break;
            }
            let next = (at + 1..=at + capacity)
                .rev()
                .find(|&k| !single[walk[(start + k) % len]])
                .expect("runs of singles are shorter than C");
            cuts.push((start + next) % len);
            at = next;
        }
        if best.as_ref().is_none_or(|b| cuts.len() < b.len()) {
            best = Some(cuts);
        }
    }
    best.expect("a long cycle has a vertex that is not a single")
}

fn pieces(walk: &[usize], closed: bool, cuts: &[usize]) -> Vec<EdgeSubset> {
    let len = walk.len();
    let segment = |from: usize, steps: usize| {
        EdgeSubset::new((0..steps).map(|k| {
            let a = walk[(from + k) % len];
            let b = walk[(from + k + 1) % len];
            Edge::new(a, b)
        }))
    };
    if !closed {
        let mut out = Vec::new();
        let mut at = 0;
        for &c in cuts {
            out.push(segment(at, c - at));
            at = c;
        }
        return out;
    }
    if cuts.is_empty() {
        return vec![segment(0, len)];
    }
    let mut sorted = cuts.to_vec();
    sorted.sort_unstable();
    (0..sorted.len())
        .map(|i| {
            let from = sorted[i];
            let to = sorted[(i + 1) % sorted.len()];
            let steps = (to + len - from) % len;
            segment(from, if steps == 0 { len } else { steps })
        })
        .collect()
}
