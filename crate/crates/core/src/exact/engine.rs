//! Part-at-a-time search over connected parts.
//!
//! Splitting a disconnected part into its components never changes how often
//! a vertex appears, so only connected parts are considered. At every node the
//! search picks a pivot edge and branches over the connected edge sets of at
//! most `C` available edges that contain it; each partition into connected
//! parts is reached exactly once. Vertex-disjoint pieces of the remaining
//! graph are solved independently, and solved states are memoized.

use std::collections::HashMap;
use std::time::Instant;

use crate::graph::Graph;

/// Largest edge count the bitmask representation supports.
pub const MAX_EDGES: usize = 128;
/// Largest vertex count the bitmask representation supports.
pub const MAX_VERTICES: usize = 64;

const MEMO_LIMIT: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Abort {
    Timeout,
}

#[derive(Clone)]
enum Entry {
    Solved(u32, Vec<u128>),
    /// Optimum (or feasibility) is known to need at least this cost.
    AtLeast(u32),
}

type Key = (u128, Vec<u8>);

pub(crate) struct Engine {
    capacity: usize,
    inc: Vec<u128>,
    ends: Vec<u64>,
    slack: Vec<u8>,
    capped: bool,
    /// Results of `cheapest`; `find_any` keeps its own table because its
    /// solutions are not optimal.
    memo: HashMap<Key, Entry>,
    seen: HashMap<Key, Option<Vec<u128>>>,
    pub nodes: u64,
    deadline: Option<Instant>,
}

/// Solution: total cost and the parts as edge bitmasks.
pub(crate) type Found = (u32, Vec<u128>);

impl Engine {
    /// `caps` of `None` means no per-vertex limit. Callers guarantee the size limits.
    pub fn new(g: &Graph, capacity: usize, caps: Option<&[usize]>, deadline: Option<Instant>) -> Self {
        assert!(g.edge_count() <= MAX_EDGES && g.n() <= MAX_VERTICES);
        assert!(capacity >= 1);
        let mut inc = vec![0u128; g.n()];
        let mut ends = Vec::with_capacity(g.edge_count());
        for (i, e) in g.edges().iter().enumerate() {
            inc[e.u()] |= 1 << i;
            inc[e.v()] |= 1 << i;
            ends.push((1u64 << e.u()) | (1u64 << e.v()));
        }
        let slack = match caps {
            Some(c) => c.iter().map(|&x| x.min(u8::MAX as usize) as u8).collect(),
            None => vec![u8::MAX; g.n()],
        };
        Engine {
            capacity,
            inc,
            ends,
            slack,
            capped: caps.is_some(),
            memo: HashMap::new(),
            seen: HashMap::new(),
            nodes: 0,
            deadline,
        }
    }

    pub fn all_edges(&self) -> u128 {
        if self.ends.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.ends.len()) - 1
        }
    }

    fn tick(&mut self) -> Result<(), Abort> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Abort::Timeout);
                }
            }
        }
        Ok(())
    }

    fn vertices_of(&self, mut mask: u128) -> u64 {
        let mut vs = 0u64;
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            vs |= self.ends[i];
        }
        vs
    }

    fn edges_near(&self, i: usize) -> u128 {
        let vs = self.ends[i];
        self.inc[vs.trailing_zeros() as usize] | self.inc[63 - vs.leading_zeros() as usize]
    }

    /// Vertex-disjoint pieces of `avail`, ordered by lowest edge.
    fn components(&self, avail: u128) -> Vec<u128> {
        let mut rest = avail;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u128;
                let mut f = frontier;
                while f != 0 {
                    let i = f.trailing_zeros() as usize;
                    f &= f - 1;
                    grow |= self.edges_near(i);
                }
                frontier = grow & rest & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn degree_in(&self, v: usize, avail: u128) -> u32 {
        (self.inc[v] & avail).count_ones()
    }

    /// Each vertex with `d` available edges needs at least `ceil(d / C)` more
    /// parts. Returns `None` when some vertex lacks the slack for that.
    fn lower_bound(&self, avail: u128) -> Option<u32> {
        let c = self.capacity as u32;
        let mut vs = self.vertices_of(avail);
        let mut total = 0;
        while vs != 0 {
            let v = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            let need = self.degree_in(v, avail).div_ceil(c);
            if need > self.slack[v] as u32 {
                return None;
            }
            total += need;
        }
        Some(total)
    }

    fn key(&self, avail: u128) -> Key {
        if !self.capped {
            return (avail, Vec::new());
        }
        let mut vs = self.vertices_of(avail);
        let mut slack = Vec::with_capacity(vs.count_ones() as usize);
        while vs != 0 {
            let v = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            // slack beyond the remaining degree can never bind
            slack.push(self.slack[v].min(self.degree_in(v, avail) as u8));
        }
        (avail, slack)
    }

    /// Branching edge: at the vertex with the least spare slack, else the lowest edge.
    fn pivot(&self, avail: u128) -> usize {
        if self.capped {
            let c = self.capacity as u32;
            let mut vs = self.vertices_of(avail);
            let mut best: Option<(u32, u32, usize)> = None;
            while vs != 0 {
                let v = vs.trailing_zeros() as usize;
                vs &= vs - 1;
                let d = self.degree_in(v, avail);
                let spare = self.slack[v] as u32 - d.div_ceil(c);
                let key = (spare, u32::MAX - d, v);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
            let v = best.unwrap().2;
            (self.inc[v] & avail).trailing_zeros() as usize
        } else {
            avail.trailing_zeros() as usize
        }
    }

    /// Connected edge sets inside `avail` containing `pivot`, with at most
    /// `capacity` edges, each listed once.
    fn parts_through(&self, pivot: usize, avail: u128) -> Vec<u128> {
        let mut out = Vec::new();
        let start = 1u128 << pivot;
        let ext = self.edges_near(pivot) & avail & !start;
        self.grow(start, ext, start, avail, &mut out);
        out
    }

    fn grow(&self, set: u128, mut ext: u128, mut banned: u128, avail: u128, out: &mut Vec<u128>) {
        out.push(set);
        if set.count_ones() as usize == self.capacity {
            return;
        }
        while ext != 0 {
            let f = ext & ext.wrapping_neg();
            ext &= !f;
            banned |= f;
            let i = f.trailing_zeros() as usize;
            let fresh = self.edges_near(i) & avail & !set & !banned & !ext;
            self.grow(set | f, ext | fresh, banned, avail, out);
        }
    }

    /// Can `part` be taken now without breaking a per-vertex limit?
    ///
    /// A vertex at its last allowed appearance must have every remaining
    /// edge inside this part.
    fn admissible(&self, part: u128, avail: u128) -> bool {
        if !self.capped {
            return true;
        }
        let mut vs = self.vertices_of(part);
        while vs != 0 {
            let v = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            match self.slack[v] {
                0 => return false,
                1 if self.inc[v] & avail & !part != 0 => return false,
                _ => {}
            }
        }
        true
    }

    fn take(&mut self, part: u128) -> u32 {
        let vs = self.vertices_of(part);
        let mut m = vs;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            self.slack[v] -= 1;
        }
        vs.count_ones()
    }

    fn give_back(&mut self, part: u128) {
        let mut m = self.vertices_of(part);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            self.slack[v] += 1;
        }
    }

    fn remember(&mut self, key: Key, entry: Entry) {
        if self.memo.len() >= MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert(key, entry);
    }

    fn remember_any(&mut self, key: Key, result: Option<Vec<u128>>) {
        if self.seen.len() >= MEMO_LIMIT {
            self.seen.clear();
        }
        self.seen.insert(key, result);
    }

    /// Any valid partition of `avail`.
    pub fn find_any(&mut self, avail: u128) -> Result<Option<Vec<u128>>, Abort> {
        if avail == 0 {
            return Ok(Some(Vec::new()));
        }
        let comps = self.components(avail);
        if comps.len() > 1 {
            let mut parts = Vec::new();
            for comp in comps {
                match self.find_any(comp)? {
                    Some(p) => parts.extend(p),
                    None => return Ok(None),
                }
            }
            return Ok(Some(parts));
        }
        self.tick()?;
        let key = self.key(avail);
        if let Some(known) = self.seen.get(&key) {
            return Ok(known.clone());
        }
        if self.lower_bound(avail).is_none() {
            return Ok(None);
        }
        let pivot = self.pivot(avail);
        let mut options = self.parts_through(pivot, avail);
        // big parts first: they use fewer appearances per edge
        options.sort_by_key(|p| std::cmp::Reverse(p.count_ones()));
        for part in options {
            if !self.admissible(part, avail) {
                continue;
            }
            self.take(part);
            let sub = self.find_any(avail & !part);
            self.give_back(part);
            if let Some(mut parts) = sub? {
                parts.push(part);
                self.remember_any(key, Some(parts.clone()));
                return Ok(Some(parts));
            }
        }
        self.remember_any(key, None);
        Ok(None)
    }

    /// Cheapest valid partition of `avail` with cost at most `budget`.
    pub fn cheapest(&mut self, avail: u128, budget: u32) -> Result<Option<Found>, Abort> {
        if avail == 0 {
            return Ok(Some((0, Vec::new())));
        }
        let comps = self.components(avail);
        if comps.len() > 1 {
            let mut bounds = Vec::with_capacity(comps.len());
            for &c in &comps {
                match self.lower_bound(c) {
                    Some(b) => bounds.push(b),
                    None => return Ok(None),
                }
            }
            let mut later: u32 = bounds.iter().sum();
            let mut spent = 0u32;
            let mut parts = Vec::new();
            for (i, comp) in comps.into_iter().enumerate() {
                later -= bounds[i];
                let Some(room) = budget.checked_sub(spent + later) else {
                    return Ok(None);
                };
                match self.cheapest(comp, room)? {
                    Some((cost, p)) => {
                        spent += cost;
                        parts.extend(p);
                    }
                    None => return Ok(None),
                }
            }
            return Ok(Some((spent, parts)));
        }
        self.tick()?;
        let key = self.key(avail);
        match self.memo.get(&key) {
            Some(Entry::Solved(cost, parts)) => {
                return Ok((*cost <= budget).then(|| (*cost, parts.clone())));
            }
            Some(Entry::AtLeast(lb)) if *lb > budget => return Ok(None),
            _ => {}
        }
        match self.lower_bound(avail) {
            Some(lb) if lb <= budget => {}
            _ => return Ok(None),
        }
        let pivot = self.pivot(avail);
        let options = self.parts_through(pivot, avail);
        let mut best: Option<Found> = None;
        let mut room = budget;
        for part in options {
            if !self.admissible(part, avail) {
                continue;
            }
            let rest = avail & !part;
            let here = self.take(part);
            let sub = match self.lower_bound(rest) {
                Some(lb) if here + lb <= room => self.cheapest(rest, room - here),
                _ => Ok(None),
            };
            self.give_back(part);
            if let Some((cost, mut parts)) = sub? {
                parts.push(part);
                let total = here + cost;
                best = Some((total, parts));
                if total == 0 {
                    break;
                }
                room = total - 1;
            }
        }
        match &best {
            Some((cost, parts)) => self.remember(key, Entry::Solved(*cost, parts.clone())),
            None => {
                let floor = budget.saturating_add(1);
                let prev = match self.memo.get(&key) {
                    Some(Entry::AtLeast(lb)) => *lb,
                    _ => 0,
                };
                self.remember(key, Entry::AtLeast(floor.max(prev)));
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn parts_through_counts() {
        // in a triangle, sets containing edge 0: {0}, {0,1}, {0,2}, {0,1,2}
        let g = complete(3);
        let e = Engine::new(&g, 3, None, None);
        let mut parts = e.parts_through(0, e.all_edges());
        parts.sort_unstable();
        assert_eq!(parts, vec![0b001, 0b011, 0b101, 0b111]);
        let e = Engine::new(&g, 2, None, None);
        assert_eq!(e.parts_through(0, e.all_edges()).len(), 3);
    }

    #[test]
    fn parts_are_connected_and_distinct() {
        let g = petersen();
        let e = Engine::new(&g, 4, None, None);
        let parts = e.parts_through(0, e.all_edges());
        let mut sorted = parts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), parts.len());
        for p in parts {
            assert!(p & 1 == 1 && p.count_ones() <= 4);
            assert_eq!(e.components(p).len(), 1);
        }
    }

    #[test]
    fn components_split_disjoint_pieces() {
        let g = cycle(3).disjoint_union(&path(3));
        let e = Engine::new(&g, 3, None, None);
        assert_eq!(e.components(e.all_edges()), vec![0b00111, 0b11000]);
    }

    #[test]
    fn cheapest_on_small_graphs() {
        let mut e = Engine::new(&complete(4), 3, None, None);
        let all = e.all_edges();
        assert_eq!(e.cheapest(all, u32::MAX).unwrap().unwrap().0, 7);
        let mut e = Engine::new(&cycle(6), 3, None, None);
        let all = e.all_edges();
        assert_eq!(e.cheapest(all, u32::MAX).unwrap().unwrap().0, 8);
    }

    #[test]
    fn caps_bind() {
        let caps = vec![1; 3];
        let mut e = Engine::new(&complete(3), 3, Some(&caps), None);
        let all = e.all_edges();
        assert!(e.find_any(all).unwrap().is_some());
        let mut e = Engine::new(&complete(3), 2, Some(&caps), None);
        assert!(e.find_any(all).unwrap().is_none());
    }
}
