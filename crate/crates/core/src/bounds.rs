//! Closed-form values and bounds for `A(n, C, Δ)` and `M(C, Δ)`.
//!
//! Everything here is exact integer arithmetic.

use std::fmt;

use crate::error::SolveError;

/// The triple `(n, C, Δ)`: ring size, grooming factor, request-degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroomingInstance {
    n: usize,
    capacity: usize,
    max_degree: usize,
}

impl GroomingInstance {
    pub fn new(n: usize, capacity: usize, max_degree: usize) -> Result<Self, SolveError> {
        if n == 0 {
            return Err(SolveError::InvalidInstance("the ring needs at least one node".into()));
        }
        if capacity == 0 {
            return Err(SolveError::InvalidInstance("grooming factor must be at least 1".into()));
        }
        Ok(GroomingInstance {
            n,
            capacity,
            max_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// The degree bound a request graph on `n` nodes can actually reach.
    pub fn effective_degree(&self) -> usize {
        self.max_degree.min(self.n - 1)
    }
}

/// Where a number in a report or table cell comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// A perfect matching forces one ADM per node and one per node suffices.
    MatchingRequests,
    /// With `C = 1` every edge is its own part.
    SingleEdgeParts,
    /// All requests fit into one part.
    OnePart,
    /// Any node may carry a request.
    OnePerNode,
    /// Split the edges greedily into parts of `C`.
    GreedySplit,
    /// Regular request graphs of large girth force tree-shaped parts.
    GirthLowerBound,
    /// `M` never exceeds `Δ`.
    DegreeUpperBound,
    /// Cycles split into paths around at most `C - 1` single-ADM nodes.
    CycleSplitting,
    /// A witness cubic graph needs three ADMs somewhere.
    CubicWitness,
    /// Two-colorings of subcubic graphs into short monochromatic paths.
    PathColoring,
    /// Open case; the value is conjectured.
    Conjecture,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::MatchingRequests => "matching requests",
            Source::SingleEdgeParts => "single-edge parts",
            Source::OnePart => "one part",
            Source::OnePerNode => "one ADM per node",
            Source::GreedySplit => "greedy split",
            Source::GirthLowerBound => "girth lower bound",
            Source::DegreeUpperBound => "at most Δ",
            Source::CycleSplitting => "cycle splitting",
            Source::CubicWitness => "cubic witness",
            Source::PathColoring => "path 2-coloring",
            Source::Conjecture => "conjectured",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Bounds on `A(n, C, Δ)` for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub provenance: Vec<Source>,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `A(n, C, Δ)` when one of the elementary cases applies: `Δ = 1`, `C = 1`
/// or `C >= nΔ/2`. `Δ` is first clamped to `n - 1`; `None` also when that
/// leaves no possible request.
pub fn elementary_value(inst: &GroomingInstance) -> Option<usize> {
    elementary(inst).map(|(v, _)| v)
}

fn elementary(inst: &GroomingInstance) -> Option<(usize, Source)> {
    let d = inst.effective_degree();
    let n = inst.n;
    if d == 0 {
        None
    } else if d == 1 {
        Some((n, Source::MatchingRequests))
    } else if inst.capacity == 1 {
        Some((d * n, Source::SingleEdgeParts))
    } else if 2 * inst.capacity >= n * d {
        Some((n, Source::OnePart))
    } else {
        None
    }
}

/// `⌈(C+1)Δ / 2C⌉`.
pub fn general_lower_bound_m(capacity: usize, max_degree: usize) -> usize {
    assert!(capacity >= 1, "grooming factor must be at least 1");
    ceil_div((capacity + 1) * max_degree, 2 * capacity)
}

/// `⌈nΔ / 2C⌉ · n`.
pub fn greedy_upper_bound_a(inst: &GroomingInstance) -> usize {
    ceil_div(inst.n * inst.max_degree, 2 * inst.capacity) * inst.n
}

/// `2n - (C - 1)` for `2 <= C <= n`, `None` outside that range.
///
/// At `C = n` every request graph fits in one part and the true value is
/// `n`; the formula is returned unchanged.
pub fn degree2_exact_a(n: usize, capacity: usize) -> Option<usize> {
    (capacity >= 2 && capacity <= n).then(|| 2 * n - (capacity - 1))
}

/// Lower and upper bounds for `A(n, C, Δ)` from the closed forms above.
pub fn bound_report(inst: &GroomingInstance) -> BoundReport {
    let d = inst.effective_degree();
    let n = inst.n;
    let mut provenance = Vec::new();
    let (lower, upper);
    if d == 0 {
        (lower, upper) = (0, 0);
    } else {
        lower = n;
        provenance.push(Source::OnePerNode);
        upper = greedy_upper_bound_a(inst).min(d * n);
        provenance.push(Source::GreedySplit);
    }
    let mut exact = None;
    if let Some((v, src)) = elementary(inst) {
        exact = Some(v);
        provenance.push(src);
    } else if d == 2 {
        if let Some(v) = degree2_exact_a(n, inst.capacity) {
            exact = Some(v);
            provenance.push(Source::CycleSplitting);
        }
    }
    BoundReport {
        lower,
        upper,
        exact,
        provenance,
    }
}

/// A table cell: exact, or an interval with an optional conjectured value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MValue {
    Exact(usize),
    Interval {
        lo: usize,
        hi: usize,
        conjectured: Option<usize>,
    },
}

impl MValue {
    pub fn lo(self) -> usize {
        match self {
            MValue::Exact(v) => v,
            MValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(self) -> usize {
        match self {
            MValue::Exact(v) => v,
            MValue::Interval { hi, .. } => hi,
        }
    }
}

/// One cell of the `M(C, Δ)` table with the source of its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MEntry {
    pub capacity: usize,
    pub max_degree: usize,
    pub value: MValue,
    pub source: Source,
}

/// The published table of `M(C, Δ)`, as data.
pub fn known_m(capacity: usize, max_degree: usize) -> MEntry {
    assert!(capacity >= 1 && max_degree >= 1, "C and Δ must be at least 1");
    let (c, d) = (capacity, max_degree);
    let (value, source) = if d == 1 {
        (MValue::Exact(1), Source::MatchingRequests)
    } else if c == 1 {
        (MValue::Exact(d), Source::SingleEdgeParts)
    } else if c == 2 {
        (MValue::Exact(d), Source::DegreeUpperBound)
    } else if d == 2 {
        (MValue::Exact(2), Source::CycleSplitting)
    } else if d == 3 && c == 3 {
        (MValue::Exact(3), Source::CubicWitness)
    } else if d == 3 && c >= 5 {
        (MValue::Exact(2), Source::PathColoring)
    } else if d == 3 && c == 4 {
        let value = MValue::Interval {
            lo: 2,
            hi: 3,
            conjectured: Some(2),
        };
        (value, Source::Conjecture)
    } else {
        let value = MValue::Interval {
            lo: general_lower_bound_m(c, d),
            hi: d,
            conjectured: None,
        };
        (value, Source::GirthLowerBound)
    };
    MEntry {
        capacity,
        max_degree,
        value,
        source,
    }
}

/// `M(C, Δ)` values over rectangular ranges, indexed `[C - c0][Δ - d0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTable {
    pub capacities: std::ops::RangeInclusive<usize>,
    pub degrees: std::ops::RangeInclusive<usize>,
    pub cells: Vec<Vec<MValue>>,
}

impl MTable {
    pub fn known(capacities: std::ops::RangeInclusive<usize>, degrees: std::ops::RangeInclusive<usize>) -> Self {
        let cells = capacities
            .clone()
            .map(|c| degrees.clone().map(|d| known_m(c, d).value).collect())
            .collect();
        MTable {
            capacities,
            degrees,
            cells,
        }
    }

    pub fn get(&self, capacity: usize, max_degree: usize) -> Option<MValue> {
        let i = capacity.checked_sub(*self.capacities.start())?;
        let j = max_degree.checked_sub(*self.degrees.start())?;
        self.cells.get(i)?.get(j).copied()
    }

    pub fn set(&mut self, capacity: usize, max_degree: usize, value: MValue) {
        let i = capacity - self.capacities.start();
        let j = max_degree - self.degrees.start();
        self.cells[i][j] = value;
    }
}

/// A pair of cells that cannot both be right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotonicityViolation {
    /// `M(C+1, Δ)` is certainly above `M(C, Δ)`.
    IncreasesInC { capacity: usize, max_degree: usize },
    /// `M(C, Δ+1)` is certainly below `M(C, Δ)`.
    DecreasesInDelta { capacity: usize, max_degree: usize },
    /// `C > Δ` but `M(C+1, Δ)` is certainly below `M(C, Δ) - 1`.
    DropsByMoreThanOne { capacity: usize, max_degree: usize },
}

impl fmt::Display for MonotonicityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MonotonicityViolation::IncreasesInC {
                capacity: c,
                max_degree: d,
            } => {
                write!(f, "M({}, {d}) exceeds M({c}, {d})", c + 1)
            }
            MonotonicityViolation::DecreasesInDelta {
                capacity: c,
                max_degree: d,
            } => {
                write!(f, "M({c}, {}) is below M({c}, {d})", d + 1)
            }
            MonotonicityViolation::DropsByMoreThanOne {
                capacity: c,
                max_degree: d,
            } => {
                write!(f, "M({}, {d}) drops more than one below M({c}, {d})", c + 1)
            }
        }
    }
}

/// Checks that `M` is non-increasing in `C`, non-decreasing in `Δ`, and
/// drops by at most one per unit of `C` once `C > Δ`. Interval cells only
/// count as a violation when no choice inside the intervals is consistent.
pub fn check_monotonicity(table: &MTable) -> Vec<MonotonicityViolation> {
    let mut out = Vec::new();
    for c in table.capacities.clone() {
        for d in table.degrees.clone() {
            let here = table.get(c, d).expect("in range");
            if let Some(next) = table.get(c + 1, d) {
                if next.lo() > here.hi() {
                    out.push(MonotonicityViolation::IncreasesInC {
                        capacity: c,
                        max_degree: d,
                    });
                }
                if c > d && next.hi() + 1 < here.lo() {
                    out.push(MonotonicityViolation::DropsByMoreThanOne {
                        capacity: c,
                        max_degree: d,
                    });
                }
            }
            if let Some(next) = table.get(c, d + 1) {
                if next.hi() < here.lo() {
                    out.push(MonotonicityViolation::DecreasesInDelta {
                        capacity: c,
                        max_degree: d,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, c: usize, d: usize) -> GroomingInstance {
        GroomingInstance::new(n, c, d).unwrap()
    }

    #[test]
    fn elementary_cases() {
        assert_eq!(elementary_value(&inst(7, 5, 1)), Some(7));
        assert_eq!(elementary_value(&inst(6, 1, 3)), Some(18));
        assert_eq!(elementary_value(&inst(4, 6, 3)), Some(4));
        assert_eq!(elementary_value(&inst(8, 3, 3)), None);
        assert_eq!(elementary_value(&inst(1, 1, 4)), None);
        // Δ clamps to n - 1: on 3 nodes the worst request graph is a triangle
        assert_eq!(elementary_value(&inst(3, 1, 5)), Some(6));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(general_lower_bound_m(3, 4), 3);
        assert_eq!(general_lower_bound_m(5, 5), 3);
        assert_eq!(general_lower_bound_m(4, 8), 5);
        assert_eq!(general_lower_bound_m(1, 7), 7);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_upper_bound_a(&inst(4, 6, 3)), 4);
        assert_eq!(greedy_upper_bound_a(&inst(10, 3, 3)), 50);
        assert_eq!(greedy_upper_bound_a(&inst(1, 1, 0)), 0);
    }

    #[test]
    fn degree_two_formula() {
        assert_eq!(degree2_exact_a(8, 3), Some(14));
        assert_eq!(degree2_exact_a(5, 2), Some(9));
        assert_eq!(degree2_exact_a(6, 3), Some(10));
        assert_eq!(degree2_exact_a(3, 4), None);
        assert_eq!(degree2_exact_a(3, 1), None);
    }

    #[test]
    fn table_cells() {
        assert_eq!(known_m(3, 3).value, MValue::Exact(3));
        assert_eq!(known_m(7, 3).value, MValue::Exact(2));
        assert_eq!(
            known_m(4, 3).value,
            MValue::Interval {
                lo: 2,
                hi: 3,
                conjectured: Some(2)
            }
        );
        assert_eq!(known_m(2, 6).value, MValue::Exact(6));
        assert_eq!(known_m(9, 1).value, MValue::Exact(1));
        assert_eq!(known_m(5, 6).value.lo(), 4);
    }

    #[test]
    fn published_table_is_monotone() {
        let t = MTable::known(1..=8, 1..=8);
        assert_eq!(check_monotonicity(&t), vec![]);
        let row = MTable::known(3..=6, 3..=3);
        assert_eq!(check_monotonicity(&row), vec![]);
    }

    #[test]
    fn artificial_drop_is_flagged() {
        let mut t = MTable::known(4..=5, 3..=3);
        t.set(4, 3, MValue::Exact(3));
        t.set(5, 3, MValue::Exact(1));
        assert_eq!(
            check_monotonicity(&t),
            vec![MonotonicityViolation::DropsByMoreThanOne {
                capacity: 4,
                max_degree: 3
            }]
        );
        // the same drop with C <= Δ is not constrained
        let mut t = MTable::known(3..=4, 3..=3);
        t.set(3, 3, MValue::Exact(3));
        t.set(4, 3, MValue::Exact(1));
        assert_eq!(check_monotonicity(&t), vec![]);
    }

    #[test]
    fn constant_row() {
        let mut t = MTable::known(1..=4, 2..=2);
        for c in 1..=4 {
            t.set(c, 2, MValue::Exact(2));
        }
        assert!(check_monotonicity(&t).is_empty());
        let mut t = MTable::known(3..=3, 1..=3);
        t.set(3, 2, MValue::Exact(4));
        assert_eq!(
            check_monotonicity(&t),
            vec![MonotonicityViolation::DecreasesInDelta {
                capacity: 3,
                max_degree: 2
            }]
        );
    }

    #[test]
    fn reports_are_ordered() {
        for n in 1..=9 {
            for c in 1..=8 {
                for d in 0..=5 {
                    let r = bound_report(&inst(n, c, d));
                    assert!(r.lower <= r.upper, "{n} {c} {d}: {r:?}");
                    if let Some(x) = r.exact {
                        assert!(r.lower <= x && x <= r.upper);
                    }
                }
            }
        }
        assert!(GroomingInstance::new(0, 1, 1).is_err());
        assert!(GroomingInstance::new(1, 0, 1).is_err());
    }
}
