use grooming_core::constructive::{
    decompose_bridgeless_cubic, decompose_degree2, decompose_linear_forest, degree2_caps, path_two_coloring,
};
use grooming_core::exact::{feasible_under_caps, min_cost_under_caps, SolveLimits};
use grooming_core::graph::cubic::{cubic_graphs, CubicFilter};
use grooming_core::graph::enumerate::enumerate_graphs_max_degree;
use grooming_core::graph::named::{complete, complete_bipartite, petersen};
use grooming_core::graph::Graph;
use grooming_core::partition::{verify_partition, AdmAssignment};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn two_regular(n: usize) -> Vec<Graph> {
    enumerate_graphs_max_degree(n, 2, false)
        .filter(|g| g.is_regular(2))
        .collect()
}

#[test]
fn degree2_cost_is_optimal_under_its_caps() {
    let limits = SolveLimits::default();
    let mut checked = 0;
    for n in 3..=9 {
        for g in two_regular(n) {
            for c in 2..=4 {
                for singles in subsets(n, c - 1) {
                    let caps = degree2_caps(&g, &singles);
                    let best = min_cost_under_caps(&g, c, &caps, &limits).unwrap();
                    match decompose_degree2(&g, c, &singles) {
                        Ok(p) => {
                            assert_eq!(verify_partition(&p, &caps), Ok(()));
                            assert_eq!(
                                Some(p.cost()),
                                best.map(|b| b.optimum),
                                "{g:?} C {c} singles {singles:?}"
                            );
                        }
                        Err(_) => assert!(best.is_none(), "{g:?} C {c} singles {singles:?}"),
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn degree2_meets_the_ring_formula() {
    // C - 1 singles on one cycle keep the cost within 2n - (C - 1)
    for n in 4..=9 {
        let g = grooming_core::graph::named::cycle(n);
        for c in 2..n {
            let singles: Vec<usize> = (0..c - 1).collect();
            let p = decompose_degree2(&g, c, &singles).unwrap();
            assert_eq!(degree2_caps(&g, &singles).total(), 2 * n - (c - 1));
            assert_eq!(verify_partition(&p, &degree2_caps(&g, &singles)), Ok(()));
            assert!(p.cost() <= 2 * n - (c - 1));
        }
    }
}

#[test]
fn cubic_construction_on_all_bridgeless_graphs() {
    for n in (4..=12).step_by(2) {
        for g in cubic_graphs(n, CubicFilter::Bridgeless) {
            let p = decompose_bridgeless_cubic(&g).unwrap();
            assert_eq!(verify_partition(&p, &AdmAssignment::uniform(n, 2)), Ok(()));
            assert_eq!(p.len(), n / 2);
            assert!(p.appearances().iter().all(|&a| a == 2));
        }
    }
}

#[test]
fn path_colorings_on_small_graphs() {
    for n in 1..=7 {
        for g in enumerate_graphs_max_degree(n, 3, true) {
            let p = decompose_linear_forest(&g, 5).unwrap();
            assert_eq!(verify_partition(&p, &AdmAssignment::uniform(n, 2)), Ok(()));
            assert!(p.parts().iter().all(|b| b.is_path() && b.len() <= 5));
        }
    }
    // paths of four edges are not always enough, yet four-edge parts of any shape are
    let k33 = complete_bipartite(3, 3);
    assert!(path_two_coloring(&k33, 4).is_none());
    assert!(feasible_under_caps(&k33, 4, &AdmAssignment::uniform(6, 2))
        .unwrap()
        .is_feasible());
    assert!(path_two_coloring(&complete(4), 3).is_some());
    assert!(path_two_coloring(&petersen(), 5).is_some());
}
