use grooming_core::exact::{feasible_under_caps_with_limits, SolveLimits};
use grooming_core::graph::named::{subdivided_k33, subdivided_k4};
use grooming_core::harness::{
    bridge_join, check_degree2_tightness, join_pieces, parse_certificate, piece_mu, verify_certificate, Claim,
    Evidence, Piece, Verdict,
};
use grooming_core::partition::AdmAssignment;

fn piece(graph: grooming_core::graph::Graph, root: usize) -> Piece {
    let mu = piece_mu(&graph, root, &SolveLimits::unbounded_edges()).unwrap();
    Piece { graph, root, mu }
}

#[test]
fn bridged_pieces_with_large_demand_are_infeasible() {
    let limits = SolveLimits::unbounded_edges();
    let s = piece(subdivided_k33(), 6);
    let (j, root) = join_pieces(&s, &s);
    let joined = piece(j, root);
    assert_eq!((s.mu, joined.mu), (1, 2));
    let g = bridge_join(&s, &joined);
    assert_eq!(g.n(), 22);
    assert!(g.is_cubic() && !g.is_bridgeless());
    let f = feasible_under_caps_with_limits(&g, 3, &AdmAssignment::uniform(22, 2), &limits).unwrap();
    assert!(!f.is_feasible());

    // a low-demand side makes the same shape feasible
    let k = piece(subdivided_k4(), 4);
    assert_eq!(k.mu, 0);
    let h = bridge_join(&k, &joined);
    let f = feasible_under_caps_with_limits(&h, 3, &AdmAssignment::uniform(h.n(), 2), &limits).unwrap();
    assert!(f.is_feasible());
}

#[test]
fn certificates_survive_text() {
    let limits = SolveLimits::default();
    for (n, c) in [(5, 2), (6, 4), (5, 5)] {
        let cert = check_degree2_tightness(n, c, &limits).unwrap();
        let back = parse_certificate(&cert.to_string()).unwrap();
        assert_eq!(back, cert);
        verify_certificate(&back, &limits).unwrap();
        assert_eq!(back.claim, Claim::Degree2Tight { n, capacity: c });
    }
}

#[test]
fn forged_refutation_is_caught() {
    let limits = SolveLimits::default();
    let mut cert = check_degree2_tightness(5, 3, &limits).unwrap();
    assert_eq!(cert.verdict, Verdict::Verified);
    // swap in a graph that the assignment does serve
    for e in &mut cert.evidence {
        if let Evidence::Refuted { graph, .. } = e {
            *graph = grooming_core::graph::named::path(5);
        }
    }
    assert!(verify_certificate(&cert, &limits).is_err());
}
