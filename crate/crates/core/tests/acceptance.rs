//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grooming_core::bounds::{check_monotonicity, general_lower_bound_m, MTable};
use grooming_core::constructive::{decompose_bridgeless_cubic, decompose_linear_forest};
use grooming_core::exact::{
    feasible_under_caps_with_limits, min_cost_partition, worst_case_a_with_limits, SolveLimits,
};
use grooming_core::graph::cubic::{cubic_graphs, CubicFilter};
use grooming_core::graph::enumerate::enumerate_graphs_max_degree;
use grooming_core::graph::find_bridges;
use grooming_core::harness::{
    find_m33_witness, test_conjecture_43, verify_certificate, Claim, ScanConfig, ScanOutcome, Verdict, WitnessConfig,
};
use grooming_core::partition::{verify_partition, AdmAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring_limits(n: usize) -> SolveLimits {
    SolveLimits {
        max_ring: n,
        ..SolveLimits::default()
    }
}

/// A(n, C, 2) = 2n - (C - 1) for 2 <= C <= n <= 7, exact.
fn degree2_values() -> Outcome {
    let mut wrong = Vec::new();
    let mut checked = 0;
    for n in 2..=7 {
        for c in 2..=n {
            let got = worst_case_a_with_limits(n, c, 2, &ring_limits(n))
                .map_err(|e| e.to_string())?
                .optimum;
            checked += 1;
            let want = 2 * n - (c - 1);
            if got != want {
                wrong.push(format!("(n {n}, C {c}) got {got} want {want}"));
            }
        }
    }
    if wrong.is_empty() {
        Ok(format!("{checked} instances match"))
    } else {
        Err(format!("{} of {checked} differ: {}", wrong.len(), wrong.join("; ")))
    }
}

/// Every bridgeless cubic graph with n <= 14: n/2 paths of three edges, each
/// vertex twice, cost 2n.
fn cubic_construction() -> Outcome {
    // connected bridgeless cubic graphs on 4, 6, ..., 14 vertices
    const KNOWN: [usize; 6] = [1, 2, 5, 18, 81, 480];
    let mut total = 0;
    for (i, n) in (4..=14).step_by(2).enumerate() {
        let graphs = cubic_graphs(n, CubicFilter::Bridgeless);
        if graphs.len() != KNOWN[i] {
            return Err(format!("n {n}: {} classes, expected {}", graphs.len(), KNOWN[i]));
        }
        for g in &graphs {
            let p = decompose_bridgeless_cubic(g).map_err(|e| e.to_string())?;
            let ok = verify_partition(&p, &AdmAssignment::uniform(n, 2)).is_ok()
                && p.len() == n / 2
                && p.parts().iter().all(|b| b.len() == 3)
                && p.appearances().iter().all(|&a| a == 2)
                && p.cost() == 2 * n;
            if !ok {
                return Err(format!("bad partition on n {n}: {g:?}"));
            }
        }
        total += graphs.len();
    }
    Ok(format!("{total} graphs"))
}

/// A cubic graph with a bridge that C = 3, A = 2 cannot serve; no bridgeless one.
fn m33_witness() -> Outcome {
    let cert = find_m33_witness(&WitnessConfig::new(22)).map_err(|e| e.to_string())?;
    if cert.claim != Claim::M33Witness || cert.verdict != Verdict::Verified {
        return Err(format!("no witness up to 22:\n{cert}"));
    }
    let g = cert.graph.as_ref().expect("witness graph");
    let bridges = find_bridges(g).len();
    let limits = SolveLimits::unbounded_edges();
    let feasible = feasible_under_caps_with_limits(g, 3, &AdmAssignment::uniform(g.n(), 2), &limits)
        .map_err(|e| e.to_string())?
        .is_feasible();
    let bridgeless_clean = cert
        .scans()
        .all(|e| e.count("infeasible") == Some(0) || e.count("bridgeless").is_none());
    verify_certificate(&cert, &limits).map_err(|e| e.to_string())?;
    if !g.is_cubic() || bridges == 0 || feasible || !bridgeless_clean {
        return Err(format!("witness fails re-check:\n{cert}"));
    }
    Ok(format!("n {} with {bridges} bridges", g.n()))
}

/// Path 2-colorings on every connected graph with maximum degree 3, n <= 10.
fn path_colorings() -> Outcome {
    let mut count = 0;
    let mut slowest = Duration::ZERO;
    for n in 1..=10 {
        for g in enumerate_graphs_max_degree(n, 3, true) {
            let t = Instant::now();
            let p = decompose_linear_forest(&g, 5).map_err(|e| format!("{e} on {g:?}"))?;
            slowest = slowest.max(t.elapsed());
            let ok = verify_partition(&p, &AdmAssignment::uniform(n, 2)).is_ok()
                && p.parts().iter().all(|b| b.is_path() && b.len() <= 5);
            if !ok {
                return Err(format!("bad partition on {g:?}"));
            }
            count += 1;
        }
    }
    if slowest >= Duration::from_secs(10) {
        return Err(format!("slowest graph took {slowest:?}"));
    }
    Ok(format!("{count} graphs, slowest {} ms", slowest.as_millis()))
}

/// Lower-bound closed forms and a monotone table for 1 <= C, Δ <= 8.
fn bounds_consistency() -> Outcome {
    for c in 1..=8usize {
        for d in 1..=8usize {
            // least m with 2Cm >= (C + 1)Δ
            let oracle = (0..).find(|m| 2 * c * m >= (c + 1) * d).unwrap();
            let closed = match c {
                3 => Some((2 * d).div_ceil(3)),
                4 => Some((5 * d).div_ceil(8)),
                5 => Some((3 * d).div_ceil(5)),
                _ => None,
            };
            let got = general_lower_bound_m(c, d);
            if got != oracle || closed.is_some_and(|v| v != got) {
                return Err(format!(
                    "C {c} Δ {d}: got {got}, oracle {oracle}, closed form {closed:?}"
                ));
            }
        }
    }
    let violations = check_monotonicity(&MTable::known(1..=8, 1..=8));
    if !violations.is_empty() {
        return Err(format!("{} monotonicity violations", violations.len()));
    }
    Ok("64 cells, no violations".into())
}

/// Elementary cases: Δ = 1 gives n, C = 1 gives Δn, C >= nΔ/2 gives n.
/// On n nodes the degree is at most n - 1, so Δ is read as min(Δ, n - 1).
fn elementary_cases() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for d in 1..=3usize {
            let eff = d.min(n - 1);
            let mut cases = vec![(1, eff * n)];
            if d == 1 {
                cases.extend((2..=4).map(|c| (c, n)));
            }
            let big = (n * d).div_ceil(2);
            cases.extend([(big, n), (big + 1, n)]);
            for (c, want) in cases {
                let got = worst_case_a_with_limits(n, c, d, &ring_limits(n))
                    .map_err(|e| e.to_string())?
                    .optimum;
                if got != want {
                    return Err(format!("n {n} C {c} Δ {d}: got {got} want {want}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} instances"))
}

/// Exact solver against set-partition enumeration on 200 seeded graphs.
fn solver_vs_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    for i in 0..200 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=8);
        let c = rng.gen_range(1..=4);
        let g = common::random_graph(&mut rng, n, m);
        let got = min_cost_partition(&g, c).map_err(|e| e.to_string())?.optimum;
        let want = common::brute_min_cost(&g, c, None).unwrap();
        if got != want {
            return Err(format!("graph {i} C {c}: solver {got}, oracle {want}, {g:?}"));
        }
    }
    Ok("200 graphs agree".into())
}

/// C = 4, A = 2 on every connected graph with maximum degree 3, n <= 10,
/// interrupted mid-scan and resumed from the checkpoint.
fn conjecture_scan() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("scan.checkpoint");
    let mut cfg = ScanConfig::new(10);
    cfg.checkpoint = Some(path.clone());
    cfg.resume = true;
    cfg.stop_after = Some(600);
    let first = test_conjecture_43(&cfg).map_err(|e| e.to_string())?;
    if first != (ScanOutcome::Interrupted { processed: 600 }) {
        return Err(format!("expected an interruption, got {first:?}"));
    }
    let saved = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    if !saved.contains("at n 9 ") {
        return Err(format!("checkpoint not mid-scan:\n{saved}"));
    }
    cfg.stop_after = None;
    let ScanOutcome::Finished(resumed) = test_conjecture_43(&cfg).map_err(|e| e.to_string())? else {
        return Err("resumed scan did not finish".into());
    };
    let ScanOutcome::Finished(straight) = test_conjecture_43(&ScanConfig::new(10)).map_err(|e| e.to_string())? else {
        return Err("straight scan did not finish".into());
    };
    if resumed != straight {
        return Err("resumed and uninterrupted scans differ".into());
    }
    let classes: u64 = resumed.scans().filter_map(|e| e.count("classes")).sum();
    match &resumed.verdict {
        Verdict::Verified => Ok(format!("clean scan of {classes} graphs, resumed after 600")),
        Verdict::RefutedByGraph(g) => Ok(format!("counterexample on {} vertices", g.n())),
        other => Err(format!("scan ended {other}")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("degree-2 exact values", degree2_values),
        ("bridgeless cubic construction", cubic_construction),
        ("M(3,3) witness", m33_witness),
        ("path 2-colorings", path_colorings),
        ("bounds consistency", bounds_consistency),
        ("elementary cases", elementary_cases),
        ("solver vs oracle", solver_vs_oracle),
        ("conjecture scan with resume", conjecture_scan),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
