//! Acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;
use serde_json::{json, Value};

use polycut::formats::complex_from_json;
use polycut::verify::{
    cut_bound, cut_corpus, verify_balanced_partitions, verify_cut_equivalence, verify_cyclic_oracle, verify_lbt,
    verify_plane, verify_side_bound, verify_vertex_figure, verify_waist, PlaneForm, VerificationReport,
};

const SEED: u64 = 1;

fn line(criterion: &str, ok: bool, started: Instant, detail: String) -> bool {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {criterion}: {detail} ({:.1?})", started.elapsed());
    ok
}

fn computed(r: &VerificationReport, key: &str) -> Value {
    r.computed.get(key).cloned().unwrap_or(Value::Null)
}

#[test]
fn criterion_1_tight_construction() {
    let started = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (d, expected) in [(4, 10), (5, 15), (6, 21), (7, 28), (8, 36)] {
        assert_eq!(cut_bound(d), expected);
        let r = verify_waist(d).unwrap();
        let values = ["min_degree", "certificate_cut", "min_nontrivial_cut"].map(|k| computed(&r, k));
        ok &= r.passed && values.iter().all(|v| *v == json!(expected));
        ok &= computed(&r, "certificate_trivial") == json!(false);
        seen.push(format!("d={d}: {}", values.iter().join("/")));
    }
    assert!(line("1", ok, started, format!("δ/certificate/nontrivial = {}", seen.join(", "))));
}

#[test]
fn criterion_2_plane_triangulations_minimum_cuts() {
    let started = Instant::now();
    let r = verify_plane(200, 40, SEED, PlaneForm::MinimumCuts).unwrap();
    let ok = r.passed && r.instances == 200;
    assert!(line(
        "2 (minimum cuts)",
        ok,
        started,
        format!(
            "{} triangulations, 5 <= v <= 40: global min cut = δ <= 5 and no nontrivial cut is minimum; {} failures",
            r.instances,
            r.failures.len()
        ),
    ));
}

/// Criterion 2 as worded also demands that every nontrivial cut, minimum
/// or not, has at least six edges. That reading is false for plane
/// triangulations (the triangular bipyramid has one of five edges), so this
/// prints FAIL. The assertions check that the failure is genuine: each
/// witness is re-loaded and its cut recounted independently.
#[test]
fn criterion_2_plane_triangulations_as_worded() {
    let started = Instant::now();
    let r = verify_plane(200, 40, SEED, PlaneForm::AllNontrivialCuts).unwrap();
    let first = r.failures.first().map(|f| format!("{}: {}", f.instance, f.reason)).unwrap_or_default();
    line(
        "2 (as worded)",
        r.passed,
        started,
        format!(
            "{} of {} triangulations have a nontrivial cut below 6 edges, smallest {:?}; first: {first}",
            r.failures.len(),
            r.instances,
            r.min_observed
        ),
    );

    for failure in &r.failures {
        let witness = &failure.witness;
        let c = complex_from_json(&witness["complex"].to_string()).unwrap();
        let side: BTreeSet<usize> = serde_json::from_value(witness["side"].clone()).unwrap();
        let n = c.vertex_count();
        assert!(side.len() >= 2 && n - side.len() >= 2);
        let edges: BTreeSet<(usize, usize)> = c
            .facets()
            .flat_map(|f| f.vertices().iter().copied().tuple_combinations::<(_, _)>().collect::<Vec<_>>())
            .collect();
        let crossing = edges.iter().filter(|(u, v)| side.contains(u) != side.contains(v)).count();
        assert!(crossing < 6, "{}", failure.instance);
        assert_eq!(edges.len(), 3 * n - 6);
    }
    // The v = 5 counterexample, checked by hand: apex 4 (degree 3) with
    // equator vertex 0 (degree 4) sends 3 + 4 - 2 = 5 edges across.
    let bipyramid = polycut::generators::random_plane_triangulation(5, 0, 0).unwrap().complex;
    let g = bipyramid.skeleton_graph().unwrap();
    assert_eq!(polycut::cuts::crossing_edges(&g, &[0, 4]).unwrap().size, 5);
}

#[test]
fn criterion_3_lbt_equality() {
    let started = Instant::now();
    let r = verify_lbt(3..=8, 30, 5, SEED).unwrap();
    let expected: usize = (3..=8).map(|d| (30 - d) * 5).sum();
    let ok = r.passed && computed(&r, "stacked_instances") == json!(expected) && r.min_observed == Some(0);
    assert!(line(
        "3",
        ok,
        started,
        format!(
            "{} stacked polytopes (3 <= d <= 8, n <= 30, 5 seeds) with f1 = dn - C(d+1,2); {} failures",
            computed(&r, "stacked_instances"),
            r.failures.len()
        ),
    ));
}

#[test]
fn criterion_4_balanced_partitions() {
    let started = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (d, expected) in [(3, 6), (4, 10)] {
        let r = verify_balanced_partitions(d).unwrap();
        ok &= r.passed;
        ok &= computed(&r, "ladder_min") == json!(expected);
        ok &= computed(&r, "ladder_canonical") == json!(expected);
        ok &= r.min_observed == Some(expected as u64);
        seen.push(format!(
            "d={d}: ladder min {} (canonical {}), cyclic min {}",
            computed(&r, "ladder_min"),
            computed(&r, "ladder_canonical"),
            computed(&r, "cyclic_min")
        ));
    }
    assert!(line("4", ok, started, seen.join("; ")));
}

#[test]
fn criterion_5_oracle_equivalence() {
    let started = Instant::now();
    let r = verify_cyclic_oracle(2..=5, 9).unwrap();
    let expected: usize = (2..=5).map(|d| 9 - d).sum();
    let ok = r.passed && r.instances == expected;
    assert!(line(
        "5",
        ok,
        started,
        format!("{} cyclic polytopes (2 <= d <= 5, n <= 9) equal their moment-curve hulls", r.instances),
    ));
}

#[test]
fn criterion_6_vertex_figure_lemma() {
    let started = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (d, n) in [(3, 8), (4, 9)] {
        let r = verify_vertex_figure(100, d, n, SEED, 1000).unwrap();
        ok &= r.passed && r.instances + r.skipped == 100;
        seen.push(format!(
            "(d={d}, n={n}): {} configurations, {} skipped, {} deletions, {} new edges, {} violations",
            r.instances,
            r.skipped,
            computed(&r, "deletions"),
            computed(&r, "new_edges"),
            r.failures.len()
        ));
    }
    assert!(line("6", ok, started, seen.join("; ")));
}

#[test]
fn criterion_7_cut_algorithm_equivalence() {
    let started = Instant::now();
    let corpus = cut_corpus(SEED);
    let r = verify_cut_equivalence(&corpus).unwrap();
    let ok = r.passed && r.instances >= 100 && r.skipped == 0;
    assert!(line(
        "7",
        ok,
        started,
        format!("{} graphs (n <= 14), {} mismatches with enumeration", r.instances, r.failures.len()),
    ));
}

#[test]
fn criterion_8_side_bound() {
    let started = Instant::now();
    let corpus = cut_corpus(SEED);
    let r = verify_side_bound(&corpus).unwrap();
    let nonvacuous = computed(&r, "nontrivial_minimum_cuts").as_u64().unwrap_or(0) > 0;
    let ok = r.passed && r.instances >= 100 && nonvacuous;
    assert!(line(
        "8",
        ok,
        started,
        format!(
            "{} graphs, {} with a nontrivial minimum cut, {} such cuts checked, smallest side {:?}",
            r.instances,
            computed(&r, "graphs_with_nontrivial_minimum_cut"),
            computed(&r, "nontrivial_minimum_cuts"),
            r.min_observed
        ),
    ));
}
