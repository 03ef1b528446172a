//! Executable checks of the edge-cut bounds. Each check runs over a family
//! of generated instances and returns a [`VerificationReport`] whose
//! failures carry self-contained witnesses.

mod corpus;
mod report;

use std::ops::RangeInclusive;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::complex::{BoundaryComplex, ComplexError};
use crate::cuts::{
    brute_force_cuts, brute_force_min_balanced_cut, brute_force_minimum_cuts, crossing_edges,
    global_min_cut, min_nontrivial_cut, Cut, CutError, Graph, BRUTE_FORCE_MAX_VERTICES,
};
use crate::generators::{
    cyclic, ladder_stacked, random_plane_triangulation, random_stacked, waist_polytope, GeneratorError,
};
use crate::hull::{
    check_vertex_deletion, facets_brute_force, moment_curve_points, random_general_position, HullError,
    PointConfiguration,
};

pub use corpus::{cut_corpus, octahedron, CorpusGraph, CORPUS_MAX_VERTICES};
pub use report::{Failure, VerificationReport};

use report::to_value;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Hull(#[from] HullError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// `d(d+1)/2`.
pub fn cut_bound(d: usize) -> usize {
    d * (d + 1) / 2
}

/// Edge count of a stacked `d`-polytope on `n` vertices.
pub fn stacked_edge_count(d: usize, n: usize) -> usize {
    d * n - cut_bound(d)
}

/// Sub-seed for trial `trial` (splitmix64 of the pair).
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    let mut z = seed.wrapping_add((trial as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn cut_witness(c: &BoundaryComplex, cut: &Cut) -> Value {
    json!({ "complex": c, "side": cut.side, "size": cut.size })
}

fn points_witness(c: &PointConfiguration) -> Value {
    let points: Vec<Vec<String>> =
        c.points().iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect();
    json!({ "dim": c.dim(), "points": points })
}

/// Which nontrivial cuts of a plane triangulation are held to the bound of
/// six edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PlaneForm {
    /// Only nontrivial cuts that are also minimum cuts. Equivalently:
    /// every minimum cut is trivial.
    #[default]
    MinimumCuts,
    /// Every nontrivial cut once `v >= 5`. This stronger reading is false:
    /// the triangular bipyramid has a nontrivial cut of five edges.
    AllNontrivialCuts,
}

/// Cut data for one plane triangulation.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneInstance {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub min_cut: Cut,
    pub min_nontrivial_cut: Option<Cut>,
    /// Failures of the minimum-cut form.
    pub failures: Vec<Failure>,
    /// A nontrivial cut below six edges on `v >= 5` vertices, if any.
    pub strong_form_witness: Option<Failure>,
}

/// Checks one triangulated 2-sphere: `f1 = 3v - 6`, `δ <= 5`, global
/// minimum cut `= δ`, and every minimum cut trivial. For `v = 4` only the
/// last two are meaningful and the six-edge bound is not evaluated.
pub fn check_plane_instance(name: &str, c: &BoundaryComplex) -> Result<PlaneInstance, VerifyError> {
    if c.dim() != 3 {
        return Err(VerifyError::Parameter(format!("plane triangulations have dim 3, got {}", c.dim())));
    }
    let g = c.skeleton_graph()?;
    let v = g.vertex_count();
    let delta = g.min_degree();
    let min_cut = global_min_cut(&g)?;
    let nontrivial = min_nontrivial_cut(&g)?;
    let mut failures = Vec::new();
    let mut fail = |reason: String, witness: Value| {
        failures.push(Failure { instance: name.to_string(), reason, witness })
    };

    if g.edge_count() + 6 != 3 * v {
        fail(format!("{} edges on {v} vertices, expected {}", g.edge_count(), 3 * v - 6), json!({ "complex": c }));
    }
    if delta > 5 {
        fail(format!("minimum degree {delta} exceeds 5"), json!({ "complex": c }));
    }
    if min_cut.size != delta {
        fail(format!("minimum cut {} differs from minimum degree {delta}", min_cut.size), cut_witness(c, &min_cut));
    }
    if let Some(cut) = nontrivial.as_ref().filter(|cut| cut.size <= min_cut.size) {
        fail(format!("nontrivial cut of {} edges is a minimum cut", cut.size), cut_witness(c, cut));
    }
    let strong_form_witness = nontrivial.as_ref().filter(|cut| v >= 5 && cut.size < 6).map(|cut| Failure {
        instance: name.to_string(),
        reason: format!("nontrivial cut of {} edges on {v} vertices", cut.size),
        witness: cut_witness(c, cut),
    });
    Ok(PlaneInstance {
        name: name.to_string(),
        vertices: v,
        edges: g.edge_count(),
        min_degree: delta,
        min_cut,
        min_nontrivial_cut: nontrivial,
        failures,
        strong_form_witness,
    })
}

/// Random plane triangulations: trial `i` draws `v` uniformly from
/// `5..=max_v` (just 4 when `max_v = 4`) and a flip count from `0..=3v`.
pub fn verify_plane(trials: usize, max_v: usize, seed: u64, form: PlaneForm) -> Result<VerificationReport, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::Parameter("trials must be at least 1".into()));
    }
    if max_v < 4 {
        return Err(VerifyError::Parameter(format!("max_v must be at least 4, got {max_v}")));
    }
    let (claim, statement) = match form {
        PlaneForm::MinimumCuts => (
            "plane-triangulation-min-cuts",
            "every minimum edge cut of a plane triangulation is trivial",
        ),
        PlaneForm::AllNontrivialCuts => (
            "plane-triangulation-nontrivial-cuts",
            "every nontrivial edge cut of a plane triangulation on at least 5 vertices has at least 6 edges",
        ),
    };
    let mut report = VerificationReport::new(claim, statement)
        .param("trials", trials)
        .param("max_v", max_v)
        .param("seed", seed);

    let results: Vec<(PlaneInstance, usize)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, i));
            let v = if max_v >= 5 { rng.random_range(5..=max_v) } else { 4 };
            let flips = rng.random_range(0..=3 * v);
            let t = random_plane_triangulation(v, flips, rng.random())?;
            let name = format!("trial {i} (v={v}, flips={})", t.flips_performed);
            Ok((check_plane_instance(&name, &t.complex)?, t.flips_performed))
        })
        .collect::<Result<_, VerifyError>>()?;

    let mut strong_violations = 0;
    let mut strong_witness = None;
    let mut flips_total = 0;
    for (inst, flips) in results {
        report.instances += 1;
        flips_total += flips;
        if let Some(cut) = &inst.min_nontrivial_cut {
            report.observe(cut.size);
        }
        report.failures.extend(inst.failures);
        if let Some(w) = inst.strong_form_witness {
            strong_violations += 1;
            if form == PlaneForm::AllNontrivialCuts {
                report.failures.push(w);
            } else if strong_witness.is_none() {
                strong_witness = Some(w);
            }
        }
    }
    report.set("flips_performed", flips_total);
    report.set("strong_form_violations", strong_violations);
    if let Some(w) = strong_witness {
        report.set("strong_form_witness", w);
    }
    Ok(report.finish())
}

/// Edge counts of random stacked polytopes (equality with the lower bound)
/// and of cyclic polytopes (at least the bound; complete graph for `d >= 4`).
pub fn verify_lbt(
    dims: RangeInclusive<usize>,
    max_n: usize,
    seeds: usize,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    if *dims.start() < 2 {
        return Err(VerifyError::Parameter("dimensions start at 2".into()));
    }
    let mut report = VerificationReport::new(
        "lbt-edges",
        "a simplicial d-polytope on n vertices has at least dn - C(d+1,2) edges, with equality for stacked polytopes",
    )
    .param("dims", [*dims.start(), *dims.end()])
    .param("max_n", max_n)
    .param("seeds", seeds)
    .param("seed", seed);

    let jobs: Vec<(usize, usize, usize)> = dims
        .clone()
        .flat_map(|d| (d + 1..=max_n).flat_map(move |n| (0..seeds).map(move |s| (d, n, s))))
        .collect();
    let stacked: Vec<(String, usize, usize, BoundaryComplex)> = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(d, n, _))| {
            let s = trial_seed(seed, i);
            let c = random_stacked(d, n, s)?;
            Ok((format!("stacked(d={d}, n={n}, seed={s})"), d, n, c))
        })
        .collect::<Result<_, VerifyError>>()?;
    let mut stacked_count = 0;
    for (name, d, n, c) in &stacked {
        report.instances += 1;
        stacked_count += 1;
        let f1 = c.face_counts().edges;
        report.observe(f1 - stacked_edge_count(*d, *n).min(f1));
        if !c.validate().is_valid() {
            report.fail(name.clone(), "invalid complex", json!({ "complex": c }));
        } else if f1 != stacked_edge_count(*d, *n) {
            report.fail(
                name.clone(),
                format!("{f1} edges, expected {}", stacked_edge_count(*d, *n)),
                json!({ "complex": c }),
            );
        }
    }

    let cyclic_jobs: Vec<(usize, usize)> = dims.flat_map(|d| (d + 1..=max_n).map(move |n| (d, n))).collect();
    let cyclic_results: Vec<(usize, usize, usize, bool)> = cyclic_jobs
        .par_iter()
        .map(|&(d, n)| {
            let c = cyclic(d, n)?;
            Ok((d, n, c.face_counts().edges, c.validate().is_valid()))
        })
        .collect::<Result<_, VerifyError>>()?;
    for &(d, n, f1, valid) in &cyclic_results {
        report.instances += 1;
        let name = format!("cyclic(d={d}, n={n})");
        let lower = stacked_edge_count(d, n);
        let complete = n * (n - 1) / 2;
        if !valid {
            report.fail(name, "invalid complex", json!({ "d": d, "n": n }));
        } else if f1 < lower {
            report.fail(name, format!("{f1} edges, below {lower}"), json!({ "d": d, "n": n }));
        } else if d >= 4 && f1 != complete {
            report.fail(name, format!("{f1} edges, graph not complete ({complete})"), json!({ "d": d, "n": n }));
        }
    }
    report.set("stacked_instances", stacked_count);
    report.set("cyclic_instances", cyclic_results.len());
    Ok(report.finish())
}

/// Minimum crossing count over balanced bipartitions (`d` + `d`) of
/// `ladder_stacked(d)` and `cyclic(d, 2d)`, enumerated exhaustively.
pub fn verify_balanced_partitions(d: usize) -> Result<VerificationReport, VerifyError> {
    if !(2..=8).contains(&d) {
        return Err(VerifyError::Parameter(format!("balanced enumeration needs 2 <= d <= 8, got {d}")));
    }
    let bound = cut_bound(d);
    let mut report = VerificationReport::new(
        "balanced-partition-crossing",
        "a simplicial d-polytope on 2d vertices has at least d(d+1)/2 edges across any d + d bipartition",
    )
    .param("d", d);
    let ladder = ladder_stacked(d)?;
    let cases = [("ladder", ladder.complex.clone()), ("cyclic", cyclic(d, 2 * d)?)];
    for (label, c) in &cases {
        report.instances += 1;
        let g = c.skeleton_graph()?;
        let mut min: Option<Cut> = None;
        let mut partitions = 0;
        // Vertex 0 on the enumerated side: each bipartition once.
        for rest in (1..2 * d).combinations(d - 1) {
            let side: Vec<usize> = std::iter::once(0).chain(rest).collect();
            let cut = crossing_edges(&g, &side)?;
            partitions += 1;
            if cut.size < bound {
                report.fail(format!("{label}({d})"), format!("{} crossing edges", cut.size), cut_witness(c, &cut));
            }
            if min.as_ref().is_none_or(|m| cut.size < m.size) {
                min = Some(cut);
            }
        }
        let min = min.expect("at least one bipartition");
        report.observe(min.size);
        report.set(&format!("{label}_min"), min.size);
        report.set(&format!("{label}_partitions"), partitions);
    }
    let canonical = crossing_edges(&ladder.complex.skeleton_graph()?, ladder.first.vertices())?;
    report.set("ladder_canonical", canonical.size);
    if canonical.size != bound {
        report.fail(
            format!("ladder({d})"),
            format!("canonical halves cross {} edges, expected {bound}", canonical.size),
            cut_witness(&ladder.complex, &canonical),
        );
    }
    Ok(report.finish())
}

/// Random general-position configurations; every hull vertex is deleted in
/// turn and each new edge must join two neighbours of the deleted vertex.
pub fn verify_vertex_figure(
    trials: usize,
    d: usize,
    n: usize,
    seed: u64,
    bound: u64,
) -> Result<VerificationReport, VerifyError> {
    if d < 2 || n < d + 1 {
        return Err(VerifyError::Parameter(format!("need d >= 2 and n >= d + 1, got d={d}, n={n}")));
    }
    let mut report = VerificationReport::new(
        "vertex-figure-new-edges",
        "an edge created by deleting vertex w from a polytope joins two neighbours of w",
    )
    .param("trials", trials)
    .param("d", d)
    .param("n", n)
    .param("seed", seed)
    .param("box", bound);

    struct Trial {
        skipped: bool,
        deletions: usize,
        new_edges: usize,
        hull_vertices: usize,
        failures: Vec<Failure>,
    }
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = trial_seed(seed, i);
            let c = random_general_position(d, n, s, bound)?;
            let hull = facets_brute_force(&c)?;
            let mut t = Trial {
                skipped: hull.vertices.len() < d + 2,
                deletions: 0,
                new_edges: 0,
                hull_vertices: hull.vertices.len(),
                failures: Vec::new(),
            };
            if t.skipped {
                return Ok(t);
            }
            for &w in &hull.vertices {
                let check = check_vertex_deletion(&c, &hull, w)?;
                t.deletions += 1;
                t.new_edges += check.new_edges.len();
                for violation in check.violations {
                    let mut witness = points_witness(&c);
                    witness["violation"] = to_value(&violation);
                    t.failures.push(Failure {
                        instance: format!("trial {i} (seed={s})"),
                        reason: format!("new edge {{{}, {}}} after deleting {w}", violation.u, violation.v),
                        witness,
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<_, VerifyError>>()?;

    let (mut deletions, mut new_edges) = (0, 0);
    let mut hull_min = usize::MAX;
    for t in results {
        if t.skipped {
            report.skipped += 1;
            continue;
        }
        report.instances += 1;
        deletions += t.deletions;
        new_edges += t.new_edges;
        hull_min = hull_min.min(t.hull_vertices);
        report.failures.extend(t.failures);
    }
    report.set("deletions", deletions);
    report.set("new_edges", new_edges);
    if report.instances > 0 {
        report.set("hull_vertices_min", hull_min);
    }
    Ok(report.finish())
}

/// For each corpus graph, every minimum cut that is nontrivial must have
/// both sides of size at least `δ`.
pub fn verify_side_bound(corpus: &[CorpusGraph]) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "min-cut-side-bound",
        "both sides of a nontrivial minimum edge cut have at least δ vertices",
    )
    .param("graphs", corpus.len());
    let results: Vec<Option<(usize, Vec<Cut>)>> = corpus
        .par_iter()
        .map(|entry| {
            let g = &entry.graph;
            if !g.is_connected() || g.vertex_count() > BRUTE_FORCE_MAX_VERTICES || g.vertex_count() < 2 {
                return Ok(None);
            }
            let nontrivial = brute_force_minimum_cuts(g)?.into_iter().filter(|c| !c.trivial).collect();
            Ok(Some((g.min_degree(), nontrivial)))
        })
        .collect::<Result<_, VerifyError>>()?;

    let (mut with_nontrivial, mut cuts_checked) = (0, 0);
    for (entry, result) in corpus.iter().zip(results) {
        let Some((delta, cuts)) = result else {
            report.skipped += 1;
            continue;
        };
        report.instances += 1;
        if !cuts.is_empty() {
            with_nontrivial += 1;
        }
        for cut in cuts {
            cuts_checked += 1;
            let smaller = cut.side.len().min(entry.graph.vertex_count() - cut.side.len());
            report.observe(smaller);
            if smaller < delta {
                report.fail(
                    entry.name.clone(),
                    format!("side of {smaller} vertices below minimum degree {delta}"),
                    json!({ "graph": entry.graph, "side": cut.side, "size": cut.size }),
                );
            }
        }
    }
    report.set("graphs_with_nontrivial_minimum_cut", with_nontrivial);
    report.set("nontrivial_minimum_cuts", cuts_checked);
    Ok(report.finish())
}

/// Flow-based global and nontrivial minima against exhaustive enumeration.
pub fn verify_cut_equivalence(corpus: &[CorpusGraph]) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "cut-oracle-equivalence",
        "flow-based global and nontrivial minimum cuts equal exhaustive enumeration",
    )
    .param("graphs", corpus.len());
    let results: Vec<Option<Vec<String>>> = corpus
        .par_iter()
        .map(|entry| {
            let g = &entry.graph;
            if !g.is_connected() || g.vertex_count() > BRUTE_FORCE_MAX_VERTICES || g.vertex_count() < 2 {
                return Ok(None);
            }
            Ok(Some(compare_with_oracle(g)?))
        })
        .collect::<Result<_, VerifyError>>()?;

    for (entry, result) in corpus.iter().zip(results) {
        let Some(problems) = result else {
            report.skipped += 1;
            continue;
        };
        report.instances += 1;
        for reason in problems {
            report.fail(entry.name.clone(), reason, json!({ "graph": entry.graph }));
        }
    }
    Ok(report.finish())
}

fn compare_with_oracle(g: &Graph) -> Result<Vec<String>, VerifyError> {
    let oracle = brute_force_cuts(g)?;
    let global = global_min_cut(g)?;
    let nontrivial = min_nontrivial_cut(g)?;
    let mut problems = Vec::new();
    if global.size != oracle.min_cut.size {
        problems.push(format!("global minimum {} but enumeration gives {}", global.size, oracle.min_cut.size));
    }
    let sizes = (nontrivial.as_ref().map(|c| c.size), oracle.min_nontrivial_cut.as_ref().map(|c| c.size));
    if sizes.0 != sizes.1 {
        problems.push(format!("nontrivial minimum {:?} but enumeration gives {:?}", sizes.0, sizes.1));
    }
    for cut in std::iter::once(&global).chain(nontrivial.as_ref()) {
        if crossing_edges(g, &cut.side)? != *cut {
            problems.push(format!("witness side {:?} does not reproduce its cut", cut.side));
        }
    }
    if nontrivial.as_ref().is_some_and(|c| c.trivial) {
        problems.push("nontrivial search returned a trivial cut".into());
    }
    Ok(problems)
}

/// Global and nontrivial minimum cuts of one complex against the bound
/// `d(d+1)/2` for nontrivial minimum cuts, and the resulting connectivity
/// `>= min(δ, d(d+1)/2)`. Small complexes also get an exhaustive check that
/// every bipartition with both sides of size at least `d` has at least
/// `d(d+1)/2` crossing edges.
pub fn verify_main_bound(name: &str, c: &BoundaryComplex) -> Result<VerificationReport, VerifyError> {
    let d = c.dim();
    if d < 3 {
        return Err(VerifyError::Parameter(format!("the bound concerns d >= 3, got {d}")));
    }
    let bound = cut_bound(d);
    let mut report = VerificationReport::new(
        "nontrivial-cut-bound",
        "a nontrivial minimum edge cut of a simplicial d-polytope has at least d(d+1)/2 edges",
    )
    .param("complex", name)
    .param("dim", d)
    .param("n", c.vertex_count());
    let g = c.skeleton_graph()?;
    let delta = g.min_degree();
    let global = global_min_cut(&g)?;
    let nontrivial = min_nontrivial_cut(&g)?;
    report.instances = 1;
    report.set("bound", bound);
    report.set("min_degree", delta);
    report.set("min_cut", global.size);
    report.set("connectivity_lower_bound", delta.min(bound));

    let expected_global = nontrivial.as_ref().map_or(delta, |nt| nt.size.min(delta));
    if global.size != expected_global {
        report.fail(
            name,
            format!("minimum cut {} differs from min(δ, nontrivial minimum) = {expected_global}", global.size),
            cut_witness(c, &global),
        );
    }
    if global.size < delta.min(bound) {
        report.fail(
            name,
            format!("edge connectivity {} below min(δ, bound) = {}", global.size, delta.min(bound)),
            cut_witness(c, &global),
        );
    }
    if let Some(nt) = &nontrivial {
        report.observe(nt.size);
        report.set("min_nontrivial_cut", nt.size);
        report.set("nontrivial_cut_is_minimum", nt.size <= delta);
        report.set("strong_form_holds", nt.size >= bound);
        if nt.size <= delta && nt.size < bound {
            report.fail(name, format!("nontrivial minimum cut of {} edges", nt.size), cut_witness(c, nt));
        }
    }
    if g.vertex_count() <= BRUTE_FORCE_MAX_VERTICES {
        if let Some(cut) = brute_force_min_balanced_cut(&g, d)? {
            report.set("min_cut_sides_at_least_d", cut.size);
            if cut.size < bound {
                report.fail(
                    name,
                    format!("bipartition with sides >= {d} crosses only {} edges", cut.size),
                    cut_witness(c, &cut),
                );
            }
        }
    }
    Ok(report.finish())
}

/// The `C # S # C` construction: minimum degree, certificate cut, nontrivial
/// minimum and global minimum all equal `d(d+1)/2`.
pub fn verify_waist(d: usize) -> Result<VerificationReport, VerifyError> {
    let w = waist_polytope(d)?;
    let bound = cut_bound(d);
    let mut report = VerificationReport::new(
        "waist-construction",
        "for d >= 4 there is a simplicial d-polytope with minimum degree d(d+1)/2 and a nontrivial minimum cut of d(d+1)/2 edges",
    )
    .param("d", d);
    let c = &w.complex;
    let name = format!("waist({d})");
    report.instances = 1;
    let validation = c.validate();
    if !validation.is_valid() {
        report.fail(&name, format!("invalid complex: {validation}"), json!({ "complex": c }));
        return Ok(report.finish());
    }
    let g = c.skeleton_graph()?;
    let delta = g.min_degree();
    let certificate = crossing_edges(&g, &w.left)?;
    let nontrivial = min_nontrivial_cut(&g)?.expect("waist polytopes have many vertices");
    let global = global_min_cut(&g)?;
    report.set("vertices", g.vertex_count());
    report.set("bound", bound);
    report.set("min_degree", delta);
    report.set("certificate_cut", certificate.size);
    report.set("certificate_trivial", certificate.trivial);
    report.set("min_nontrivial_cut", nontrivial.size);
    report.set("min_cut", global.size);
    let mut sides = [certificate.side.clone(), certificate.complement(g.vertex_count())];
    sides.sort();
    report.set("witness_is_certificate", sides.contains(&nontrivial.side));
    report.observe(nontrivial.size);

    for (label, value) in [
        ("minimum degree", delta),
        ("certificate crossing count", certificate.size),
        ("minimum nontrivial cut", nontrivial.size),
        ("global minimum cut", global.size),
    ] {
        if value != bound {
            report.fail(&name, format!("{label} is {value}, expected {bound}"), json!({ "complex": c }));
        }
    }
    if certificate.trivial {
        report.fail(&name, "certificate cut is trivial", cut_witness(c, &certificate));
    }
    Ok(report.finish())
}

/// Gale-evenness facets of `cyclic(d, n)` against the exact hull of the
/// moment-curve points `t = 1..n`.
pub fn verify_cyclic_oracle(dims: RangeInclusive<usize>, max_n: usize) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(
        "cyclic-hull-oracle",
        "Gale-evenness facets of the cyclic polytope equal the hull of points on the moment curve",
    )
    .param("dims", [*dims.start(), *dims.end()])
    .param("max_n", max_n);
    let jobs: Vec<(usize, usize)> = dims.flat_map(|d| (d + 1..=max_n).map(move |n| (d, n))).collect();
    let results: Vec<(usize, usize, BoundaryComplex, BoundaryComplex, Vec<usize>)> = jobs
        .par_iter()
        .map(|&(d, n)| {
            let combinatorial = cyclic(d, n)?;
            let hull = facets_brute_force(&moment_curve_points(d, n, None)?)?;
            Ok((d, n, combinatorial, hull.complex, hull.excluded))
        })
        .collect::<Result<_, VerifyError>>()?;
    for (d, n, combinatorial, geometric, excluded) in results {
        report.instances += 1;
        report.observe(combinatorial.facet_count());
        // Every point is a hull vertex, so labels agree without relabeling.
        if !excluded.is_empty() || combinatorial != geometric {
            report.fail(
                format!("cyclic({d},{n})"),
                "facet sets differ",
                json!({ "gale": combinatorial, "hull": geometric, "excluded": excluded }),
            );
        }
    }
    Ok(report.finish())
}

/// Parameters of [`verify_all`]; defaults match the acceptance suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub waist_dims: RangeInclusive<usize>,
    pub plane_trials: usize,
    pub plane_max_v: usize,
    pub lbt_dims: RangeInclusive<usize>,
    pub lbt_max_n: usize,
    pub lbt_seeds: usize,
    pub balanced_dims: Vec<usize>,
    pub oracle_dims: RangeInclusive<usize>,
    pub oracle_max_n: usize,
    pub vertex_figure: Vec<(usize, usize)>,
    pub vertex_figure_trials: usize,
    pub vertex_figure_box: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            waist_dims: 4..=8,
            plane_trials: 200,
            plane_max_v: 40,
            lbt_dims: 3..=8,
            lbt_max_n: 30,
            lbt_seeds: 5,
            balanced_dims: vec![3, 4],
            oracle_dims: 2..=5,
            oracle_max_n: 9,
            vertex_figure: vec![(3, 8), (4, 9)],
            vertex_figure_trials: 100,
            vertex_figure_box: 1000,
        }
    }
}

/// Every check in turn.
pub fn verify_all(config: &SuiteConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for d in config.waist_dims.clone() {
        reports.push(verify_waist(d)?);
    }
    reports.push(verify_plane(config.plane_trials, config.plane_max_v, config.seed, PlaneForm::MinimumCuts)?);
    reports.push(verify_lbt(config.lbt_dims.clone(), config.lbt_max_n, config.lbt_seeds, config.seed)?);
    for &d in &config.balanced_dims {
        reports.push(verify_balanced_partitions(d)?);
    }
    reports.push(verify_cyclic_oracle(config.oracle_dims.clone(), config.oracle_max_n)?);
    for &(d, n) in &config.vertex_figure {
        reports.push(verify_vertex_figure(
            config.vertex_figure_trials,
            d,
            n,
            config.seed,
            config.vertex_figure_box,
        )?);
    }
    let corpus = cut_corpus(config.seed);
    reports.push(verify_cut_equivalence(&corpus)?);
    reports.push(verify_side_bound(&corpus)?);
    for (name, c) in main_bound_examples()? {
        reports.push(verify_main_bound(&name, &c)?);
    }
    Ok(reports)
}

/// Complexes checked by the nontrivial-cut bound in [`verify_all`].
pub fn main_bound_examples() -> Result<Vec<(String, BoundaryComplex)>, VerifyError> {
    Ok(vec![
        ("octahedron".into(), octahedron()),
        ("cyclic(4,11)".into(), cyclic(4, 11)?),
        ("ladder(5)".into(), ladder_stacked(5)?.complex),
        ("waist(5)".into(), waist_polytope(5)?.complex),
    ])
}
