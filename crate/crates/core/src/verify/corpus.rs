use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::trial_seed;
use crate::complex::BoundaryComplex;
use crate::cuts::Graph;
use crate::generators::{cyclic, ladder_stacked, random_plane_triangulation, random_stacked, simplex};

/// A named graph in the brute-force regime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

impl CorpusGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        CorpusGraph { name: name.into(), graph }
    }
}

/// Largest graph placed in the corpus.
pub const CORPUS_MAX_VERTICES: usize = 14;

/// Connected graphs on at most 14 vertices: polytope skeletons, cycles,
/// wheels, complete graphs, barbells and random connected graphs.
pub fn cut_corpus(seed: u64) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let skeleton = |c: BoundaryComplex| c.skeleton_graph().expect("generators produce valid complexes");

    for d in 2..=6 {
        out.push(CorpusGraph::new(format!("simplex({d})"), skeleton(simplex(d).unwrap())));
    }
    out.push(CorpusGraph::new("octahedron", skeleton(octahedron())));
    for d in 3..=5 {
        for n in d + 2..=10 {
            out.push(CorpusGraph::new(format!("cyclic({d},{n})"), skeleton(cyclic(d, n).unwrap())));
        }
    }
    for d in 3..=7 {
        out.push(CorpusGraph::new(format!("ladder({d})"), skeleton(ladder_stacked(d).unwrap().complex)));
    }
    for (i, n) in (6..=CORPUS_MAX_VERTICES).enumerate() {
        let s = trial_seed(seed, i);
        for d in [3, 4] {
            let c = random_stacked(d, n, s).unwrap();
            out.push(CorpusGraph::new(format!("stacked({d},{n},seed={s})"), skeleton(c)));
        }
        let t = random_plane_triangulation(n, 3 * n, s).unwrap();
        out.push(CorpusGraph::new(format!("plane({n},seed={s})"), skeleton(t.complex)));
    }
    for n in 4..=12 {
        out.push(CorpusGraph::new(format!("cycle({n})"), Graph::cycle(n)));
        out.push(CorpusGraph::new(format!("wheel({n})"), wheel(n)));
    }
    for n in 2..=8 {
        out.push(CorpusGraph::new(format!("complete({n})"), Graph::complete(n)));
    }
    for n in [4, 6, 8] {
        out.push(CorpusGraph::new(format!("path({n})"), Graph::path(n)));
    }
    for k in 3..=6 {
        out.push(CorpusGraph::new(format!("barbell({k})"), barbell(k)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..60 {
        let n = rng.random_range(4..=CORPUS_MAX_VERTICES);
        let p = rng.random_range(0.15..0.7);
        out.push(CorpusGraph::new(format!("random({n},#{i})"), random_connected(n, p, &mut rng)));
    }
    out
}

/// The octahedron, antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> BoundaryComplex {
    let facets = [0, 1]
        .into_iter()
        .flat_map(|a| [2, 3].into_iter().flat_map(move |b| [4, 5].into_iter().map(move |c| vec![a, b, c])));
    BoundaryComplex::new(3, 6, facets.collect::<Vec<_>>()).expect("octahedron labels")
}

fn wheel(n: usize) -> Graph {
    let mut edges = Graph::cycle(n).edges();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::from_edges(n + 1, edges).expect("wheel")
}

/// Two copies of `K_k` joined by one edge.
fn barbell(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Graph::complete(k).edges();
    edges.extend(Graph::complete(k).edges().into_iter().map(|(u, v)| (u + k, v + k)));
    edges.push((k - 1, k));
    Graph::from_edges(2 * k, edges).expect("barbell")
}

/// A random spanning tree plus each remaining pair independently with
/// probability `p`.
fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}
