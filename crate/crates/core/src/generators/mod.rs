//! Constructors for boundary complexes: simplices, cyclic polytopes,
//! stacked polytopes, connected sums, the waist construction and random
//! plane triangulations.

mod plane;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{BoundaryComplex, ComplexError, Facet, VertexId};

pub use plane::{flip, random_plane_triangulation, PlaneTriangulation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("dimension {got} is below the minimum {min}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("need at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Facet),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("gluing map is not a bijection between facets: {0}")]
    BadGluing(String),
    #[error("flips are defined on 3-dimensional complexes only, got dimension {0}")]
    FlipNeedsDimensionThree(usize),
    #[error("{{{0}, {1}}} is not an edge shared by exactly two facets")]
    NotARidge(VertexId, VertexId),
    #[error("flip blocked: {{{0}, {1}}} is already an edge")]
    FlipBlocked(VertexId, VertexId),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Boundary of the `d`-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> Result<BoundaryComplex, GeneratorError> {
    if d < 2 {
        return Err(GeneratorError::DimensionTooSmall { min: 2, got: d });
    }
    let facets = (0..=d).map(|skip| (0..=d).filter(|&v| v != skip).collect::<Vec<_>>());
    Ok(BoundaryComplex::new(d, d + 1, facets)?)
}

/// Cyclic `d`-polytope with `n` vertices, labelled along the moment curve.
///
/// Facets follow Gale's evenness condition: a `d`-subset is a facet when
/// every block of consecutive members lying strictly between two
/// non-members has even length.
pub fn cyclic(d: usize, n: usize) -> Result<BoundaryComplex, GeneratorError> {
    if d < 2 {
        return Err(GeneratorError::DimensionTooSmall { min: 2, got: d });
    }
    if n <= d {
        return Err(GeneratorError::TooFewVertices { min: d + 1, got: n });
    }
    let mut facets = Vec::new();
    let mut chosen = Vec::with_capacity(d);
    gale_search(n, d, 0, 0, true, &mut chosen, &mut facets);
    Ok(BoundaryComplex::new(d, n, facets)?)
}

/// Depth-first walk over positions `pos..n`. `run` is the length of the
/// current block of members and `leading` whether that block started at
/// position 0 (such a block is exempt from the parity rule).
fn gale_search(
    n: usize,
    d: usize,
    pos: usize,
    run: usize,
    leading: bool,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == d {
        // Remaining positions are all non-members.
        if pos == n || leading || run % 2 == 0 {
            out.push(chosen.clone());
        }
        return;
    }
    if n - pos < d - chosen.len() {
        return;
    }
    chosen.push(pos);
    gale_search(n, d, pos + 1, run + 1, leading, chosen, out);
    chosen.pop();
    if leading || run % 2 == 0 {
        gale_search(n, d, pos + 1, 0, false, chosen, out);
    }
}

/// Stacks a new vertex `n` onto facet `f`: `f` is replaced by the cone
/// `(f \ {x}) ∪ {n}` for each `x ∈ f`.
pub fn stack(c: &BoundaryComplex, f: &Facet) -> Result<BoundaryComplex, GeneratorError> {
    if !c.contains_facet(f) {
        return Err(GeneratorError::NotAFacet(f.clone()));
    }
    let apex = c.vertex_count();
    let mut facets: Vec<Vec<VertexId>> =
        c.facets().filter(|g| *g != f).map(|g| g.vertices().to_vec()).collect();
    for i in 0..f.len() {
        let mut cone = f.ridge_without(i);
        cone.push(apex);
        facets.push(cone);
    }
    Ok(BoundaryComplex::new(c.dim(), apex + 1, facets)?)
}

/// Stacked `d`-polytope on `n` vertices, stacking on uniformly random facets.
pub fn random_stacked(d: usize, n: usize, seed: u64) -> Result<BoundaryComplex, GeneratorError> {
    if n <= d {
        return Err(GeneratorError::TooFewVertices { min: d + 1, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = simplex(d)?;
    while c.vertex_count() < n {
        let f = random_facet(&c, &mut rng);
        c = stack(&c, &f)?;
    }
    Ok(c)
}

pub(crate) fn random_facet<R: Rng>(c: &BoundaryComplex, rng: &mut R) -> Facet {
    let idx = rng.random_range(0..c.facet_count());
    c.facets().nth(idx).expect("index in range").clone()
}

/// Stacked polytope with two disjoint facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderStacked {
    pub complex: BoundaryComplex,
    /// `{0, ..., d-1}`.
    pub first: Facet,
    /// `{d, ..., 2d-1}`.
    pub last: Facet,
}

/// Stacked `d`-polytope on `2d` vertices: start from the simplex on
/// `0..=d`, then for `j = d+1, ..., 2d-1` stack vertex `j` onto the sliding
/// window facet `{j-d, ..., j-1}`.
pub fn ladder_stacked(d: usize) -> Result<LadderStacked, GeneratorError> {
    let mut c = simplex(d)?;
    for j in d + 1..2 * d {
        let window = Facet::new((j - d..j).collect())?;
        c = stack(&c, &window)?;
    }
    let first = Facet::new((0..d).collect())?;
    let last = Facet::new((d..2 * d).collect())?;
    debug_assert!(c.contains_facet(&first) && c.contains_facet(&last));
    Ok(LadderStacked { complex: c, first, last })
}

/// Identification of a facet of one complex with a facet of another:
/// `source.vertices()[i]` is glued to `image[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingMap {
    source: Facet,
    image: Vec<VertexId>,
}

impl GluingMap {
    pub fn new(source: Facet, image: Vec<VertexId>) -> Result<Self, GeneratorError> {
        if image.len() != source.len() {
            return Err(GeneratorError::BadGluing(format!(
                "{} source vertices, {} images",
                source.len(),
                image.len()
            )));
        }
        let distinct: BTreeSet<_> = image.iter().collect();
        if distinct.len() != image.len() {
            return Err(GeneratorError::BadGluing("repeated image vertex".into()));
        }
        Ok(GluingMap { source, image })
    }

    /// Pairs the sorted vertices of `source` with the sorted vertices of
    /// `target` in order.
    pub fn order_preserving(source: &Facet, target: &Facet) -> Result<Self, GeneratorError> {
        GluingMap::new(source.clone(), target.vertices().to_vec())
    }

    pub fn source(&self) -> &Facet {
        &self.source
    }

    pub fn target(&self) -> Facet {
        Facet::new(self.image.clone()).expect("images are distinct")
    }
}

/// Combinatorial connected sum `a # b` glued along `g`.
///
/// Vertices of `a` keep their labels, the non-glued vertices of `b` follow
/// as `n_a, n_a + 1, ...` in increasing order of their old labels, and both
/// glued facets are dropped.
pub fn connected_sum(
    a: &BoundaryComplex,
    b: &BoundaryComplex,
    g: &GluingMap,
) -> Result<BoundaryComplex, GeneratorError> {
    if a.dim() != b.dim() {
        return Err(GeneratorError::DimensionMismatch(a.dim(), b.dim()));
    }
    if !a.contains_facet(&g.source) {
        return Err(GeneratorError::NotAFacet(g.source.clone()));
    }
    let target = g.target();
    if !b.contains_facet(&target) {
        return Err(GeneratorError::NotAFacet(target));
    }

    let na = a.vertex_count();
    let mut label = vec![usize::MAX; b.vertex_count()];
    for (&src, &img) in g.source.vertices().iter().zip(&g.image) {
        label[img] = src;
    }
    let mut next = na;
    for slot in label.iter_mut().filter(|l| **l == usize::MAX) {
        *slot = next;
        next += 1;
    }

    let facets = a
        .facets()
        .filter(|f| **f != g.source)
        .map(|f| f.vertices().to_vec())
        .chain(
            b.facets()
                .filter(|f| **f != target)
                .map(|f| f.vertices().iter().map(|&v| label[v]).collect()),
        );
    Ok(BoundaryComplex::new(a.dim(), next, facets.collect::<Vec<_>>())?)
}

/// A complex with a nontrivial bipartition whose cut is claimed to have
/// exactly `expected_cut_size` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaistCertificate {
    pub complex: BoundaryComplex,
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub expected_cut_size: usize,
}

/// `C # S # C` where `S = ladder_stacked(d)` and `C` is the cyclic
/// `d`-polytope on `1 + d(d+1)/2` vertices, each copy glued along its
/// lexicographically smallest facet (order-preserving) to one of the two
/// disjoint facets of `S`.
///
/// The first copy of `C` gets labels `0..|C|` and forms `left`.
pub fn waist_polytope(d: usize) -> Result<WaistCertificate, GeneratorError> {
    if d < 4 {
        return Err(GeneratorError::DimensionTooSmall { min: 4, got: d });
    }
    let bound = d * (d + 1) / 2;
    let cyc = cyclic(d, bound + 1)?;
    let cyc_facet = cyc.facets().next().expect("cyclic polytope has facets").clone();
    let ladder = ladder_stacked(d)?;

    // C # S: C keeps 0..|C|, the ladder's F lands on C's facet and F' on
    // fresh labels.
    let first = connected_sum(&cyc, &ladder.complex, &GluingMap::new(cyc_facet.clone(), ladder.first.vertices().to_vec())?)?;
    let left: Vec<VertexId> = (0..cyc.vertex_count()).collect();
    let shifted_last: Vec<VertexId> =
        ladder.last.vertices().iter().map(|&v| v - d + cyc.vertex_count()).collect();
    let last_facet = Facet::new(shifted_last)?;

    let glue = GluingMap::new(last_facet, cyc_facet.vertices().to_vec())?;
    let complex = connected_sum(&first, &cyc, &glue)?;
    let right: Vec<VertexId> = (left.len()..complex.vertex_count()).collect();
    Ok(WaistCertificate { complex, left, right, expected_cut_size: bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::crossing_edges;
    use itertools::Itertools;

    /// Gale's condition read literally: any two non-members have an even
    /// number of members strictly between them.
    fn gale_by_definition(d: usize, n: usize) -> BTreeSet<Vec<usize>> {
        (0..n)
            .combinations(d)
            .filter(|s| {
                let outside: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
                outside.iter().tuple_combinations().all(|(&i, &j)| {
                    s.iter().filter(|&&m| i < m && m < j).count() % 2 == 0
                })
            })
            .collect()
    }

    fn facet_vecs(c: &BoundaryComplex) -> BTreeSet<Vec<usize>> {
        c.facets().map(|f| f.vertices().to_vec()).collect()
    }

    #[test]
    fn simplices() {
        assert_eq!(simplex(3).unwrap().facet_count(), 4);
        let s4 = simplex(4).unwrap();
        assert_eq!(s4.facet_count(), 5);
        assert_eq!(s4.skeleton_graph().unwrap().edge_count(), 10);
        let s2 = simplex(2).unwrap();
        assert_eq!((s2.vertex_count(), s2.facet_count()), (3, 3));
        assert!(s2.validate().is_valid());
        assert!(simplex(1).is_err());
        for d in 2..=8 {
            let c = simplex(d).unwrap();
            let counts = c.face_counts();
            assert_eq!((counts.vertices, counts.edges, counts.facets), (d + 1, d * (d + 1) / 2, d + 1));
        }
    }

    #[test]
    fn cyclic_matches_gale_definition() {
        for d in 2..=6 {
            for n in d + 1..=11 {
                let c = cyclic(d, n).unwrap();
                assert_eq!(facet_vecs(&c), gale_by_definition(d, n), "d={d} n={n}");
                assert!(c.validate().is_valid(), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic(4, 5).unwrap(), simplex(4).unwrap());
        let c = cyclic(4, 7).unwrap();
        assert_eq!(c.facet_count(), 14);
        assert_eq!(c.skeleton_graph().unwrap().edge_count(), 21);
        assert!(cyclic(4, 4).is_err());
    }

    #[test]
    fn stacking() {
        let s = simplex(3).unwrap();
        let f = s.facets().next().unwrap().clone();
        let c = stack(&s, &f).unwrap();
        assert_eq!((c.vertex_count(), c.facet_count()), (5, 6));
        assert!(c.validate().is_valid());
        assert_eq!(c.face_counts().edges, 9);
        let missing = Facet::new(vec![0, 1, 4]).unwrap();
        assert_eq!(stack(&s, &missing).unwrap_err(), GeneratorError::NotAFacet(missing));
    }

    #[test]
    fn iterated_stacking_meets_lower_bound_with_equality() {
        for d in 3..=8 {
            for seed in 0..3 {
                let c = random_stacked(d, d + 1 + 20, seed).unwrap();
                assert!(c.validate().is_valid());
                let n = c.vertex_count();
                assert_eq!(c.face_counts().edges, d * n - d * (d + 1) / 2);
            }
        }
    }

    #[test]
    fn ladder_examples() {
        let l3 = ladder_stacked(3).unwrap();
        let counts = l3.complex.face_counts();
        assert_eq!((counts.vertices, counts.edges, counts.facets), (6, 12, 8));
        assert_eq!(l3.first.vertices(), &[0, 1, 2]);
        assert_eq!(l3.last.vertices(), &[3, 4, 5]);

        let l4 = ladder_stacked(4).unwrap();
        assert_eq!(l4.complex.face_counts().edges, 22);

        for d in 3..=8 {
            let l = ladder_stacked(d).unwrap();
            assert!(l.complex.validate().is_valid());
            assert!(l.first.is_disjoint(&l.last));
            assert_eq!(l.complex.facet_count(), d + 1 + (d - 1) * (d - 1));
            let g = l.complex.skeleton_graph().unwrap();
            let cut = crossing_edges(&g, l.first.vertices()).unwrap();
            assert_eq!(cut.size, d * (d + 1) / 2, "d={d}");
        }
    }

    #[test]
    fn connected_sum_of_simplices_is_stacked() {
        let s = simplex(3).unwrap();
        let f = Facet::new(vec![0, 1, 2]).unwrap();
        let sum = connected_sum(&s, &s, &GluingMap::order_preserving(&f, &f).unwrap()).unwrap();
        assert_eq!(sum, stack(&s, &f).unwrap());

        let a = cyclic(4, 7).unwrap();
        let b = ladder_stacked(4).unwrap();
        let fa = a.facets().next().unwrap().clone();
        let sum = connected_sum(&a, &b.complex, &GluingMap::order_preserving(&fa, &b.first).unwrap())
            .unwrap();
        assert_eq!(sum.vertex_count(), 7 + 8 - 4);
        assert_eq!(sum.facet_count(), a.facet_count() + b.complex.facet_count() - 2);
        assert!(sum.validate().is_valid());
        // Shared facet edges are counted once.
        assert_eq!(sum.face_counts().edges, 21 + 22 - 6);
    }

    #[test]
    fn connected_sum_errors() {
        let s3 = simplex(3).unwrap();
        let s4 = simplex(4).unwrap();
        let f3 = Facet::new(vec![0, 1, 2]).unwrap();
        let f4 = Facet::new(vec![0, 1, 2, 3]).unwrap();
        let g = GluingMap::order_preserving(&f3, &f3).unwrap();
        assert_eq!(connected_sum(&s3, &s4, &g).unwrap_err(), GeneratorError::DimensionMismatch(3, 4));
        assert!(GluingMap::new(f3.clone(), vec![0, 0, 1]).is_err());
        assert!(GluingMap::new(f4, vec![0, 1, 2]).is_err());
        let stacked = stack(&s3, &f3).unwrap();
        let g = GluingMap::new(f3, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            connected_sum(&s3, &stacked, &g).unwrap_err(),
            GeneratorError::NotAFacet(_)
        ));
    }

    #[test]
    fn waist_examples() {
        let w = waist_polytope(4).unwrap();
        assert_eq!(w.complex.vertex_count(), 22);
        assert_eq!(w.expected_cut_size, 10);
        assert_eq!(w.left.len() + w.right.len(), 22);
        assert!(w.complex.validate().is_valid());
        let g = w.complex.skeleton_graph().unwrap();
        assert_eq!(g.min_degree(), 10);
        let cut = crossing_edges(&g, &w.left).unwrap();
        assert_eq!(cut.size, 10);
        assert!(!cut.trivial);
        assert!(waist_polytope(3).is_err());
    }
}
