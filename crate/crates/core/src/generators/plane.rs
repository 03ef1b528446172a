use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{random_facet, simplex, stack, GeneratorError};
use crate::complex::{BoundaryComplex, VertexId};

/// Redraws allowed per flip step before the walk stops early.
const FLIP_RETRIES: usize = 64;

/// Diagonal flip on a 3-dimensional complex: the two facets `{u, v, x}` and
/// `{u, v, y}` on edge `{u, v}` become `{x, y, u}` and `{x, y, v}`.
pub fn flip(c: &BoundaryComplex, u: VertexId, v: VertexId) -> Result<BoundaryComplex, GeneratorError> {
    if c.dim() != 3 {
        return Err(GeneratorError::FlipNeedsDimensionThree(c.dim()));
    }
    let on_edge: Vec<_> = c.facets().filter(|f| f.contains(u) && f.contains(v)).collect();
    if u == v || on_edge.len() != 2 {
        return Err(GeneratorError::NotARidge(u, v));
    }
    let apex = |f: &crate::complex::Facet| {
        *f.vertices().iter().find(|&&w| w != u && w != v).expect("triangle")
    };
    let (x, y) = (apex(on_edge[0]), apex(on_edge[1]));
    if x == y || c.facets().any(|f| f.contains(x) && f.contains(y)) {
        return Err(GeneratorError::FlipBlocked(x.min(y), x.max(y)));
    }
    let removed = [on_edge[0].clone(), on_edge[1].clone()];
    let facets = c
        .facets()
        .filter(|f| !removed.contains(f))
        .map(|f| f.vertices().to_vec())
        .chain([vec![x, y, u], vec![x, y, v]]);
    Ok(BoundaryComplex::new(3, c.vertex_count(), facets.collect::<Vec<_>>())?)
}

/// A generated plane triangulation and the number of flips actually applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTriangulation {
    pub complex: BoundaryComplex,
    pub flips_performed: usize,
}

/// Starts from the tetrahedron, stacks `v - 4` times on random facets, then
/// runs a walk of `flips` random diagonal flips. Each flip step draws an
/// edge uniformly; blocked edges are redrawn up to a fixed retry budget,
/// after which the walk stops.
pub fn random_plane_triangulation(
    v: usize,
    flips: usize,
    seed: u64,
) -> Result<PlaneTriangulation, GeneratorError> {
    if v < 4 {
        return Err(GeneratorError::TooFewVertices { min: 4, got: v });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = simplex(3)?;
    while c.vertex_count() < v {
        let f = random_facet(&c, &mut rng);
        c = stack(&c, &f)?;
    }

    let mut performed = 0;
    'walk: for _ in 0..flips {
        let edges = c.edges();
        for _ in 0..FLIP_RETRIES {
            let (a, b) = edges[rng.random_range(0..edges.len())];
            match flip(&c, a, b) {
                Ok(next) => {
                    c = next;
                    performed += 1;
                    continue 'walk;
                }
                Err(GeneratorError::FlipBlocked(..)) => continue,
                Err(e) => return Err(e),
            }
        }
        break;
    }
    Ok(PlaneTriangulation { complex: c, flips_performed: performed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_when_nothing_to_do() {
        let t = random_plane_triangulation(4, 0, 9).unwrap();
        assert_eq!(t.complex, simplex(3).unwrap());
        assert_eq!(t.flips_performed, 0);
    }

    #[test]
    fn tetrahedron_edges_cannot_flip() {
        let t = simplex(3).unwrap();
        for (u, v) in t.edges() {
            assert!(matches!(flip(&t, u, v), Err(GeneratorError::FlipBlocked(..))));
        }
        // The walk gives up instead of looping.
        assert_eq!(random_plane_triangulation(4, 10, 1).unwrap().flips_performed, 0);
    }

    #[test]
    fn flip_is_an_involution_and_keeps_edge_count() {
        let c = random_plane_triangulation(12, 0, 3).unwrap().complex;
        let mut flipped_any = false;
        for (u, v) in c.edges() {
            let Ok(once) = flip(&c, u, v) else { continue };
            flipped_any = true;
            assert!(once.validate().is_valid());
            assert_eq!(once.face_counts().edges, c.face_counts().edges);
            let on_new: Vec<_> = once.edges().into_iter().filter(|e| !c.edges().contains(e)).collect();
            assert_eq!(on_new.len(), 1);
            let (x, y) = on_new[0];
            assert_eq!(flip(&once, x, y).unwrap(), c);
        }
        assert!(flipped_any);
    }

    #[test]
    fn flip_errors() {
        let s4 = simplex(4).unwrap();
        assert_eq!(flip(&s4, 0, 1).unwrap_err(), GeneratorError::FlipNeedsDimensionThree(4));
        let c = random_plane_triangulation(8, 0, 5).unwrap().complex;
        let non_edge = (0..8)
            .flat_map(|u| (u + 1..8).map(move |v| (u, v)))
            .find(|e| !c.edges().contains(e))
            .unwrap();
        assert_eq!(flip(&c, non_edge.0, non_edge.1).unwrap_err(), GeneratorError::NotARidge(non_edge.0, non_edge.1));
    }

    #[test]
    fn generated_triangulations_are_valid_and_deterministic() {
        for seed in 0..20 {
            let v = 5 + (seed as usize % 30);
            let a = random_plane_triangulation(v, 3 * v, seed).unwrap();
            let b = random_plane_triangulation(v, 3 * v, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.complex.validate().is_valid());
            assert_eq!(a.complex.face_counts().edges, 3 * v - 6);
            assert_eq!(a.complex.vertex_count(), v);
        }
        let a = random_plane_triangulation(30, 60, 1).unwrap();
        let b = random_plane_triangulation(30, 60, 2).unwrap();
        assert_ne!(a.complex, b.complex);
    }
}
