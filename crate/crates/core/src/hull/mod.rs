//! Exact convex-hull oracle for point configurations in general position.
//!
//! Every predicate is the sign of an integer determinant; coordinates are
//! arbitrary-precision rationals and nothing is ever rounded. Facets are
//! found by brute force over all `d`-subsets, which is slow but has no
//! degenerate-case code paths.

mod predicates;

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{BoundaryComplex, ComplexError};

pub use predicates::Orientation;
use predicates::{determinant_sign, homogeneous_row, rank};

/// Attempts per point before [`random_general_position`] gives up.
pub const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HullError {
    #[error("point {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("need {needed} points in dimension {dim}, got {got}")]
    TooFewPoints { dim: usize, needed: usize, got: usize },
    #[error("configuration is not in general position")]
    Degenerate,
    #[error("moment-curve parameter {0} is repeated")]
    RepeatedParameter(i64),
    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },
    #[error("could not place point {index} in general position after {attempts} draws; enlarge the coordinate box")]
    ResamplingExhausted { index: usize, attempts: usize },
    #[error("point {0} is not a vertex of the hull")]
    NotHullVertex(usize),
    #[error("hull has {got} vertices; deleting one needs at least {needed}")]
    TooFewHullVertices { needed: usize, got: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// `n` points with exact rational coordinates in dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<BigRational>>) -> Result<Self, HullError> {
        if dim == 0 {
            return Err(HullError::ZeroDimension);
        }
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(HullError::DimensionMismatch { index, expected: dim, got: p.len() });
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn from_integers(dim: usize, points: &[Vec<i64>]) -> Result<Self, HullError> {
        let points = points
            .iter()
            .map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        PointConfiguration::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[BigRational] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Self {
        PointConfiguration {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(|p| homogeneous_row(p)).collect()
    }
}

/// Sign of `det(p_1 - p_0, ..., p_d - p_0)` for `d + 1` points of
/// dimension `d`. Zero exactly when the points are affinely dependent.
pub fn orientation(points: &[Vec<BigRational>]) -> Result<Orientation, HullError> {
    let d = points.len().saturating_sub(1);
    if d == 0 {
        return Err(HullError::TooFewPoints { dim: 0, needed: 2, got: points.len() });
    }
    if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
        return Err(HullError::DimensionMismatch { index, expected: d, got: p.len() });
    }
    Ok(determinant_sign(points.iter().map(|p| homogeneous_row(p)).collect()))
}

/// True when every `d + 1` of the points are affinely independent (and,
/// for fewer than `d + 1` points, when all of them are).
pub fn in_general_position(c: &PointConfiguration) -> bool {
    let rows = c.rows();
    if rows.len() <= c.dim {
        return rank(&rows) == rows.len();
    }
    (0..rows.len())
        .combinations(c.dim + 1)
        .all(|s| sign_of(&rows, &s) != Orientation::Zero)
}

fn sign_of(rows: &[Vec<BigInt>], indices: &[usize]) -> Orientation {
    determinant_sign(indices.iter().map(|&i| rows[i].clone()).collect())
}

/// Boundary complex of a hull together with the hull's vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    /// Labels `0..k`, where label `i` is input point `vertices[i]`.
    pub complex: BoundaryComplex,
    pub vertices: Vec<usize>,
    /// Input points that are not hull vertices.
    pub excluded: Vec<usize>,
}

impl Hull {
    /// Hull edges in input-point indices, sorted.
    pub fn edges_in_input_labels(&self) -> BTreeSet<(usize, usize)> {
        self.complex
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (u, v) = (self.vertices[a], self.vertices[b]);
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Facets of the hull: the `d`-subsets whose hyperplane has every other
/// point strictly on one side.
pub fn facets_brute_force(c: &PointConfiguration) -> Result<Hull, HullError> {
    let d = c.dim;
    if d < 2 {
        return Err(ComplexError::DimensionTooSmall(d).into());
    }
    let n = c.len();
    if n < d + 1 {
        return Err(HullError::TooFewPoints { dim: d, needed: d + 1, got: n });
    }
    if !in_general_position(c) {
        return Err(HullError::Degenerate);
    }
    let rows = c.rows();
    let mut facets = Vec::new();
    let mut indices = Vec::with_capacity(d + 1);
    for subset in (0..n).combinations(d) {
        let mut side = None;
        let mut supporting = true;
        for p in (0..n).filter(|p| !subset.contains(p)) {
            indices.clear();
            indices.extend_from_slice(&subset);
            indices.push(p);
            let s = sign_of(&rows, &indices);
            match side {
                None => side = Some(s),
                Some(prev) if prev != s => {
                    supporting = false;
                    break;
                }
                _ => {}
            }
        }
        if supporting {
            facets.push(subset);
        }
    }
    let (complex, vertices) = BoundaryComplex::compacted(d, facets)?;
    let excluded = (0..n).filter(|i| vertices.binary_search(i).is_err()).collect();
    Ok(Hull { complex, vertices, excluded })
}

/// Points `(t, t^2, ..., t^d)` for `t` in `params` (default `1..=n`).
pub fn moment_curve_points(
    d: usize,
    n: usize,
    params: Option<&[i64]>,
) -> Result<PointConfiguration, HullError> {
    let params: Vec<i64> = match params {
        Some(p) if p.len() != n => {
            return Err(HullError::ParameterCount { expected: n, got: p.len() })
        }
        Some(p) => p.to_vec(),
        None => (1..=n as i64).collect(),
    };
    let mut seen = BTreeSet::new();
    if let Some(&t) = params.iter().find(|t| !seen.insert(**t)) {
        return Err(HullError::RepeatedParameter(t));
    }
    let points = params
        .iter()
        .map(|&t| {
            let t = BigInt::from(t);
            let mut power = BigInt::from(1);
            (0..d)
                .map(|_| {
                    power *= &t;
                    BigRational::from_integer(power.clone())
                })
                .collect()
        })
        .collect();
    PointConfiguration::new(d, points)
}

/// `n` integer points with coordinates uniform in `[-bound, bound]`, each
/// redrawn until it keeps the configuration in general position.
pub fn random_general_position(
    d: usize,
    n: usize,
    seed: u64,
    bound: u64,
) -> Result<PointConfiguration, HullError> {
    if d == 0 {
        return Err(HullError::ZeroDimension);
    }
    if n < d + 1 {
        return Err(HullError::TooFewPoints { dim: d, needed: d + 1, got: n });
    }
    let bound = i64::try_from(bound).unwrap_or(i64::MAX / 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for index in 0..n {
        let mut placed = false;
        for _ in 0..RESAMPLE_BUDGET {
            let p: Vec<i64> = (0..d).map(|_| rng.random_range(-bound..=bound)).collect();
            let row: Vec<BigInt> =
                std::iter::once(BigInt::from(1)).chain(p.iter().map(|&x| BigInt::from(x))).collect();
            if keeps_general_position(&rows, &row, d) {
                points.push(p);
                rows.push(row);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(HullError::ResamplingExhausted { index, attempts: RESAMPLE_BUDGET });
        }
    }
    PointConfiguration::from_integers(d, &points)
}

/// Whether `candidate` together with any `min(k, d)` of the existing `k`
/// rows stays affinely independent.
fn keeps_general_position(rows: &[Vec<BigInt>], candidate: &[BigInt], d: usize) -> bool {
    let k = rows.len();
    if k < d {
        let mut all = rows.to_vec();
        all.push(candidate.to_vec());
        return rank(&all) == k + 1;
    }
    (0..k).combinations(d).all(|subset| {
        let mut m: Vec<Vec<BigInt>> = subset.iter().map(|&i| rows[i].clone()).collect();
        m.push(candidate.to_vec());
        determinant_sign(m) != Orientation::Zero
    })
}

/// An edge `{u, v}` that appears when `w` is deleted, with an endpoint not
/// adjacent to `w` in the original hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// Result of deleting one hull vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFigureCheck {
    /// Edges of `conv(V \ {w})` that are not edges of `conv(V)`.
    pub new_edges: Vec<(usize, usize)>,
    pub violations: Vec<LemmaViolation>,
}

/// Deletes hull vertex `w` and checks that every edge created by the
/// deletion joins two neighbours of `w`.
///
/// `V` is the vertex set of the hull of `c`; points of `c` that are not
/// hull vertices play no part. All indices refer to points of `c`.
pub fn check_vertex_figure_lemma(
    c: &PointConfiguration,
    w: usize,
) -> Result<VertexFigureCheck, HullError> {
    let hull = facets_brute_force(c)?;
    check_vertex_deletion(c, &hull, w)
}

/// Same as [`check_vertex_figure_lemma`] with the hull of `c` precomputed.
pub fn check_vertex_deletion(
    c: &PointConfiguration,
    hull: &Hull,
    w: usize,
) -> Result<VertexFigureCheck, HullError> {
    if hull.vertices.binary_search(&w).is_err() {
        return Err(HullError::NotHullVertex(w));
    }
    let d = c.dim();
    if hull.vertices.len() < d + 2 {
        return Err(HullError::TooFewHullVertices { needed: d + 2, got: hull.vertices.len() });
    }
    let before = hull.edges_in_input_labels();

    let kept: Vec<usize> = hull.vertices.iter().copied().filter(|&v| v != w).collect();
    let reduced = facets_brute_force(&c.subset(&kept))?;
    let after: BTreeSet<(usize, usize)> = reduced
        .complex
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (u, v) = (kept[reduced.vertices[a]], kept[reduced.vertices[b]]);
            (u.min(v), u.max(v))
        })
        .collect();

    let adjacent_to_w = |x: usize| before.contains(&(x.min(w), x.max(w)));
    let new_edges: Vec<(usize, usize)> = after.difference(&before).copied().collect();
    let violations = new_edges
        .iter()
        .filter(|&&(u, v)| !(adjacent_to_w(u) && adjacent_to_w(v)))
        .map(|&(u, v)| LemmaViolation { u, v, w })
        .collect();
    Ok(VertexFigureCheck { new_edges, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cyclic;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn orientation_examples() {
        for d in 1..=5 {
            let mut pts = vec![vec![rat(0, 1); d]];
            for i in 0..d {
                let mut e = vec![rat(0, 1); d];
                e[i] = rat(1, 1);
                pts.push(e);
            }
            assert_eq!(orientation(&pts).unwrap(), Orientation::Positive);
            pts.swap(0, 1);
            assert_eq!(orientation(&pts).unwrap(), Orientation::Negative);
            let repeated: Vec<_> = pts.iter().take(d).cloned().chain([pts[0].clone()]).collect();
            assert_eq!(orientation(&repeated).unwrap(), Orientation::Zero);
        }
        assert!(matches!(
            orientation(&[vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1)]]),
            Err(HullError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn orientation_with_fractions() {
        // (0,0), (1/2, 0), (0, 1/3): positive; mirrored: negative.
        let pts = vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]];
        assert_eq!(orientation(&pts).unwrap(), Orientation::Positive);
        let mirrored = vec![vec![rat(0, 1), rat(0, 1)], vec![rat(-1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]];
        assert_eq!(orientation(&mirrored).unwrap(), Orientation::Negative);
    }

    #[test]
    fn general_position_checks() {
        assert!(in_general_position(&moment_curve_points(3, 5, None).unwrap()));
        let dup = PointConfiguration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!in_general_position(&dup));
        let collinear = PointConfiguration::from_integers(2, &[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap();
        assert!(!in_general_position(&collinear));
    }

    #[test]
    fn moment_curve_coordinates() {
        let c = moment_curve_points(4, 3, Some(&[2, 5, -1])).unwrap();
        let expected: Vec<BigRational> = [2, 4, 8, 16].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(c.point(0), expected.as_slice());
        assert_eq!(
            moment_curve_points(3, 3, Some(&[1, 2, 1])).unwrap_err(),
            HullError::RepeatedParameter(1)
        );
        let simplex_hull = facets_brute_force(&moment_curve_points(4, 5, None).unwrap()).unwrap();
        assert_eq!(simplex_hull.complex.facet_count(), 5);
    }

    #[test]
    fn hull_examples() {
        let tet = PointConfiguration::from_integers(3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert_eq!(facets_brute_force(&tet).unwrap().complex.facet_count(), 4);

        // Tetrahedron with its barycenter (scaled by 4 to stay integral).
        let with_center = PointConfiguration::from_integers(
            3,
            &[vec![0, 0, 0], vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4], vec![1, 1, 1]],
        )
        .unwrap();
        let hull = facets_brute_force(&with_center).unwrap();
        assert_eq!(hull.complex.facet_count(), 4);
        assert_eq!(hull.excluded, vec![4]);
        assert_eq!(hull.vertices, vec![0, 1, 2, 3]);

        let c35 = facets_brute_force(&moment_curve_points(3, 5, None).unwrap()).unwrap();
        assert_eq!(c35.complex, cyclic(3, 5).unwrap());

        let square = PointConfiguration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(facets_brute_force(&square).unwrap().complex.facet_count(), 4);
        let degenerate = PointConfiguration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(facets_brute_force(&degenerate).unwrap_err(), HullError::Degenerate);
    }

    #[test]
    fn random_configurations() {
        let c = random_general_position(3, 10, 7, 1000).unwrap();
        assert_eq!(c.len(), 10);
        assert!(in_general_position(&c));
        assert_eq!(c, random_general_position(3, 10, 7, 1000).unwrap());

        let tet = random_general_position(3, 4, 99, 5).unwrap();
        assert_eq!(facets_brute_force(&tet).unwrap().complex.facet_count(), 4);

        assert!(matches!(
            random_general_position(3, 5, 1, 0),
            Err(HullError::ResamplingExhausted { .. })
        ));
    }

    #[test]
    fn vertex_figure_on_octahedron() {
        // Slightly perturbed octahedron; perturbations are distinct primes
        // over 97 so no four points are coplanar.
        let pts = vec![
            vec![rat(1, 1), rat(1, 97), rat(0, 1)],
            vec![rat(-1, 1), rat(0, 1), rat(2, 97)],
            vec![rat(3, 97), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(-1, 1), rat(5, 97)],
            vec![rat(7, 97), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(11, 97), rat(-1, 1)],
        ];
        let c = PointConfiguration::new(3, pts).unwrap();
        assert!(in_general_position(&c));
        let hull = facets_brute_force(&c).unwrap();
        assert_eq!(hull.vertices.len(), 6);
        for w in 0..6 {
            let check = check_vertex_figure_lemma(&c, w).unwrap();
            // The square around w gains one diagonal; both ends neighbour w.
            assert_eq!(check.new_edges.len(), 1, "w={w}");
            assert!(check.violations.is_empty());
        }
    }

    #[test]
    fn vertex_figure_apex_over_simplex() {
        // Simplex plus an apex beyond one facet: deleting the apex loses edges only.
        let c = PointConfiguration::from_integers(
            3,
            &[vec![0, 0, 0], vec![6, 1, 0], vec![1, 6, 0], vec![0, 1, 5], vec![2, 2, -1]],
        )
        .unwrap();
        let hull = facets_brute_force(&c).unwrap();
        assert_eq!(hull.vertices.len(), 5);
        let check = check_vertex_figure_lemma(&c, 4).unwrap();
        assert!(check.new_edges.is_empty());
        assert!(check.violations.is_empty());

        let tet = PointConfiguration::from_integers(3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert_eq!(
            check_vertex_figure_lemma(&tet, 0).unwrap_err(),
            HullError::TooFewHullVertices { needed: 5, got: 4 }
        );
    }
}
