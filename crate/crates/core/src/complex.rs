//! Combinatorial boundary complexes of simplicial polytopes.
//!
//! A complex is a deduplicated set of facets, each a sorted list of `dim`
//! vertex labels drawn from `0..n`. Polytopality is never decided here:
//! [`BoundaryComplex::validate`] checks the pseudo-manifold condition,
//! connectivity of the dual graph and the minimum-degree bound that the
//! graph of every `d`-polytope satisfies.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cuts::Graph;

/// Vertex label, contiguous in `0..n` within its complex.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("vertex {0} repeated within a facet")]
    RepeatedVertex(VertexId),
    #[error("relabeling is not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("invalid complex: {0}")]
    Invalid(ValidationReport),
}

/// A facet in canonical form: strictly increasing vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Facet(Vec<VertexId>);

impl Facet {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self, ComplexError> {
        vertices.sort_unstable();
        if let Some(pair) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(pair[0]));
        }
        Ok(Facet(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Facet) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// The ridge left after dropping the vertex at `position`.
    pub fn ridge_without(&self, position: usize) -> Vec<VertexId> {
        let mut ridge = self.0.clone();
        ridge.remove(position);
        ridge
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// One violated invariant, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoFacets,
    FacetSize { facet: Facet, expected: usize },
    UnusedVertex { vertex: VertexId },
    RidgeDegree { ridge: Vec<VertexId>, count: usize },
    DualDisconnected { components: usize, witness: (Facet, Facet) },
    DegreeBelowDimension { vertex: VertexId, degree: usize, dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoFacets => write!(f, "complex has no facets"),
            Violation::FacetSize { facet, expected } => {
                write!(f, "facet {facet} has {} vertices, expected {expected}", facet.len())
            }
            Violation::UnusedVertex { vertex } => write!(f, "vertex {vertex} lies in no facet"),
            Violation::RidgeDegree { ridge, count } => {
                write!(f, "ridge {ridge:?} lies in {count} facets, expected 2")
            }
            Violation::DualDisconnected { components, witness } => write!(
                f,
                "dual graph has {components} components (e.g. {} and {})",
                witness.0, witness.1
            ),
            Violation::DegreeBelowDimension { vertex, degree, dim } => {
                write!(f, "vertex {vertex} has degree {degree} < {dim}")
            }
        }
    }
}

/// Outcome of [`BoundaryComplex::validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(3) {
            write!(f, "; {v}")?;
        }
        if self.violations.len() > 3 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

/// Vertex, edge and facet counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCounts {
    pub vertices: usize,
    pub edges: usize,
    pub facets: usize,
}

/// Boundary complex of a simplicial `dim`-polytope on vertices `0..n`.
///
/// Immutable once built; constructors in [`crate::generators`] always produce
/// contiguous labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryComplex {
    dim: usize,
    n: usize,
    facets: BTreeSet<Facet>,
}

impl BoundaryComplex {
    /// Builds a complex from raw facets, canonicalizing and deduplicating
    /// them. Only labels and repeated vertices are checked here; everything
    /// else is reported by [`validate`](Self::validate).
    pub fn new<I, F>(dim: usize, n: usize, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<VertexId>>,
    {
        if dim < 2 {
            return Err(ComplexError::DimensionTooSmall(dim));
        }
        let mut set = BTreeSet::new();
        for raw in facets {
            let facet = Facet::new(raw.into())?;
            if let Some(&vertex) = facet.vertices().iter().find(|&&v| v >= n) {
                return Err(ComplexError::VertexOutOfRange { vertex, n });
            }
            set.insert(facet);
        }
        Ok(BoundaryComplex { dim, n, facets: set })
    }

    /// Builds a complex whose labels are the used vertices renumbered
    /// `0..k` in increasing order. Returns the complex and, for each new
    /// label, the original one.
    pub fn compacted<I, F>(dim: usize, facets: I) -> Result<(Self, Vec<VertexId>), ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<VertexId>>,
    {
        let raw: Vec<Vec<VertexId>> = facets.into_iter().map(Into::into).collect();
        let used: BTreeSet<VertexId> = raw.iter().flatten().copied().collect();
        let old_labels: Vec<VertexId> = used.into_iter().collect();
        let new_label: HashMap<VertexId, VertexId> =
            old_labels.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let relabeled = raw
            .into_iter()
            .map(|f| f.into_iter().map(|v| new_label[&v]).collect::<Vec<_>>());
        let complex = BoundaryComplex::new(dim, old_labels.len(), relabeled)?;
        Ok((complex, old_labels))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> impl Iterator<Item = &Facet> + '_ {
        self.facets.iter()
    }

    pub fn facet_set(&self) -> &BTreeSet<Facet> {
        &self.facets
    }

    pub fn contains_facet(&self, facet: &Facet) -> bool {
        self.facets.contains(facet)
    }

    /// Every 2-subset of some facet, sorted, each pair `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges = Vec::new();
        for facet in &self.facets {
            let vs = facet.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Number of facets containing each ridge, over facets of the right size.
    pub fn ridge_multiplicities(&self) -> HashMap<Vec<VertexId>, usize> {
        let mut counts = HashMap::new();
        for facet in self.facets.iter().filter(|f| f.len() == self.dim) {
            for i in 0..facet.len() {
                *counts.entry(facet.ridge_without(i)).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.facets.is_empty() {
            violations.push(Violation::NoFacets);
            return ValidationReport { violations };
        }

        for facet in self.facets.iter().filter(|f| f.len() != self.dim) {
            violations.push(Violation::FacetSize { facet: facet.clone(), expected: self.dim });
        }

        let mut used = vec![false; self.n];
        for v in self.facets.iter().flat_map(|f| f.vertices()) {
            used[*v] = true;
        }
        for (vertex, _) in used.iter().enumerate().filter(|(_, u)| !**u) {
            violations.push(Violation::UnusedVertex { vertex });
        }

        // Ridge degrees and dual connectivity in one pass.
        let proper: Vec<&Facet> = self.facets.iter().filter(|f| f.len() == self.dim).collect();
        let mut ridges: HashMap<Vec<VertexId>, (usize, usize)> = HashMap::new();
        let mut dsu = DisjointSets::new(proper.len());
        for (idx, facet) in proper.iter().enumerate() {
            for i in 0..facet.len() {
                let entry = ridges.entry(facet.ridge_without(i)).or_insert((0, idx));
                entry.0 += 1;
                dsu.union(entry.1, idx);
            }
        }
        let mut bad_ridges: Vec<(Vec<VertexId>, usize)> = ridges
            .into_iter()
            .filter(|(_, (count, _))| *count != 2)
            .map(|(ridge, (count, _))| (ridge, count))
            .collect();
        bad_ridges.sort();
        violations.extend(
            bad_ridges
                .into_iter()
                .map(|(ridge, count)| Violation::RidgeDegree { ridge, count }),
        );

        if !proper.is_empty() {
            let root0 = dsu.find(0);
            let mut roots = BTreeSet::new();
            let mut other = None;
            for idx in 0..proper.len() {
                let r = dsu.find(idx);
                roots.insert(r);
                if other.is_none() && r != root0 {
                    other = Some(idx);
                }
            }
            if let Some(idx) = other {
                violations.push(Violation::DualDisconnected {
                    components: roots.len(),
                    witness: (proper[0].clone(), proper[idx].clone()),
                });
            }
        }

        let mut degree = vec![0usize; self.n];
        for (u, v) in self.edges() {
            degree[u] += 1;
            degree[v] += 1;
        }
        for (vertex, &d) in degree.iter().enumerate() {
            if used[vertex] && d < self.dim {
                violations.push(Violation::DegreeBelowDimension { vertex, degree: d, dim: self.dim });
            }
        }

        ValidationReport { violations }
    }

    /// The 1-skeleton. Rejects complexes that fail validation.
    pub fn skeleton_graph(&self) -> Result<Graph, ComplexError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(ComplexError::Invalid(report));
        }
        Ok(self.edge_graph())
    }

    /// Graph of the 2-subsets of facets, without validating first.
    pub(crate) fn edge_graph(&self) -> Graph {
        Graph::from_sorted_unique_edges(self.n, self.edges())
    }

    pub fn face_counts(&self) -> FaceCounts {
        FaceCounts { vertices: self.n, edges: self.edges().len(), facets: self.facets.len() }
    }

    /// Applies `v -> perm[v]` to every label.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self, ComplexError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(ComplexError::BadPermutation(self.n));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(ComplexError::BadPermutation(self.n));
            }
        }
        BoundaryComplex::new(
            self.dim,
            self.n,
            self.facets
                .iter()
                .map(|f| f.vertices().iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
