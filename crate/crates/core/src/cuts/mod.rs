//! Simple undirected graphs and their edge cuts.
//!
//! [`global_min_cut`] uses the Stoer–Wagner contraction scheme,
//! [`min_nontrivial_cut`] runs unit-capacity max-flow between contracted
//! vertex pairs, and [`brute_force_cuts`] enumerates every bipartition of a
//! small graph as an independent oracle.

mod brute;
mod flow;
mod nontrivial;
mod stoer_wagner;

use std::collections::VecDeque;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use brute::{
    brute_force_cuts, brute_force_min_balanced_cut, brute_force_minimum_cuts, BruteForceCuts,
    BRUTE_FORCE_MAX_VERTICES,
};
pub use nontrivial::min_nontrivial_cut;
pub use stoer_wagner::global_min_cut;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {{{0}, {1}}}")]
    ParallelEdge(usize, usize),
    #[error("cut side is empty")]
    EmptySide,
    #[error("cut side contains every vertex")]
    FullSide,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {min} vertices, has {n}")]
    TooFewVertices { min: usize, n: usize },
    #[error("graph has {n} vertices; exhaustive enumeration is limited to {max}")]
    TooLarge { max: usize, n: usize },
}

/// Undirected simple graph on vertices `0..n`, adjacency lists sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, CutError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(CutError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(CutError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(CutError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adjacency, edge_count })
    }

    /// Caller guarantees loop-free, in-range, duplicate-free edges.
    pub(crate) fn from_sorted_unique_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency, edge_count: edges.len() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_sorted_unique_edges(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (0..n - 1).map(|u| (u, u + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Graph::from_sorted_unique_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_sorted_unique_edges(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// Smallest vertex degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }
}

/// Free-function form of [`Graph::min_degree`].
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("edges", &self.edges())?;
        s.serialize_field("n", &self.vertex_count())?;
        s.end()
    }
}

pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}

/// An edge cut `E(X, V \ X)`.
///
/// `side` is canonical: the smaller side, or on a tie the side holding
/// vertex 0. A cut is trivial when one side is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub side: Vec<usize>,
    pub crossing: Vec<(usize, usize)>,
    pub size: usize,
    pub trivial: bool,
}

impl Cut {
    /// The other side of the bipartition.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        let mut in_side = vec![false; n];
        for &v in &self.side {
            in_side[v] = true;
        }
        (0..n).filter(|&v| !in_side[v]).collect()
    }
}

/// Computes the cut with `side` on one side.
pub fn crossing_edges(g: &Graph, side: &[usize]) -> Result<Cut, CutError> {
    let n = g.vertex_count();
    let mut in_side = vec![false; n];
    for &v in side {
        if v >= n {
            return Err(CutError::VertexOutOfRange { vertex: v, n });
        }
        in_side[v] = true;
    }
    cut_from_membership(g, &in_side)
}

pub(crate) fn cut_from_membership(g: &Graph, in_side: &[bool]) -> Result<Cut, CutError> {
    let n = g.vertex_count();
    let count = in_side.iter().filter(|&&b| b).count();
    if count == 0 {
        return Err(CutError::EmptySide);
    }
    if count == n {
        return Err(CutError::FullSide);
    }
    let crossing: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| in_side[u] != in_side[v]).collect();
    // Keep the smaller side; on a tie keep the one holding vertex 0.
    let keep = if 2 * count != n { 2 * count < n } else { in_side[0] };
    let side: Vec<usize> = (0..n).filter(|&v| in_side[v] == keep).collect();
    let trivial = count == 1 || count == n - 1;
    Ok(Cut { size: crossing.len(), side, crossing, trivial })
}
