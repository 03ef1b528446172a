//! Simplicial boundary complexes, minimum cuts of their edge graphs, and
//! exact checks of lower bounds on those cuts.

pub mod complex;
pub mod formats;
pub mod cuts;
pub mod generators;
pub mod hull;
pub mod verify;

pub use complex::{BoundaryComplex, ComplexError, Facet, FaceCounts, ValidationReport, VertexId, Violation};
pub use cuts::{global_min_cut, min_nontrivial_cut, Cut, CutError, Graph};
