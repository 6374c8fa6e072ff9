//! Polyhedral graphs (3-connected planar graphs): enumeration, complements,
//! duals, and the classification of polyhedra whose complements are also
//! polyhedral.

pub mod catalog;
pub mod classify;
pub mod connectivity;
pub mod duality;
pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod isomorphism;
pub mod planarity;

pub use graph::{DegreeSequence, Graph, GraphError, VertexSet, MAX_ORDER};
pub use isomorphism::CanonicalForm;
