//! Dual graphs of polyhedra.
//!
//! A polyhedron has a unique spherical embedding up to reflection, so its
//! dual is well defined up to isomorphism. Dual vertices are the faces of
//! [`embed`](crate::planarity::embed), ordered by boundary length and then
//! by the face walk read from its smallest vertex.

use thiserror::Error;

use crate::classify::is_polyhedral;
use crate::graph::{Graph, MAX_ORDER};
use crate::isomorphism::are_isomorphic;
use crate::planarity::{embed, trace_faces};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("dual is only defined here for polyhedral (3-connected planar) graphs")]
    NotPolyhedral,
    #[error("dual would have {0} vertices, more than {MAX_ORDER}")]
    TooManyFaces(usize),
}

/// A polyhedron's faces in dual-vertex order, with the dual itself.
#[derive(Debug, Clone)]
pub struct DualEmbedding {
    pub faces: Vec<Vec<u8>>,
    pub dual: Graph,
}

pub fn dual_embedding(g: &Graph) -> Result<DualEmbedding, DualError> {
    if !is_polyhedral(g) {
        return Err(DualError::NotPolyhedral);
    }
    let rs = embed(g).map_err(|_| DualError::NotPolyhedral)?;
    let traced = trace_faces(&rs).expect("embedder emits valid rotations");
    let mut faces: Vec<Vec<u8>> = traced
        .iter()
        .map(|f| {
            let start = f
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map_or(0, |(i, _)| i);
            let mut walk = f.to_vec();
            walk.rotate_left(start);
            walk
        })
        .collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if faces.len() > MAX_ORDER {
        return Err(DualError::TooManyFaces(faces.len()));
    }

    let mut face_of = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
    for (i, f) in faces.iter().enumerate() {
        for k in 0..f.len() {
            let (u, v) = (f[k] as usize, f[(k + 1) % f.len()] as usize);
            face_of[u][v] = i as u8;
        }
    }
    let mut edges = Vec::with_capacity(g.size());
    for (u, v) in g.edges() {
        let (a, b) = (face_of[u][v] as usize, face_of[v][u] as usize);
        debug_assert!(a != b, "a face on both sides of an edge means a bridge");
        edges.push((a, b));
    }
    let dual =
        Graph::from_edges(faces.len(), edges).expect("faces of a polyhedron give a simple dual");
    Ok(DualEmbedding { faces, dual })
}

pub fn dual(g: &Graph) -> Result<Graph, DualError> {
    dual_embedding(g).map(|d| d.dual)
}

pub fn is_self_dual(g: &Graph) -> Result<bool, DualError> {
    let d = dual(g)?;
    Ok(are_isomorphic(&d, g))
}
