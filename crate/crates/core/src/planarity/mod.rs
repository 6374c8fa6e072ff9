//! Planarity testing and combinatorial embeddings.
//!
//! Embeddings are spherical rotation systems: no face is distinguished as
//! the outer one. The orientation convention is fixed throughout the crate:
//! `rotation(v)` lists the neighbours of `v` in cyclic order, and the face
//! walk entering `v` along the dart `u -> v` leaves along `v -> w`, where `w`
//! is the neighbour that follows `u` in `rotation(v)`.
//!
//! Embedding uses the Demoucron-Malgrange-Pertuiset path-addition method on
//! each biconnected block, then glues the blocks at cut vertices. It is
//! quadratic in the number of edges per block, not linear, which is
//! irrelevant at 16 vertices.

mod dmp;
mod kuratowski;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

pub use kuratowski::{kuratowski_oracle, KURATOWSKI_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("rotation at vertex {vertex} is not a permutation of its neighbours")]
    NotPermutation { vertex: usize },
    #[error("rotation lists {from} -> {to} without the reverse dart")]
    Asymmetric { from: usize, to: usize },
    #[error("rotation system has {0} vertices; supported range is 1..={MAX_ORDER}")]
    BadOrder(usize),
    #[error("Kuratowski oracle supports at most {KURATOWSKI_MAX_ORDER} vertices, got {0}")]
    OracleTooLarge(usize),
}

/// Cyclic neighbour orders, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<u8>>,
}

impl RotationSystem {
    /// Wraps raw rotations without checking them; [`trace_faces`] and
    /// [`RotationSystem::validate`] report malformed input.
    pub fn new(rotation: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem {
            rotation: rotation
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as u8).collect())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.rotation[v].iter().map(|&u| u as usize)
    }

    /// Checks that every list is a duplicate-free, loop-free neighbour list
    /// and that darts come in opposite pairs.
    pub fn validate(&self) -> Result<(), EmbeddingError> {
        let n = self.order();
        if n == 0 || n > MAX_ORDER {
            return Err(EmbeddingError::BadOrder(n));
        }
        let mut rows = [0u16; MAX_ORDER];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &u in rot {
                let u = u as usize;
                if u >= n || u == v || rows[v] >> u & 1 == 1 {
                    return Err(EmbeddingError::NotPermutation { vertex: v });
                }
                rows[v] |= 1 << u;
            }
        }
        for v in 0..n {
            for u in 0..n {
                if rows[v] >> u & 1 == 1 && rows[u] >> v & 1 == 0 {
                    return Err(EmbeddingError::Asymmetric { from: v, to: u });
                }
            }
        }
        Ok(())
    }

    /// The underlying graph.
    pub fn graph(&self) -> Result<Graph, EmbeddingError> {
        self.validate()?;
        let edges = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().map(move |&u| (v, u as usize)));
        Ok(Graph::from_edges(self.order(), edges).expect("validated rotation"))
    }

    /// True when the rotation at each vertex is a permutation of exactly
    /// that vertex's neighbours in `g`.
    pub fn is_rotation_of(&self, g: &Graph) -> bool {
        self.order() == g.order() && self.graph().is_ok_and(|h| h == *g)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> RotationSystem {
        RotationSystem {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// Face walks of an embedding. Each walk lists the tails of its darts in
/// traversal order; an isolated vertex contributes the one-vertex walk `[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<u8>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.faces.iter().map(|f| f.as_slice())
    }

    /// Boundary lengths, in face order.
    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    /// Whether every walk visits each of its vertices once.
    pub fn all_simple_cycles(&self) -> bool {
        self.faces.iter().all(|f| {
            let mut seen = 0u16;
            f.len() >= 3
                && f.iter().all(|&v| {
                    let fresh = seen >> v & 1 == 0;
                    seen |= 1 << v;
                    fresh
                })
        })
    }
}

/// Traces every face of a rotation system.
pub fn trace_faces(rs: &RotationSystem) -> Result<FaceSet, EmbeddingError> {
    rs.validate()?;
    let n = rs.order();
    // next[v][u]: the neighbour after u in rotation(v).
    let mut next = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
    for (row, rot) in next.iter_mut().zip(&rs.rotation).take(n) {
        for (i, &u) in rot.iter().enumerate() {
            row[u as usize] = rot[(i + 1) % rot.len()];
        }
    }
    let mut used = [0u16; MAX_ORDER];
    let mut faces = Vec::new();
    for v in 0..n {
        if rs.rotation[v].is_empty() {
            faces.push(vec![v as u8]);
            continue;
        }
        for &u in &rs.rotation[v] {
            if used[v] >> u & 1 == 1 {
                continue;
            }
            let mut walk = Vec::new();
            let (mut tail, mut head) = (v, u as usize);
            while used[tail] >> head & 1 == 0 {
                used[tail] |= 1 << head;
                walk.push(tail as u8);
                let after = next[head][tail] as usize;
                tail = head;
                head = after;
            }
            faces.push(walk);
        }
    }
    Ok(FaceSet { faces })
}

/// Planarity test. The edge bound `q <= 3p - 6` is applied first.
pub fn is_planar(g: &Graph) -> bool {
    let (p, q) = (g.order(), g.size());
    if p >= 3 && q > 3 * p - 6 {
        return false;
    }
    dmp::embed(g).is_some()
}

/// A planar rotation system for `g`. Each connected component is embedded
/// on its own sphere, so tracing yields `q - p + 2c` faces for `c`
/// components: `q - p + 2` for connected input.
pub fn embed(g: &Graph) -> Result<RotationSystem, EmbeddingError> {
    let (p, q) = (g.order(), g.size());
    if p >= 3 && q > 3 * p - 6 {
        return Err(EmbeddingError::NonPlanar);
    }
    dmp::embed(g).ok_or(EmbeddingError::NonPlanar)
}
