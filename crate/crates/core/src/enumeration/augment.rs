//! Canonical augmentation over Tutte's wheel theorem.
//!
//! Every polyhedron that is not a wheel has an edge whose deletion, or whose
//! contraction (when the edge lies in no triangle), leaves a polyhedron. So
//! all polyhedra grow from wheels by the two inverse operations: adding an
//! edge, and splitting a vertex of degree at least four into two adjacent
//! vertices of degree at least three. A child is kept only when the
//! augmentation that produced it is the inverse of the child's canonical
//! reduction, which makes every class appear under exactly one parent.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::classify::is_polyhedral;
use crate::connectivity::is_3_connected;
use crate::graph::{Graph, VertexSet};
use crate::isomorphism::{canonical_form, canonical_form_colored, CanonicalForm};
use crate::planarity::is_planar;

use super::Limits;

/// A reduction of a polyhedron. Deletions outrank contractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Contract,
    Delete,
}

/// Isomorphism-invariant ranking of a reduction; larger is preferred.
type Key = (Kind, usize, usize, usize);

fn key(g: &Graph, kind: Kind, u: usize, v: usize) -> Key {
    let (du, dv) = (g.degree(u), g.degree(v));
    let around: usize = (g.neighbors(u) | g.neighbors(v))
        .iter()
        .map(|w| g.degree(w))
        .sum();
    (kind, du.max(dv), du.min(dv), around)
}

fn is_valid(g: &Graph, kind: Kind, u: usize, v: usize) -> bool {
    match kind {
        Kind::Delete => g.degree(u) > 3 && g.degree(v) > 3 && is_3_connected(&g.without_edge(u, v)),
        Kind::Contract => {
            (g.neighbors(u) & g.neighbors(v)).is_empty() && is_3_connected(&g.contract_edge(u, v))
        }
    }
}

fn edge_colors(g: &Graph, u: usize, v: usize) -> Vec<u8> {
    (0..g.order()).map(|w| u8::from(w == u || w == v)).collect()
}

/// Whether the valid reduction `(kind, u, v)` of `g` lies in the orbit of the
/// canonical reduction: no valid reduction ranks higher, and among the
/// equally ranked ones its edge-marked canonical form is the smallest.
fn is_canonical_reduction(g: &Graph, kind: Kind, u: usize, v: usize) -> bool {
    let ours = key(g, kind, u, v);
    let mut ties = Vec::new();
    for (a, b) in g.edges() {
        for k in [Kind::Delete, Kind::Contract] {
            let kk = key(g, k, a, b);
            if kk < ours || (k, a.min(b), a.max(b)) == (kind, u.min(v), u.max(v)) {
                continue;
            }
            if !is_valid(g, k, a, b) {
                continue;
            }
            if kk > ours {
                return false;
            }
            ties.push((a, b));
        }
    }
    if ties.is_empty() {
        return true;
    }
    let mine = canonical_form_colored(g, &edge_colors(g, u, v));
    ties.iter()
        .all(|&(a, b)| mine <= canonical_form_colored(g, &edge_colors(g, a, b)))
}

/// Canonical forms of the accepted children of one parent.
fn children(parent: &Graph, limits: &Limits) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    let (n, q) = (parent.order(), parent.size());
    if q + 1 > limits.max_size {
        return out;
    }
    for u in 0..n {
        for v in u + 1..n {
            if parent.has_edge(u, v) {
                continue;
            }
            let child = parent.with_edge(u, v);
            if is_planar(&child) && is_canonical_reduction(&child, Kind::Delete, u, v) {
                out.insert(canonical_form(&child));
            }
        }
    }
    if n + 1 > limits.max_order {
        return out;
    }
    for v in 0..n {
        let nbrs = parent.neighbors(v);
        let d = nbrs.len();
        if d < 4 {
            continue;
        }
        // The lowest neighbour stays with v; the new vertex n takes `moved`.
        let rest: Vec<usize> = nbrs.iter().skip(1).collect();
        for mask in 0u32..1 << rest.len() {
            let k = mask.count_ones() as usize;
            if k < 2 || k > d - 2 {
                continue;
            }
            let moved: VertexSet = (0..rest.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| rest[i])
                .collect();
            let mut child = parent
                .with_vertex(moved.with(v))
                .expect("order below the limit");
            for b in moved {
                child = child.without_edge(v, b);
            }
            if is_polyhedral(&child) && is_canonical_reduction(&child, Kind::Contract, v, n) {
                out.insert(canonical_form(&child));
            }
        }
    }
    out
}

/// All polyhedra within `limits`, as canonical forms grouped by size.
/// Index `q` of the result holds the sorted forms with `q` edges.
pub(super) fn generate(limits: &Limits) -> Vec<Vec<CanonicalForm>> {
    let mut layers: Vec<Vec<CanonicalForm>> = vec![Vec::new(); limits.max_size + 1];
    for spokes in 3.. {
        let (p, q) = (spokes + 1, 2 * spokes);
        if p > limits.max_order || q > limits.max_size {
            break;
        }
        layers[q].push(canonical_form(&Graph::wheel(spokes).expect("small wheel")));
    }
    for q in 6..limits.max_size {
        let parents: Vec<Graph> = layers[q]
            .iter()
            .map(|c| c.to_graph().expect("certificate of a generated graph"))
            .collect();
        let born: Vec<CanonicalForm> = parents
            .par_iter()
            .flat_map_iter(|g| children(g, limits))
            .collect();
        let next = &mut layers[q + 1];
        next.extend(born);
        next.sort_unstable();
        debug_assert!(
            next.windows(2).all(|w| w[0] != w[1]),
            "duplicate class at q = {}",
            q + 1
        );
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheels_have_no_reductions() {
        for spokes in 3..=8 {
            let w = Graph::wheel(spokes).unwrap();
            for (u, v) in w.edges() {
                assert!(!is_valid(&w, Kind::Delete, u, v));
                assert!(!is_valid(&w, Kind::Contract, u, v));
            }
        }
    }

    #[test]
    fn small_layers() {
        let layers = generate(&Limits {
            max_order: 9,
            max_size: 11,
        });
        let counts: Vec<usize> = layers.iter().map(Vec::len).collect();
        assert_eq!(counts[6..], [1, 0, 1, 2, 2, 4]);
    }
}
