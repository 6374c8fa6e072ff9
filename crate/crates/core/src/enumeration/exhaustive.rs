//! Brute-force enumeration, kept independent of the augmentation search so
//! the two can audit each other.

use std::collections::BTreeSet;

use crate::connectivity::is_3_connected;
use crate::graph::{Graph, MAX_ORDER};
use crate::isomorphism::{canonical_form, CanonicalForm};
use crate::planarity::is_planar;

/// Largest order accepted by [`exhaustive_polyhedra`].
pub const EXHAUSTIVE_MAX_ORDER: usize = 8;

/// Every polyhedron of order `p` and size `q`, found by filtering labelled
/// edge sets. Only labellings with non-increasing degrees and minimum degree
/// three are visited; every class has such a labelling.
///
/// # Panics
///
/// If `p > EXHAUSTIVE_MAX_ORDER`.
pub fn exhaustive_polyhedra(p: usize, q: usize) -> Vec<Graph> {
    assert!(
        p <= EXHAUSTIVE_MAX_ORDER,
        "exhaustive search is limited to {EXHAUSTIVE_MAX_ORDER} vertices"
    );
    let mut found = BTreeSet::new();
    if p >= 4 && q <= 3 * p - 6 && 2 * q >= 3 * p {
        let mut s = Sweep {
            p,
            q,
            rows: [0; MAX_ORDER],
            deg: [0; MAX_ORDER],
            edges: 0,
            found: &mut found,
        };
        s.row(0);
    }
    found
        .into_iter()
        .map(|c| c.to_graph().expect("canonical form"))
        .collect()
}

struct Sweep<'a> {
    p: usize,
    q: usize,
    rows: [u16; MAX_ORDER],
    deg: [usize; MAX_ORDER],
    edges: usize,
    found: &'a mut BTreeSet<CanonicalForm>,
}

impl Sweep<'_> {
    /// Chooses the neighbours of vertex `i` among the higher vertices.
    fn row(&mut self, i: usize) {
        let p = self.p;
        if i == p {
            if self.edges == self.q {
                let g = Graph::from_rows(&self.rows[..p]).expect("symmetric rows");
                if is_3_connected(&g) && is_planar(&g) {
                    self.found.insert(canonical_form(&g));
                }
            }
            return;
        }
        let cap = if i == 0 { p - 1 } else { self.deg[i - 1] };
        let width = p - 1 - i;
        for mask in 0u32..1 << width {
            let extra = mask.count_ones() as usize;
            let d = self.deg[i] + extra;
            if d < 3 || d > cap || self.edges + extra > self.q {
                continue;
            }
            // Remaining pairs among the higher vertices must still fit q.
            let higher = p - i - 1;
            let left = higher * higher.saturating_sub(1) / 2;
            if self.edges + extra + left < self.q {
                continue;
            }
            let saved = (self.rows, self.deg, self.edges);
            let mut ok = true;
            for k in 0..width {
                if mask >> k & 1 == 0 {
                    continue;
                }
                let w = i + 1 + k;
                self.rows[i] |= 1 << w;
                self.rows[w] |= 1 << i;
                self.deg[w] += 1;
            }
            self.deg[i] = d;
            self.edges += extra;
            for w in i + 1..p {
                let reachable = self.deg[w] + (w - i - 1) + (p - 1 - w);
                if self.deg[w] > d || reachable < 3 {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.row(i + 1);
            }
            (self.rows, self.deg, self.edges) = saved;
        }
    }
}

/// One representative of every isomorphism class of graphs on `p`
/// vertices, sorted by canonical form, built by closing the edgeless graph
/// under edge addition.
pub fn all_graphs(p: usize) -> Vec<Graph> {
    let mut layer: BTreeSet<CanonicalForm> =
        BTreeSet::from([canonical_form(&Graph::empty(p).expect("order in range"))]);
    let mut all: Vec<CanonicalForm> = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for c in &layer {
            let g = c.to_graph().expect("canonical form");
            for u in 0..p {
                for v in u + 1..p {
                    if !g.has_edge(u, v) {
                        next.insert(canonical_form(&g.with_edge(u, v)));
                    }
                }
            }
        }
        all.extend(std::mem::replace(&mut layer, next));
    }
    all.sort_unstable();
    all.into_iter()
        .map(|c| c.to_graph().expect("canonical form"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_class_counts() {
        let counts: Vec<usize> = (1..=6).map(|p| all_graphs(p).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn smallest_polyhedra() {
        assert_eq!(
            exhaustive_polyhedra(4, 6),
            vec![Graph::complete(4).unwrap()]
        );
        assert_eq!(exhaustive_polyhedra(5, 8).len(), 1);
        assert_eq!(exhaustive_polyhedra(5, 9).len(), 1);
        assert_eq!(exhaustive_polyhedra(6, 12).len(), 2);
        assert!(exhaustive_polyhedra(5, 7).is_empty());
    }
}
