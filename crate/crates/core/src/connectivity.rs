//! Connectivity predicates, decided straight from the definition: a graph of
//! order at least 4 is 3-connected when deleting any 0, 1 or 2 vertices
//! leaves it connected. At the orders used here that is at most
//! `1 + 16 + 120` bitset flood fills.

use crate::graph::{Graph, VertexSet};

/// Whether the vertices outside `removed` induce a connected subgraph.
/// Removing everything (or all but one vertex) counts as connected.
pub fn is_connected_avoiding(g: &Graph, removed: VertexSet) -> bool {
    let alive = g.vertices() - removed;
    let Some(start) = alive.first() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | g.neighbors(v);
        }
        frontier = (next & alive) - seen;
        seen = seen | frontier;
    }
    seen == alive
}

pub fn is_connected(g: &Graph) -> bool {
    is_connected_avoiding(g, VertexSet::EMPTY)
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut left = g.vertices();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | g.neighbors(v);
            }
            frontier = next - comp;
            comp = comp | frontier;
        }
        left = left - comp;
        out.push(comp);
    }
    out
}

pub fn is_3_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || g.min_degree() < 3 || !is_connected(g) {
        return false;
    }
    for a in 0..n {
        if !is_connected_avoiding(g, VertexSet::singleton(a)) {
            return false;
        }
        for b in a + 1..n {
            let pair = VertexSet::singleton(a).with(b);
            if !is_connected_avoiding(g, pair) {
                return false;
            }
        }
    }
    true
}

/// Every vertex removal leaves a connected graph (2-connectivity, p >= 3).
pub fn is_2_connected(g: &Graph) -> bool {
    g.order() >= 3
        && is_connected(g)
        && (0..g.order()).all(|v| is_connected_avoiding(g, VertexSet::singleton(v)))
}

pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}
