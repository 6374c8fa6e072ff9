//! Small simple undirected graphs stored as adjacency bit rows.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported order. Every adjacency row fits in a `u16`.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} outside the supported range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph needs at least one vertex")]
    EmptyVertexSet,
    #[error("permutation of length {len} does not relabel a graph of order {order}")]
    BadPermutation { len: usize, order: usize },
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("invalid degree sequence: {0}")]
    BadDegreeSequence(String),
}

/// A set of vertices of a graph with at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on `1..=16` vertices, numbered from 0.
///
/// Graphs are plain values: every operation returns a new graph. Rows past
/// the order are always zero, so derived equality and hashing compare
/// labelled graphs exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: u8,
    rows: [u16; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        Ok(Graph {
            order: order as u8,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: &[u16]) -> Result<Graph, GraphError> {
        let order = rows.len();
        let mut g = Graph::empty(order)?;
        let full = VertexSet::full(order).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] = row;
        }
        for u in 0..order {
            for v in VertexSet(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(order: usize, rows: [u16; MAX_ORDER]) -> Graph {
        Graph {
            order: order as u8,
            rows,
        }
    }

    /// Number of vertices, `p`.
    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges, `q`.
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u32 << u) - 1) as u16)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && u < self.order() && v < self.order());
        let mut g = *self;
        g.rows[u] |= 1 << v;
        g.rows[v] |= 1 << u;
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        g.rows[u] &= !(1 << v);
        g.rows[v] &= !(1 << u);
        g
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The complement: same vertices, exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order()).0;
        let mut g = *self;
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & full & !(1 << v);
        }
        g
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<u8> = (0..self.order()).map(|v| self.degree(v) as u8).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// The subgraph induced on `keep`, relabelled `0..keep.len()` in
    /// increasing order of the original labels.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if !keep.is_subset(self.vertices()) {
            let vertex = (keep - self.vertices()).first().unwrap_or(0);
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order(),
            });
        }
        let kept: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(kept.len())?;
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let bad = || GraphError::BadPermutation {
            len: perm.len(),
            order: n,
        };
        if perm.len() != n {
            return Err(bad());
        }
        let mut seen = VertexSet::EMPTY;
        for &x in perm {
            if x >= n || seen.contains(x) {
                return Err(bad());
            }
            seen.insert(x);
        }
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.rows[perm[u]] |= 1 << perm[v];
            g.rows[perm[v]] |= 1 << perm[u];
        }
        Ok(g)
    }

    /// Adds a vertex adjacent to `neighbors`; it receives label `order()`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n + 1));
        }
        let mut g = *self;
        g.order += 1;
        g.rows[n] = neighbors.0;
        for v in neighbors {
            g.rows[v] |= 1 << n;
        }
        Ok(g)
    }

    /// Merges the endpoints of edge `uv` into `min(u, v)`, dropping the
    /// larger label and shifting the labels above it down by one. Parallel
    /// edges collapse, so the result is simple.
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let n = self.order();
        let merged = (self.neighbors(keep) | self.neighbors(gone))
            .without(keep)
            .without(gone);
        let squeeze = |row: u16| -> u16 {
            let low = row & ((1u32 << gone) - 1) as u16;
            let high = (row as u32 >> (gone + 1)) << gone;
            low | high as u16
        };
        let mut rows = [0u16; MAX_ORDER];
        let mut i = 0;
        for w in 0..n {
            if w == gone {
                continue;
            }
            let mut row = self.rows[w];
            if w == keep {
                row = merged.0;
            } else if row >> gone & 1 == 1 {
                row = (row & !(1 << gone)) | 1 << keep;
            }
            rows[i] = squeeze(row);
            i += 1;
        }
        Graph::from_rows_unchecked(n - 1, rows)
    }

    // Named families used throughout the tests and examples.

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)).filter(|(u, v)| u != v))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// Hub `0` joined to every vertex of the rim cycle `1..=spokes`.
    pub fn wheel(spokes: usize) -> Result<Graph, GraphError> {
        let rim = (0..spokes).map(|i| (1 + i, 1 + (i + 1) % spokes));
        let hub = (1..=spokes).map(|i| (0, i));
        Graph::from_edges(spokes + 1, rim.chain(hub))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    /// The 3-cube graph `Q3`; vertices are the 3-bit strings.
    pub fn cube() -> Graph {
        let edges = (0..8usize).flat_map(|v| {
            [1usize, 2, 4]
                .into_iter()
                .map(move |bit| (v, v ^ bit))
                .filter(|(u, w)| u < w)
        });
        Graph::from_edges(8, edges).expect("cube is a valid graph")
    }

    pub fn octahedron() -> Graph {
        // K6 minus the perfect matching {03, 14, 25}.
        let edges = (0..6usize).flat_map(|u| (u + 1..6).map(move |v| (u, v)));
        Graph::from_edges(6, edges.filter(|&(u, v)| v != u + 3))
            .expect("octahedron is a valid graph")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen is a valid graph")
    }

    /// Disjoint union; the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.order(), edges.collect::<Vec<_>>())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(p={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A weakly decreasing list of vertex degrees, one per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<u8>);

impl DegreeSequence {
    /// Accepts any order of entries and sorts them decreasingly. Entries must
    /// lie in `0..len`. The degree sum is not required to be even, so that
    /// odd-sum sequences can still be used as (always empty) filters.
    pub fn new(mut degrees: Vec<u8>) -> Result<DegreeSequence, GraphError> {
        let p = degrees.len();
        if p == 0 || p > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(p));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d as usize >= p) {
            return Err(GraphError::BadDegreeSequence(format!(
                "degree {d} impossible with {p} vertices"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }

    /// Handshake parity: a graph realising the sequence needs an even sum.
    pub fn has_even_sum(&self) -> bool {
        self.sum() % 2 == 0
    }

    /// Edge count implied by the handshake lemma, when the sum is even.
    pub fn size(&self) -> Option<usize> {
        self.has_even_sum().then(|| self.sum() / 2)
    }

    pub fn max(&self) -> u8 {
        self.0[0]
    }

    pub fn min(&self) -> u8 {
        self.0[self.0.len() - 1]
    }

    /// The degree sequence of the complement: `p-1-d_p, ..., p-1-d_1`.
    pub fn complement(&self) -> DegreeSequence {
        let top = self.0.len() as u8 - 1;
        DegreeSequence(self.0.iter().rev().map(|&d| top - d).collect())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&d| d < 10) {
            for d in &self.0 {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}

/// Parses either the compact digit form (`44443333`) or a comma list.
impl serde::Serialize for DegreeSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for DegreeSequence {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parsed: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u8>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let degrees = parsed.ok_or_else(|| GraphError::BadDegreeSequence(s.to_string()))?;
        DegreeSequence::new(degrees)
    }
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    g.degree_sequence()
}

pub fn complement_degree_sequence(d: &DegreeSequence) -> DegreeSequence {
    d.complement()
}

pub fn induced_subgraph(g: &Graph, keep: VertexSet) -> Result<Graph, GraphError> {
    g.induced_subgraph(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        let c = k4.complement();
        assert_eq!(c.size(), 0);
        assert_eq!(c, Graph::empty(4).unwrap());
    }

    #[test]
    fn complement_of_cycle_is_five_regular() {
        let c8 = Graph::cycle(8).unwrap();
        let c = c8.complement();
        assert_eq!(c.size(), 20);
        assert!((0..8).all(|v| c.degree(v) == 5));
    }

    #[test]
    fn degree_sequences_of_named_graphs() {
        assert_eq!(Graph::complete(4).unwrap().degree_sequence(), seq("3333"));
        assert_eq!(Graph::cube().degree_sequence(), seq("33333333"));
        assert_eq!(Graph::octahedron().degree_sequence(), seq("444444"));
        assert_eq!(Graph::octahedron().size(), 12);
    }

    #[test]
    fn complement_sequences_match_table_rows() {
        assert_eq!(seq("33333333").complement(), seq("44444444"));
        assert_eq!(seq("44333333").complement(), seq("44444433"));
        assert_eq!(seq("44443333").complement(), seq("44443333"));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            k5.induced_subgraph(VertexSet::full(4)).unwrap(),
            Graph::complete(4).unwrap()
        );
        let cube = Graph::cube();
        assert_eq!(cube.induced_subgraph(cube.vertices()).unwrap(), cube);
        let c8 = Graph::cycle(8).unwrap();
        let alt: VertexSet = [0, 2, 4, 6].into_iter().collect();
        assert_eq!(c8.induced_subgraph(alt).unwrap(), Graph::empty(4).unwrap());
        assert_eq!(
            c8.induced_subgraph(VertexSet::EMPTY),
            Err(GraphError::EmptyVertexSet)
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::empty(0), Err(GraphError::OrderOutOfRange(0)));
        assert_eq!(Graph::empty(17), Err(GraphError::OrderOutOfRange(17)));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(DegreeSequence::new(vec![4, 1, 1, 1]).is_err());
    }

    #[test]
    fn contraction_merges_neighbourhoods() {
        // Contracting one rim edge of the 5-wheel gives the 4-wheel.
        let w5 = Graph::wheel(5).unwrap();
        let c = w5.contract_edge(1, 2);
        assert_eq!(c.order(), 5);
        assert_eq!(c.size(), 8);
        assert_eq!(c.degree_sequence(), seq("43333"));
        // Contracting a cube edge: no triangles, so only one edge disappears.
        let c = Graph::cube().contract_edge(0, 1);
        assert_eq!((c.order(), c.size()), (7, 11));
    }

    #[test]
    fn full_sixteen_vertex_rows() {
        let k16 = Graph::complete(16).unwrap();
        assert_eq!(k16.size(), 120);
        assert_eq!(k16.complement().size(), 0);
        assert_eq!(k16.contract_edge(3, 15).size(), 105);
    }

    #[test]
    fn sequence_parsing_and_display() {
        assert_eq!(seq("3,3,3,3").to_string(), "3333");
        assert!(!seq("3332").has_even_sum());
        assert_eq!(seq("44443333").size(), Some(14));
        let g = Graph::complete(12).unwrap();
        assert_eq!(g.degree_sequence().to_string(), ["11"; 12].join(","));
    }
}
