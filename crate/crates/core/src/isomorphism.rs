//! Canonical forms and isomorphism testing.
//!
//! The canonical form is the lexicographically smallest adjacency matrix
//! reachable by an individualization-refinement search: the vertex
//! partition is refined to an equitable one, a vertex of the first
//! non-singleton cell is individualized, and the search recurses until the
//! partition is discrete. Two leaves with the same matrix yield an
//! automorphism, which prunes sibling branches in the same orbit and lets
//! the search jump back to where the two leaves diverged.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Relabelling-invariant certificate of an isomorphism class.
///
/// Layout: order, size, then (for coloured searches) the sorted colour
/// vector, then the canonical adjacency rows as big-endian `u16`s. Ordering
/// certificates therefore sorts first by order and then by size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate is not valid hex: {0}")]
    Hex(String),
    #[error("certificate bytes do not describe a graph")]
    Malformed,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn size(&self) -> usize {
        self.0[1] as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<CanonicalForm, CertificateError> {
        let bytes = hex::decode(s).map_err(|e| CertificateError::Hex(e.to_string()))?;
        if bytes.len() < 2 || bytes[0] == 0 || bytes[0] as usize > MAX_ORDER {
            return Err(CertificateError::Malformed);
        }
        Ok(CanonicalForm(bytes))
    }

    /// The canonical representative: the graph whose adjacency rows are the
    /// certificate's. Only meaningful for uncoloured certificates.
    pub fn to_graph(&self) -> Result<Graph, CertificateError> {
        let n = self.order();
        let rows = self
            .0
            .get(2..)
            .filter(|r| r.len() == 2 * n)
            .ok_or(CertificateError::Malformed)?;
        let rows: Vec<u16> = rows
            .chunks(2)
            .map(|c| u16::from_be_bytes([c[0], c[1]]))
            .collect();
        let g = Graph::from_rows(&rows).map_err(|_| CertificateError::Malformed)?;
        if g.size() != self.size() {
            return Err(CertificateError::Malformed);
        }
        Ok(g)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalForm::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

type Code = [u16; MAX_ORDER];

struct Leaf {
    code: Code,
    /// `lab[i]` is the original vertex placed at canonical position `i`.
    lab: [u8; MAX_ORDER],
    path: Vec<u8>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<[u8; MAX_ORDER]>,
}

/// Splits cells until every vertex of a cell has the same number of
/// neighbours in every cell. Deterministic given the cell order, so the
/// result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    'again: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.len() < 2 {
                    continue;
                }
                let mut buckets = [VertexSet::EMPTY; MAX_ORDER + 1];
                let mut distinct = 0;
                for v in cell {
                    let k = (g.neighbors(v) & splitter).len();
                    if buckets[k].is_empty() {
                        distinct += 1;
                    }
                    buckets[k].insert(v);
                }
                if distinct > 1 {
                    let pieces = buckets.into_iter().filter(|b| !b.is_empty());
                    cells.splice(c..c + 1, pieces);
                    continue 'again;
                }
            }
        }
        return;
    }
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<VertexSet>, path: &mut Vec<u8>) -> Option<usize> {
        let level = path.len();
        let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let target = cells[ti];
        let mut explored = VertexSet::EMPTY;
        for v in target {
            if !explored.is_empty() && self.in_explored_orbit(v, explored, path) {
                continue;
            }
            explored.insert(v);
            let mut child = cells.clone();
            child.splice(ti..ti + 1, [VertexSet::singleton(v), target.without(v)]);
            refine(self.g, &mut child);
            path.push(v as u8);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(k) = jump {
                if k < level {
                    return Some(k);
                }
            }
        }
        None
    }

    /// Orbit test under the group generated by the known automorphisms that
    /// fix the current path pointwise.
    fn in_explored_orbit(&self, v: usize, explored: VertexSet, path: &[u8]) -> bool {
        let n = self.g.order();
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().any(|&x| gamma[x as usize] != x) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    parent[a] = b as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[u8]) -> Option<usize> {
        let n = self.g.order();
        let mut lab = [0u8; MAX_ORDER];
        let mut pos = [0u8; MAX_ORDER];
        for (i, c) in cells.iter().enumerate() {
            let v = c.first().expect("discrete partition");
            lab[i] = v as u8;
            pos[v] = i as u8;
        }
        let mut code = [0u16; MAX_ORDER];
        for i in 0..n {
            for u in self.g.neighbors(lab[i] as usize) {
                code[i] |= 1 << pos[u];
            }
        }
        let leaf = Leaf {
            code,
            lab,
            path: path.to_vec(),
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                code,
                lab,
                path: path.to_vec(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.code == code {
            let k = common_prefix(&first.path, path);
            self.autos.push(automorphism(&first.lab, &lab, n));
            return Some(k);
        }
        let best = self.best.as_ref().expect("best set with first");
        match code.cmp(&best.code) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let k = common_prefix(&best.path, path);
                self.autos.push(automorphism(&best.lab, &lab, n));
                Some(k)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn automorphism(from: &[u8; MAX_ORDER], to: &[u8; MAX_ORDER], n: usize) -> [u8; MAX_ORDER] {
    let mut gamma: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}

fn search(g: &Graph, colors: Option<&[u8]>) -> (Code, [u8; MAX_ORDER]) {
    let mut cells = match colors {
        None => vec![g.vertices()],
        Some(colors) => {
            let mut by_color: Vec<(u8, VertexSet)> = Vec::new();
            for (v, &c) in colors.iter().enumerate().take(g.order()) {
                match by_color.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, s)) => s.insert(v),
                    None => by_color.push((c, VertexSet::singleton(v))),
                }
            }
            by_color.sort_by_key(|(c, _)| *c);
            by_color.into_iter().map(|(_, s)| s).collect()
        }
    };
    refine(g, &mut cells);
    let mut s = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    s.descend(cells, &mut Vec::new());
    let best = s.best.expect("search reaches at least one leaf");
    (best.code, best.lab)
}

fn certificate(g: &Graph, code: &Code, colors: Option<&[u8]>) -> CanonicalForm {
    let n = g.order();
    let mut bytes = Vec::with_capacity(2 + n + 2 * n);
    bytes.push(n as u8);
    bytes.push(g.size() as u8);
    if let Some(colors) = colors {
        let mut sorted = colors[..n].to_vec();
        sorted.sort_unstable();
        bytes.extend(sorted);
    }
    for row in &code[..n] {
        bytes.extend(row.to_be_bytes());
    }
    CanonicalForm(bytes)
}

/// The canonical form together with the labelling that produces it:
/// `labelling[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let (code, lab) = search(g, None);
    let labelling = lab[..g.order()].iter().map(|&v| v as usize).collect();
    (certificate(g, &code, None), labelling)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (code, _) = search(g, None);
    certificate(g, &code, None)
}

/// Canonical form of a vertex-coloured graph; isomorphisms must preserve
/// colours. `colors` needs one entry per vertex.
pub fn canonical_form_colored(g: &Graph, colors: &[u8]) -> CanonicalForm {
    assert!(colors.len() >= g.order(), "one colour per vertex");
    let (code, _) = search(g, Some(colors));
    certificate(g, &code, Some(colors))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

pub fn is_self_complementary(g: &Graph) -> bool {
    let p = g.order();
    4 * g.size() == p * (p - 1) && are_isomorphic(g, &g.complement())
}
