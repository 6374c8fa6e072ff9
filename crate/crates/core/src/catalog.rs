//! Labelled, ordered tables of polyhedra with their duals.
//!
//! Labels have the shape `qqpp.nn`: two digits of size, two digits of
//! order, and a running number. A dual pair shares the block of its smaller
//! order and takes consecutive numbers, smaller order first, so `1407.02`
//! may have nine vertices.
//!
//! Within a size, blocks go by increasing order. Inside a block self-dual
//! polyhedra precede dual pairs; then degree sequences decrease, then the
//! degree sequences of the duals decrease. Remaining ties put entries whose
//! complement is polyhedral first and finally compare canonical forms.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::is_polyhedral;
use crate::duality::dual;
use crate::graph::{DegreeSequence, Graph};
use crate::graph6::{self, Graph6Error};
use crate::isomorphism::{canonical_form, is_self_complementary, CanonicalForm};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("graph {0} is not polyhedral")]
    NotPolyhedral(String),
    #[error("graph {0} appears twice")]
    Duplicate(String),
    #[error("graphs of different sizes in one block: {0} and {1}")]
    MixedSizes(usize, usize),
    #[error("dual of {0} is missing from the input")]
    MissingDual(String),
    #[error("no entry labelled {0:?}")]
    UnknownLabel(String),
    #[error("unsupported format {0:?}; expected g6, json or dot")]
    UnsupportedFormat(String),
    #[error("cannot read {0} back")]
    NotImportable(ExportFormat),
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("entry {label}: {problem}")]
    Inconsistent { label: String, problem: String },
}

/// A polyhedron with its place in the catalog and derived properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "EntryRecord", try_from = "EntryRecord")]
pub struct CatalogEntry {
    pub label: String,
    pub graph: Graph,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub degree_sequence: DegreeSequence,
    pub dual_label: String,
    pub self_dual: bool,
    pub self_complementary: bool,
    pub complement_polyhedral: bool,
    pub certificate: CanonicalForm,
}

/// The flat JSON shape of an entry.
#[derive(Serialize, Deserialize)]
struct EntryRecord {
    schema_version: u32,
    label: String,
    graph6: String,
    edges: Vec<[usize; 2]>,
    p: usize,
    q: usize,
    r: usize,
    degree_sequence: String,
    dual_label: String,
    self_dual: bool,
    self_complementary: bool,
    complement_polyhedral: bool,
    certificate: CanonicalForm,
}

impl From<CatalogEntry> for EntryRecord {
    fn from(e: CatalogEntry) -> EntryRecord {
        EntryRecord {
            schema_version: SCHEMA_VERSION,
            graph6: graph6::encode(&e.graph),
            edges: e.graph.edges().map(|(u, v)| [u, v]).collect(),
            label: e.label,
            p: e.p,
            q: e.q,
            r: e.r,
            degree_sequence: e.degree_sequence.to_string(),
            dual_label: e.dual_label,
            self_dual: e.self_dual,
            self_complementary: e.self_complementary,
            complement_polyhedral: e.complement_polyhedral,
            certificate: e.certificate,
        }
    }
}

impl TryFrom<EntryRecord> for CatalogEntry {
    type Error = CatalogError;

    fn try_from(rec: EntryRecord) -> Result<CatalogEntry, CatalogError> {
        let bad = |problem: String| CatalogError::Inconsistent {
            label: rec.label.clone(),
            problem,
        };
        if rec.schema_version != SCHEMA_VERSION {
            return Err(bad(format!(
                "schema_version {} is not {SCHEMA_VERSION}",
                rec.schema_version
            )));
        }
        let graph = graph6::decode(&rec.graph6).map_err(|e| bad(e.to_string()))?;
        let from_edges = Graph::from_edges(graph.order(), rec.edges.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| bad(e.to_string()))?;
        if from_edges != graph {
            return Err(bad("edges disagree with graph6".into()));
        }
        if canonical_form(&graph) != rec.certificate {
            return Err(bad("certificate disagrees with graph6".into()));
        }
        if (rec.p, rec.q) != (graph.order(), graph.size()) || rec.r + rec.p != rec.q + 2 {
            return Err(bad("p, q, r disagree with the graph".into()));
        }
        let degree_sequence: DegreeSequence = rec
            .degree_sequence
            .parse()
            .map_err(|e: crate::GraphError| bad(e.to_string()))?;
        if degree_sequence != graph.degree_sequence() {
            return Err(bad("degree sequence disagrees with the graph".into()));
        }
        if rec.self_dual != (rec.dual_label == rec.label) {
            return Err(bad("self_dual disagrees with dual_label".into()));
        }
        Ok(CatalogEntry {
            label: rec.label,
            graph,
            p: rec.p,
            q: rec.q,
            r: rec.r,
            degree_sequence,
            dual_label: rec.dual_label,
            self_dual: rec.self_dual,
            self_complementary: rec.self_complementary,
            complement_polyhedral: rec.complement_polyhedral,
            certificate: rec.certificate,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    #[serde(rename = "g6")]
    Graph6,
    Json,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<ExportFormat, CatalogError> {
        match s {
            "g6" | "graph6" => Ok(ExportFormat::Graph6),
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            _ => Err(CatalogError::UnsupportedFormat(s.to_string())),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Graph6 => "g6",
            ExportFormat::Json => "json",
            ExportFormat::Dot => "dot",
        })
    }
}

/// An immutable, ordered catalog.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_label: HashMap<String, usize>,
}

/// What the ordering needs to know about one polyhedron.
struct Facts {
    graph: Graph,
    cert: CanonicalForm,
    dual: CanonicalForm,
    degrees: DegreeSequence,
    dual_degrees: DegreeSequence,
    complement_polyhedral: bool,
}

impl Facts {
    fn self_dual(&self) -> bool {
        self.cert == self.dual
    }

    /// Which of two dual partners leads their pair.
    fn leads(&self, other: &Facts) -> bool {
        let ord = self
            .graph
            .order()
            .cmp(&other.graph.order())
            .then_with(|| other.degrees.cmp(&self.degrees))
            .then_with(|| other.dual_degrees.cmp(&self.dual_degrees))
            .then_with(|| other.complement_polyhedral.cmp(&self.complement_polyhedral))
            .then_with(|| self.cert.cmp(&other.cert));
        ord == Ordering::Less
    }
}

/// One self-dual polyhedron, or a dual pair with its leader first.
struct Unit<'a> {
    members: Vec<&'a Facts>,
}

impl Unit<'_> {
    fn cmp(&self, other: &Unit<'_>) -> Ordering {
        let (a, b) = (self.members[0], other.members[0]);
        let any_cp = |u: &Unit<'_>| u.members.iter().any(|m| m.complement_polyhedral);
        a.graph
            .order()
            .cmp(&b.graph.order())
            .then_with(|| self.members.len().cmp(&other.members.len()))
            .then_with(|| b.degrees.cmp(&a.degrees))
            .then_with(|| b.dual_degrees.cmp(&a.dual_degrees))
            .then_with(|| any_cp(other).cmp(&any_cp(self)))
            .then_with(|| a.cert.cmp(&b.cert))
    }
}

/// Orders and labels polyhedra that all have the same size. Every dual
/// must be present.
pub fn order_census(graphs: &[Graph]) -> Result<Catalog, CatalogError> {
    let Some(first) = graphs.first() else {
        return Ok(Catalog::default());
    };
    let q = first.size();
    let mut facts: BTreeMap<CanonicalForm, Facts> = BTreeMap::new();
    for g in graphs {
        if g.size() != q {
            return Err(CatalogError::MixedSizes(q, g.size()));
        }
        let d = dual(g).map_err(|_| CatalogError::NotPolyhedral(graph6::encode(g)))?;
        let cert = canonical_form(g);
        let canonical = cert.to_graph().expect("canonical form");
        let f = Facts {
            graph: canonical,
            dual: canonical_form(&d),
            degrees: g.degree_sequence(),
            dual_degrees: d.degree_sequence(),
            complement_polyhedral: is_polyhedral(&g.complement()),
            cert: cert.clone(),
        };
        if facts.insert(cert, f).is_some() {
            return Err(CatalogError::Duplicate(graph6::encode(g)));
        }
    }
    for f in facts.values() {
        if !facts.contains_key(&f.dual) {
            return Err(CatalogError::MissingDual(graph6::encode(&f.graph)));
        }
    }

    let mut units: Vec<Unit<'_>> = Vec::new();
    for f in facts.values() {
        if f.self_dual() {
            units.push(Unit { members: vec![f] });
        } else {
            let partner = &facts[&f.dual];
            if f.leads(partner) {
                units.push(Unit {
                    members: vec![f, partner],
                });
            }
        }
    }
    units.sort_by(|a, b| a.cmp(b));

    let mut labels: HashMap<&CanonicalForm, String> = HashMap::new();
    let mut running: BTreeMap<usize, usize> = BTreeMap::new();
    for unit in &units {
        let block = unit.members[0].graph.order();
        for m in &unit.members {
            let nn = running.entry(block).or_insert(0);
            *nn += 1;
            labels.insert(&m.cert, format!("{q:02}{block:02}.{nn:02}"));
        }
    }

    let entries = units
        .iter()
        .flat_map(|u| u.members.iter())
        .map(|f| {
            let (p, q) = (f.graph.order(), f.graph.size());
            CatalogEntry {
                label: labels[&f.cert].clone(),
                graph: f.graph,
                p,
                q,
                r: q + 2 - p,
                degree_sequence: f.degrees.clone(),
                dual_label: labels[&f.dual].clone(),
                self_dual: f.self_dual(),
                self_complementary: is_self_complementary(&f.graph),
                complement_polyhedral: f.complement_polyhedral,
                certificate: f.cert.clone(),
            }
        })
        .collect();
    Ok(Catalog::from_entries(entries))
}

impl Catalog {
    fn from_entries(entries: Vec<CatalogEntry>) -> Catalog {
        let by_label = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.label.clone(), i))
            .collect();
        Catalog { entries, by_label }
    }

    /// Builds a catalog over several sizes by ordering each size on its own
    /// and concatenating the blocks by increasing size.
    pub fn build<I>(graphs: I) -> Result<Catalog, CatalogError>
    where
        I: IntoIterator<Item = Graph>,
    {
        let mut by_size: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for g in graphs {
            by_size.entry(g.size()).or_default().push(g);
        }
        let mut entries = Vec::new();
        for block in by_size.values() {
            entries.extend(order_census(block)?.entries);
        }
        Ok(Catalog::from_entries(entries))
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, label: &str) -> Result<&CatalogEntry, CatalogError> {
        self.by_label
            .get(label)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
    }

    pub fn find(&self, cert: &CanonicalForm) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.certificate == *cert)
    }

    pub fn export(&self, format: ExportFormat) -> Vec<u8> {
        export(&self.entries, format)
    }
}

/// Serializes entries in the given order.
pub fn export(entries: &[CatalogEntry], format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Graph6 => entries
            .iter()
            .flat_map(|e| {
                let mut line = graph6::encode(&e.graph).into_bytes();
                line.push(b'\n');
                line
            })
            .collect(),
        ExportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(entries).expect("entries serialize");
            out.push(b'\n');
            out
        }
        ExportFormat::Dot => entries
            .iter()
            .flat_map(|e| to_dot(&e.label, &e.graph).into_bytes())
            .collect(),
    }
}

/// A DOT description with vertices named `0..p`.
pub fn to_dot(name: &str, g: &Graph) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").expect("write to String");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("write to String");
    }
    out.push_str("}\n");
    out
}

/// Reads graphs back from an export, in file order.
pub fn import_graphs(bytes: &[u8], format: ExportFormat) -> Result<Vec<Graph>, CatalogError> {
    match format {
        ExportFormat::Graph6 => {
            let text = String::from_utf8_lossy(bytes);
            graph6::decode_lines(&text)
                .map_err(|(line, source)| CatalogError::Graph6 { line, source })
        }
        ExportFormat::Json => Ok(import_entries(bytes)?
            .into_iter()
            .map(|e| e.graph)
            .collect()),
        ExportFormat::Dot => Err(CatalogError::NotImportable(ExportFormat::Dot)),
    }
}

/// Reads a JSON export, checking each entry against its own graph.
pub fn import_entries(bytes: &[u8]) -> Result<Vec<CatalogEntry>, CatalogError> {
    serde_json::from_slice(bytes).map_err(|e| CatalogError::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_by_size;

    #[test]
    fn small_blocks() {
        let cat = order_census(&enumerate_by_size(8).unwrap()).unwrap();
        let pyramid = cat.lookup("0805.01").unwrap();
        assert!(pyramid.self_dual);
        let cat = order_census(&enumerate_by_size(9).unwrap()).unwrap();
        let labels: Vec<&str> = cat.entries().iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["0905.01", "0905.02"]);
        let prism = cat.lookup("0905.02").unwrap();
        assert_eq!((prism.p, prism.dual_label.as_str()), (6, "0905.01"));
    }

    #[test]
    fn dual_pairs_share_the_smaller_block() {
        let cat = order_census(&enumerate_by_size(12).unwrap()).unwrap();
        assert_eq!(cat.len(), 12);
        let e = cat.lookup("1206.02").unwrap();
        assert_eq!((e.p, e.dual_label.as_str()), (8, "1206.01"));
        for e in cat.entries() {
            assert_eq!(cat.lookup(&e.dual_label).unwrap().dual_label, e.label);
            assert_eq!(e.self_dual, e.dual_label == e.label);
        }
    }

    #[test]
    fn json_round_trip() {
        let cat = order_census(&enumerate_by_size(11).unwrap()).unwrap();
        let back = import_entries(&cat.export(ExportFormat::Json)).unwrap();
        assert_eq!(back, cat.entries());
        let g6 = import_graphs(&cat.export(ExportFormat::Graph6), ExportFormat::Graph6).unwrap();
        let certs: Vec<_> = g6.iter().map(canonical_form).collect();
        let expect: Vec<_> = cat
            .entries()
            .iter()
            .map(|e| e.certificate.clone())
            .collect();
        assert_eq!(certs, expect);
    }

    #[test]
    fn tampered_json_is_rejected() {
        let cat = order_census(&enumerate_by_size(8).unwrap()).unwrap();
        let text = String::from_utf8(cat.export(ExportFormat::Json)).unwrap();
        let tampered = text.replace("\"r\": 5", "\"r\": 6");
        assert!(matches!(
            import_entries(tampered.as_bytes()),
            Err(CatalogError::Json(_))
        ));
    }

    #[test]
    fn formats() {
        assert_eq!("g6".parse::<ExportFormat>(), Ok(ExportFormat::Graph6));
        assert!(matches!(
            "svg".parse::<ExportFormat>(),
            Err(CatalogError::UnsupportedFormat(_))
        ));
        let dot = to_dot("K4", &Graph::complete(4).unwrap());
        assert!(dot.starts_with("graph \"K4\" {\n  0;\n"));
        assert_eq!(dot.matches(" -- ").count(), 6);
    }

    #[test]
    fn unknown_label() {
        assert_eq!(
            Catalog::default().lookup("0604.01").unwrap_err(),
            CatalogError::UnknownLabel("0604.01".into())
        );
    }

    #[test]
    fn missing_dual_is_reported() {
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(matches!(
            order_census(&[prism]),
            Err(CatalogError::MissingDual(_))
        ));
    }
}
