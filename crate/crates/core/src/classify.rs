//! Which polyhedra have polyhedral complements?
//!
//! The pipeline first narrows the order with degree bounds (a polyhedron
//! has minimum degree at least 3, so a polyhedral complement forces maximum
//! degree at most `p - 4`), lists the degree sequences that survive at
//! `p = 8`, and then tests the complement of every polyhedron carrying one
//! of those sequences. An unpruned sweep over every order where edge
//! counting alone allows a solution checks the pruning itself.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{order_census, CatalogEntry, CatalogError};
use crate::connectivity::is_3_connected;
use crate::duality::dual;
use crate::enumeration::{Census, Limits};
use crate::graph::{DegreeSequence, Graph};
use crate::graph6;
use crate::isomorphism::{canonical_form, CanonicalForm};
use crate::planarity::is_planar;

/// 3-connected and planar.
pub fn is_polyhedral(g: &Graph) -> bool {
    is_3_connected(g) && is_planar(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("census covers p <= {have_order}, q <= {have_size}; need p <= {need_order}, q <= {need_size}")]
    CensusUnavailable {
        have_order: usize,
        have_size: usize,
        need_order: usize,
        need_size: usize,
    },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Why an order is ruled out, or that it survives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Admitted,
    DegreeBoundsEmpty,
    OddDegreeSum { sum: usize },
    PlanarComplementBound,
}

/// One order examined by [`prune_order`]. Degrees must lie in
/// `min_degree..=max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneRow {
    pub p: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl PruneRow {
    pub fn reason(&self) -> String {
        match self.verdict {
            Verdict::Admitted => format!(
                "admitted with degrees {}..={}",
                self.min_degree, self.max_degree
            ),
            Verdict::DegreeBoundsEmpty => {
                format!(
                    "minimum degree {} exceeds maximum degree {}",
                    self.min_degree, self.max_degree
                )
            }
            Verdict::OddDegreeSum { sum } => format!("odd degree sum {sum}"),
            Verdict::PlanarComplementBound => {
                format!("complement of {}-vertex planar graph non-planar", self.p)
            }
        }
    }
}

/// Largest order [`prune_order`] reports on.
pub const PRUNE_MAX_ORDER: usize = 12;

/// Orders 4..=12 with the degree window a solution would need and the
/// reason each order fails. Only `p = 8` survives.
pub fn prune_order() -> Vec<PruneRow> {
    (4..=PRUNE_MAX_ORDER)
        .map(|p| {
            let (min_degree, max_degree) = (3, p - 4);
            let verdict = if p >= 9 {
                Verdict::PlanarComplementBound
            } else if min_degree > max_degree {
                Verdict::DegreeBoundsEmpty
            } else if min_degree == max_degree && p * min_degree % 2 == 1 {
                Verdict::OddDegreeSum {
                    sum: p * min_degree,
                }
            } else {
                Verdict::Admitted
            };
            PruneRow {
                p,
                min_degree,
                max_degree,
                verdict,
            }
        })
        .collect()
}

pub fn admitted_orders(trace: &[PruneRow]) -> Vec<usize> {
    trace
        .iter()
        .filter(|r| r.verdict == Verdict::Admitted)
        .map(|r| r.p)
        .collect()
}

/// A degree sequence for `G` together with what it forces on the
/// complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub sequence: DegreeSequence,
    pub q: usize,
    pub r: usize,
    pub complement_sequence: DegreeSequence,
    pub complement_q: usize,
    pub complement_r: usize,
}

/// Degree sequences at order `p` with entries in `3..=p-4` and even sum,
/// keeping one of each complementary pair (`q <= q̄`). Faces come from
/// Euler's formula.
pub fn candidate_degree_rows_for(p: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    if p < 7 {
        return rows;
    }
    let (lo, hi) = (3u8, (p - 4) as u8);
    let total = p * (p - 1) / 2;
    let mut seq = vec![hi; p];
    loop {
        let d = DegreeSequence::new(seq.clone()).expect("degrees below p");
        if d.has_even_sum() {
            let q = d.sum() / 2;
            if 2 * q <= total {
                let cq = total - q;
                rows.push(TableRow {
                    complement_sequence: d.complement(),
                    sequence: d,
                    q,
                    r: q + 2 - p,
                    complement_q: cq,
                    complement_r: cq + 2 - p,
                });
            }
        }
        // Next non-increasing sequence in decreasing lexicographic order.
        let Some(i) = seq.iter().rposition(|&x| x > lo) else {
            break;
        };
        let v = seq[i] - 1;
        for x in &mut seq[i..] {
            *x = v;
        }
    }
    rows.sort_by_key(|r| r.q);
    rows
}

/// The candidate rows at the single admitted order.
pub fn candidate_degree_rows() -> Vec<TableRow> {
    admitted_orders(&prune_order())
        .into_iter()
        .flat_map(candidate_degree_rows_for)
        .collect()
}

/// How the candidates of one table row fared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseTally {
    pub q: usize,
    pub sequence: DegreeSequence,
    pub polyhedra: usize,
    pub candidates: usize,
    pub complement_nonplanar: usize,
    pub complement_not_3_connected: usize,
    pub solutions: usize,
}

/// A solution together with its conventional name.
#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub reference_name: String,
    #[serde(flatten)]
    pub entry: CatalogEntry,
    pub dual_graph6: String,
    pub dual_polyhedral: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub prune: Vec<PruneRow>,
    pub candidate_rows: Vec<TableRow>,
    pub cases: Vec<CaseTally>,
    pub solutions: Vec<Solution>,
}

/// What a census must cover for [`solve_question`]: all of `q <= 14` so the
/// `q = 14` block can be labelled.
pub const PRUNED_LIMITS: Limits = Limits {
    max_order: 9,
    max_size: 14,
};

/// What a census must cover for [`solve_unpruned`].
pub const UNPRUNED_LIMITS: Limits = Limits {
    max_order: 10,
    max_size: 24,
};

fn require(census: &Census, need: Limits) -> Result<(), ClassifyError> {
    let have = census.limits();
    if have.max_order < need.max_order || have.max_size < need.max_size {
        return Err(ClassifyError::CensusUnavailable {
            have_order: have.max_order,
            have_size: have.max_size,
            need_order: need.max_order,
            need_size: need.max_size,
        });
    }
    Ok(())
}

enum Fate {
    Nonplanar,
    NotThreeConnected,
    Solution,
}

fn complement_fate(g: &Graph) -> Fate {
    let c = g.complement();
    if !is_planar(&c) {
        Fate::Nonplanar
    } else if !is_3_connected(&c) {
        Fate::NotThreeConnected
    } else {
        Fate::Solution
    }
}

/// Runs the pruned pipeline over `census`.
pub fn solve_question(census: &Census) -> Result<ClassificationReport, ClassifyError> {
    require(census, PRUNED_LIMITS)?;
    let prune = prune_order();
    let candidate_rows = candidate_degree_rows();
    let mut cases = Vec::new();
    let mut found: Vec<Graph> = Vec::new();
    for p in admitted_orders(&prune) {
        for row in candidate_rows.iter().filter(|r| r.sequence.order() == p) {
            let all = census.graphs(p, row.q);
            let mut tally = CaseTally {
                q: row.q,
                sequence: row.sequence.clone(),
                polyhedra: all.len(),
                candidates: 0,
                complement_nonplanar: 0,
                complement_not_3_connected: 0,
                solutions: 0,
            };
            for g in all.iter().filter(|g| g.degree_sequence() == row.sequence) {
                tally.candidates += 1;
                match complement_fate(g) {
                    Fate::Nonplanar => tally.complement_nonplanar += 1,
                    Fate::NotThreeConnected => tally.complement_not_3_connected += 1,
                    Fate::Solution => {
                        tally.solutions += 1;
                        found.push(*g);
                    }
                }
            }
            cases.push(tally);
        }
    }

    let mut solutions = Vec::new();
    let mut labelled_sizes = BTreeSet::new();
    for g in &found {
        labelled_sizes.insert(g.size());
    }
    for q in labelled_sizes {
        let block: Vec<Graph> = census.by_size(q).map(|(_, g)| *g).collect();
        let catalog = order_census(&block)?;
        for g in found.iter().filter(|g| g.size() == q) {
            let entry = catalog
                .find(&canonical_form(g))
                .expect("solution is in its census block")
                .clone();
            let d = dual(&entry.graph).expect("solutions are polyhedral");
            solutions.push(Solution {
                reference_name: String::new(),
                dual_graph6: graph6::encode(&d),
                dual_polyhedral: is_polyhedral(&d),
                entry,
            });
        }
    }
    assign_reference_names(&mut solutions);
    solutions.sort_by(|a, b| a.entry.label.cmp(&b.entry.label));
    Ok(ClassificationReport {
        prune,
        candidate_rows,
        cases,
        solutions,
    })
}

/// Published names of the three solutions: the two self-dual ones take
/// `1408.12` and `1408.13` in canonical-form order, the other `1408.39`.
/// Solution sets of any other shape get no names.
fn assign_reference_names(solutions: &mut [Solution]) {
    let mut self_dual: Vec<usize> = (0..solutions.len())
        .filter(|&i| solutions[i].entry.self_dual)
        .collect();
    let other: Vec<usize> = (0..solutions.len())
        .filter(|&i| !solutions[i].entry.self_dual)
        .collect();
    if self_dual.len() != 2 || other.len() != 1 {
        return;
    }
    self_dual.sort_by(|&a, &b| {
        solutions[a]
            .entry
            .certificate
            .cmp(&solutions[b].entry.certificate)
    });
    solutions[self_dual[0]].reference_name = "1408.12".into();
    solutions[self_dual[1]].reference_name = "1408.13".into();
    solutions[other[0]].reference_name = "1408.39".into();
}

impl ClassificationReport {
    pub fn certificates(&self) -> BTreeSet<CanonicalForm> {
        self.solutions
            .iter()
            .map(|s| s.entry.certificate.clone())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Orders")?;
        writeln!(f, "  {:>2}  {:>5}  {:>5}  verdict", "p", "d_min", "d_max")?;
        for row in &self.prune {
            writeln!(
                f,
                "  {:>2}  {:>5}  {:>5}  {}",
                row.p,
                row.min_degree,
                row.max_degree,
                row.reason()
            )?;
        }
        writeln!(f)?;
        writeln!(f, "Candidate degree sequences")?;
        writeln!(
            f,
            "  {:<10} {:>3} {:>3}   {:<10} {:>3} {:>3}",
            "G", "q", "r", "complement", "q", "r"
        )?;
        for r in &self.candidate_rows {
            writeln!(
                f,
                "  {:<10} {:>3} {:>3}   {:<10} {:>3} {:>3}",
                r.sequence.to_string(),
                r.q,
                r.r,
                r.complement_sequence.to_string(),
                r.complement_q,
                r.complement_r
            )?;
        }
        writeln!(f)?;
        writeln!(f, "Cases")?;
        writeln!(
            f,
            "  {:>3}  {:<10} {:>9} {:>10} {:>11} {:>15} {:>9}",
            "q", "sequence", "polyhedra", "candidates", "nonplanar", "not 3-connected", "solutions"
        )?;
        for c in &self.cases {
            writeln!(
                f,
                "  {:>3}  {:<10} {:>9} {:>10} {:>11} {:>15} {:>9}",
                c.q,
                c.sequence.to_string(),
                c.polyhedra,
                c.candidates,
                c.complement_nonplanar,
                c.complement_not_3_connected,
                c.solutions
            )?;
        }
        writeln!(f)?;
        writeln!(f, "Solutions")?;
        for s in &self.solutions {
            let e = &s.entry;
            writeln!(
                f,
                "  {}  {}  {}  self-dual={} self-complementary={} name g_{{{}}}",
                e.label,
                graph6::encode(&e.graph),
                e.degree_sequence,
                e.self_dual,
                e.self_complementary,
                s.reference_name
            )?;
        }
        let n = self.solutions.len();
        write!(f, "\n{n} solution{}", if n == 1 { "" } else { "s" })?;
        writeln!(f)
    }
}

/// Result of testing every complement without degree pruning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnprunedSweep {
    pub orders: Vec<usize>,
    pub checked: usize,
    pub solutions: BTreeSet<CanonicalForm>,
}

/// Orders at which `G` and its complement could both be polyhedral by edge
/// counting alone: each needs `3p/2 <= q <= 3p - 6` out of `p(p-1)/2`.
pub fn counting_orders() -> Vec<usize> {
    (4..=PRUNE_MAX_ORDER)
        .filter(|&p| {
            let total = p * (p - 1) / 2;
            let (lo, hi) = ((3 * p).div_ceil(2), 3 * p - 6);
            (lo..=hi).any(|q| total >= q && (lo..=hi).contains(&(total - q)))
        })
        .collect()
}

/// Tests the complement of every polyhedron at every order in
/// [`counting_orders`], with no degree or order pruning.
pub fn solve_unpruned(census: &Census) -> Result<UnprunedSweep, ClassifyError> {
    require(census, UNPRUNED_LIMITS)?;
    let orders = counting_orders();
    let mut checked = 0;
    let mut solutions = BTreeSet::new();
    for (cert, g) in census.iter().filter(|(_, g)| orders.contains(&g.order())) {
        checked += 1;
        if is_polyhedral(&g.complement()) {
            solutions.insert(cert.clone());
        }
    }
    Ok(UnprunedSweep {
        orders,
        checked,
        solutions,
    })
}

/// Solutions `(p, q)` with `p >= 4` of: the dual has `p` vertices
/// (`q - p + 2 = p` by Euler) and `q = complement_size(p)`.
pub fn solve_equal_order_size(
    complement_size: impl Fn(usize) -> Option<usize>,
    max_order: usize,
) -> Vec<(usize, usize)> {
    (4..=max_order)
        .filter_map(|p| {
            let q = 2 * p - 2;
            (complement_size(p) == Some(q)).then_some((p, q))
        })
        .collect()
}

/// A graph and its complement have the same size exactly when
/// `q = p(p-1)/4`.
pub fn self_complementary_size(p: usize) -> Option<usize> {
    let total = p * (p - 1);
    (total % 4 == 0).then_some(total / 4)
}

/// Equal order and size for a polyhedron, its dual, and its complement
/// force `(p, q) = (8, 14)`.
pub fn verify_remark_8_14() -> bool {
    solve_equal_order_size(self_complementary_size, 1000) == [(8, 14)]
}

/// Census sizes that any correct run must reproduce: per size for
/// `q <= 14`, then per `(p, q)` for the three `p = 8` cases.
pub const EXPECTED_BY_SIZE: [(usize, usize); 9] = [
    (6, 1),
    (7, 0),
    (8, 1),
    (9, 2),
    (10, 2),
    (11, 4),
    (12, 12),
    (13, 22),
    (14, 58),
];
pub const EXPECTED_AT_ORDER_8: [(usize, usize); 3] = [(12, 2), (13, 11), (14, 42)];

/// Discrepancies between `census` and the expected counts it covers.
pub fn census_mismatches(census: &Census) -> Vec<String> {
    let limits = census.limits();
    let mut out = Vec::new();
    if limits.max_order >= 9 {
        for (q, want) in EXPECTED_BY_SIZE
            .into_iter()
            .filter(|&(q, _)| q <= limits.max_size)
        {
            let got = census.by_size(q).count();
            if got != want {
                out.push(format!("q = {q}: expected {want} polyhedra, found {got}"));
            }
        }
    }
    if limits.max_order >= 8 {
        for (q, want) in EXPECTED_AT_ORDER_8
            .into_iter()
            .filter(|&(q, _)| q <= limits.max_size)
        {
            let got = census.graphs(8, q).len();
            if got != want {
                out.push(format!(
                    "(p, q) = (8, {q}): expected {want} polyhedra, found {got}"
                ));
            }
        }
    }
    out
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} | {} {} {}",
            self.sequence,
            self.q,
            self.r,
            self.complement_sequence,
            self.complement_q,
            self.complement_r
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyhedral_predicate() {
        assert!(is_polyhedral(&Graph::complete(4).unwrap()));
        assert!(!is_polyhedral(&Graph::complete(5).unwrap()));
        assert!(!is_polyhedral(&Graph::cycle(8).unwrap()));
    }

    #[test]
    fn prune_trace() {
        let trace = prune_order();
        assert_eq!(admitted_orders(&trace), [8]);
        let at = |p: usize| trace.iter().find(|r| r.p == p).unwrap();
        assert_eq!(at(7).reason(), "odd degree sum 21");
        assert_eq!(
            at(9).reason(),
            "complement of 9-vertex planar graph non-planar"
        );
        assert_eq!((at(8).min_degree, at(8).max_degree), (3, 4));
        assert_eq!(at(6).verdict, Verdict::DegreeBoundsEmpty);
    }

    #[test]
    fn table_rows() {
        let rows: Vec<String> = candidate_degree_rows()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            rows,
            [
                "33333333 12 6 | 44444444 16 10",
                "44333333 13 7 | 44444433 15 9",
                "44443333 14 8 | 44443333 14 8",
            ]
        );
    }

    #[test]
    fn remark_system() {
        assert!(verify_remark_8_14());
        // Demanding a complete graph instead leaves only the tetrahedron.
        assert_eq!(
            solve_equal_order_size(|p| Some(p * (p - 1) / 2), 1000),
            [(4, 6)]
        );
    }

    #[test]
    fn counting_alone_limits_orders() {
        assert_eq!(counting_orders(), [8, 9, 10]);
    }

    #[test]
    fn small_census_is_refused() {
        let census = Census::generate(Limits {
            max_order: 8,
            max_size: 14,
        });
        assert!(matches!(
            solve_question(&census),
            Err(ClassifyError::CensusUnavailable { .. })
        ));
    }
}
