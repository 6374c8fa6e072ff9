//! Exhaustive search for subdivisions of K5 and K3,3.
//!
//! This is an independent planarity oracle for testing the embedder: it
//! shares no code with the path-addition method and is exponential, so it
//! refuses graphs above [`KURATOWSKI_MAX_ORDER`] vertices.

use crate::graph::{Graph, VertexSet};

use super::EmbeddingError;

pub const KURATOWSKI_MAX_ORDER: usize = 9;

/// `Ok(true)` iff `g` contains no subdivision of K5 or K3,3.
pub fn kuratowski_oracle(g: &Graph) -> Result<bool, EmbeddingError> {
    if g.order() > KURATOWSKI_MAX_ORDER {
        return Err(EmbeddingError::OracleTooLarge(g.order()));
    }
    Ok(!has_k5_subdivision(g) && !has_k33_subdivision(g))
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let candidates: VertexSet = (0..g.order()).filter(|&v| g.degree(v) >= 4).collect();
    subsets(candidates, 5).any(|branch| {
        let b: Vec<usize> = branch.iter().collect();
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (b[i], b[j]))
            .collect();
        link_all(g, &pairs, branch)
    })
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let candidates: VertexSet = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    subsets(candidates, 6).any(|branch| {
        let anchor = branch.first().expect("six branch vertices");
        subsets(branch.without(anchor), 2).any(|rest| {
            let side_a = rest.with(anchor);
            let side_b = branch - side_a;
            let pairs: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|a| side_b.iter().map(move |b| (a, b)))
                .collect();
            link_all(g, &pairs, branch)
        })
    })
}

/// Whether every pair can be joined by a path, the paths pairwise
/// internally disjoint and avoiding `used` in their interiors.
fn link_all(g: &Graph, pairs: &[(usize, usize)], used: VertexSet) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    let free = g.vertices() - used;
    extend_path(g, a, b, free, VertexSet::EMPTY, &mut |interior| {
        link_all(g, rest, used | interior)
    })
}

/// Depth-first enumeration of simple `cur -> goal` paths whose interior
/// vertices lie in `free`; `found` decides whether to stop.
fn extend_path(
    g: &Graph,
    cur: usize,
    goal: usize,
    free: VertexSet,
    interior: VertexSet,
    found: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    if g.has_edge(cur, goal) && found(interior) {
        return true;
    }
    for next in (g.neighbors(cur) & free) - interior {
        if extend_path(g, next, goal, free, interior.with(next), found) {
            return true;
        }
    }
    false
}

/// All `k`-element subsets of `set`, in colexicographic order.
fn subsets(set: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members: Vec<usize> = set.iter().collect();
    let n = members.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: VertexSet = idx.iter().map(|&i| members[i]).collect();
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(VertexSet::full(9), 5).count(), 126);
        assert_eq!(subsets(VertexSet::full(4), 0).count(), 1);
        assert_eq!(subsets(VertexSet::full(3), 4).count(), 0);
    }

    #[test]
    fn classic_obstructions() {
        assert_eq!(kuratowski_oracle(&Graph::complete(5).unwrap()), Ok(false));
        assert_eq!(
            kuratowski_oracle(&Graph::complete_bipartite(3, 3).unwrap()),
            Ok(false)
        );
        assert_eq!(kuratowski_oracle(&Graph::path(8).unwrap()), Ok(true));
        assert_eq!(kuratowski_oracle(&Graph::cube()), Ok(true));
    }

    #[test]
    fn petersen_minus_a_vertex_is_nonplanar() {
        let p9 = Graph::petersen()
            .induced_subgraph(VertexSet::full(10).without(0))
            .unwrap();
        assert_eq!(p9.order(), 9);
        assert!(!has_k5_subdivision(&p9));
        assert!(has_k33_subdivision(&p9));
    }

    #[test]
    fn subdivided_k5_is_found() {
        // Subdivide two edges of K5: 0-1 through 5 and 2-3 through 6.
        let g = Graph::complete(5)
            .unwrap()
            .without_edge(0, 1)
            .without_edge(2, 3);
        let g = g.with_vertex(VertexSet::singleton(0).with(1)).unwrap();
        let g = g.with_vertex(VertexSet::singleton(2).with(3)).unwrap();
        assert_eq!(kuratowski_oracle(&g), Ok(false));
    }

    #[test]
    fn refuses_large_graphs() {
        assert_eq!(
            kuratowski_oracle(&Graph::petersen()),
            Err(EmbeddingError::OracleTooLarge(10))
        );
    }
}
