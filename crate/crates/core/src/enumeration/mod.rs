//! Isomorph-free enumeration of polyhedra.
//!
//! The production path is canonical augmentation from wheels (see
//! [`Census::generate`]). [`exhaustive_polyhedra`] is an independent
//! brute-force filter used to audit it. Both return canonically labelled
//! representatives sorted by canonical form.

mod augment;
mod exhaustive;

use thiserror::Error;

use crate::graph::{DegreeSequence, Graph, MAX_ORDER};
use crate::isomorphism::CanonicalForm;

pub use exhaustive::{all_graphs, exhaustive_polyhedra, EXHAUSTIVE_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("no polyhedron has {0} edges; the tetrahedron has 6")]
    SizeTooSmall(usize),
    #[error("(p, q) = ({p}, {q}) exceeds the limits p <= {max_order}, q <= {max_size}")]
    ExceedsLimits {
        p: usize,
        q: usize,
        max_order: usize,
        max_size: usize,
    },
}

/// Guard rails on how far the search may go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_size: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_order: 9,
            max_size: 14,
        }
    }
}

impl Limits {
    fn check(&self, p: usize, q: usize) -> Result<(), EnumerationError> {
        if p > self.max_order || q > self.max_size || p > MAX_ORDER {
            return Err(EnumerationError::ExceedsLimits {
                p,
                q,
                max_order: self.max_order,
                max_size: self.max_size,
            });
        }
        Ok(())
    }
}

/// Orders a polyhedron with `q` edges can have: `q <= 3p - 6` from planarity
/// and `2q >= 3p` from minimum degree three.
pub fn order_bounds(q: usize) -> Result<(usize, usize), EnumerationError> {
    if q < 6 {
        return Err(EnumerationError::SizeTooSmall(q));
    }
    Ok(((q + 6).div_ceil(3), 2 * q / 3))
}

/// Every polyhedron found within some limits, grouped by size.
#[derive(Debug, Clone)]
pub struct Census {
    limits: Limits,
    layers: Vec<Vec<(CanonicalForm, Graph)>>,
}

impl Census {
    pub fn generate(limits: Limits) -> Census {
        let layers = augment::generate(&limits)
            .into_iter()
            .map(|layer| {
                layer
                    .into_iter()
                    .map(|c| {
                        let g = c.to_graph().expect("certificate of a generated graph");
                        (c, g)
                    })
                    .collect()
            })
            .collect();
        Census { limits, layers }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Polyhedra with `q` edges, all orders, sorted by canonical form.
    pub fn by_size(&self, q: usize) -> impl Iterator<Item = &(CanonicalForm, Graph)> + '_ {
        self.layers.get(q).into_iter().flatten()
    }

    pub fn graphs(&self, p: usize, q: usize) -> Vec<Graph> {
        self.by_size(q)
            .filter(|(_, g)| g.order() == p)
            .map(|(_, g)| *g)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(CanonicalForm, Graph)> + '_ {
        self.layers.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Polyhedra of order `p` and size `q` under the default limits.
pub fn enumerate_polyhedra(p: usize, q: usize) -> Result<Vec<Graph>, EnumerationError> {
    enumerate_polyhedra_with(p, q, Limits::default())
}

/// Polyhedra of order `p` and size `q`, sorted by canonical form. A pair
/// outside [`order_bounds`] has no polyhedra and gives an empty list.
pub fn enumerate_polyhedra_with(
    p: usize,
    q: usize,
    limits: Limits,
) -> Result<Vec<Graph>, EnumerationError> {
    limits.check(p, q)?;
    match order_bounds(q) {
        Ok((lo, hi)) if (lo..=hi).contains(&p) => {}
        _ => return Ok(Vec::new()),
    }
    let census = Census::generate(Limits {
        max_order: p,
        max_size: q,
    });
    Ok(census.graphs(p, q))
}

/// Polyhedra with `q` edges under the default limits.
pub fn enumerate_by_size(q: usize) -> Result<Vec<Graph>, EnumerationError> {
    enumerate_by_size_with(q, Limits::default())
}

/// Polyhedra with `q` edges and at most `limits.max_order` vertices,
/// sorted by canonical form (hence by order first).
pub fn enumerate_by_size_with(q: usize, limits: Limits) -> Result<Vec<Graph>, EnumerationError> {
    let (lo, hi) = order_bounds(q)?;
    limits.check(lo, q)?;
    let max_order = hi.min(limits.max_order);
    let census = Census::generate(Limits {
        max_order,
        max_size: q,
    });
    Ok(census.by_size(q).map(|(_, g)| *g).collect())
}

pub fn filter_by_degree_sequence(gs: &[Graph], d: &DegreeSequence) -> Vec<Graph> {
    gs.iter()
        .filter(|g| g.degree_sequence() == *d)
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(order_bounds(6), Ok((4, 4)));
        assert_eq!(order_bounds(12), Ok((6, 8)));
        assert_eq!(order_bounds(14), Ok((7, 9)));
        assert_eq!(order_bounds(5), Err(EnumerationError::SizeTooSmall(5)));
    }

    #[test]
    fn out_of_bound_pairs_are_empty() {
        assert_eq!(enumerate_polyhedra(4, 7), Ok(Vec::new()));
        assert_eq!(enumerate_polyhedra(9, 12), Ok(Vec::new()));
        assert!(matches!(
            enumerate_polyhedra(10, 15),
            Err(EnumerationError::ExceedsLimits { .. })
        ));
    }

    #[test]
    fn odd_sum_filter_is_empty() {
        let gs = enumerate_polyhedra(8, 13).unwrap();
        let odd: DegreeSequence = "44333332".parse().unwrap();
        assert!(filter_by_degree_sequence(&gs, &odd).is_empty());
    }
}
