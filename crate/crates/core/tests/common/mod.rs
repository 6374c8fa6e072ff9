//! Oracles written against plain adjacency matrices, sharing no code with
//! the library's algorithms.
#![allow(dead_code)]

use polycomp::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn connected_without(adj: &[Vec<bool>], removed: &[usize]) -> bool {
    let n = adj.len();
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] && !removed.contains(&v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// At least four vertices and connected after deleting any one or two.
pub fn naive_3_connected(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = adj.len();
    if n < 4 || !connected_without(&adj, &[]) {
        return false;
    }
    for a in 0..n {
        if !connected_without(&adj, &[a]) {
            return false;
        }
        for b in a + 1..n {
            if !connected_without(&adj, &[a, b]) {
                return false;
            }
        }
    }
    true
}

pub fn component_count(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Tries every bijection; only for small orders.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (ma, mb) = (matrix(a), matrix(b));
    let n = ma.len();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (0..n).all(|v| ma[u][v] == mb[perm[u]][perm[v]])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
