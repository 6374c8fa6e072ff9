use crate::graph::{Graph, VertexSet, MAX_ORDER};

use super::RotationSystem;

/// Embeds every block, then concatenates the per-block rotations at each
/// cut vertex. Returns `None` when some block is non-planar.
pub(super) fn embed(g: &Graph) -> Option<RotationSystem> {
    let n = g.order();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 2 {
            let mut it = block.iter();
            let (u, v) = (it.next()?, it.next()?);
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let faces = block_faces(g, block)?;
        let mut next = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
        for f in &faces {
            let k = f.len();
            for i in 0..k {
                let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                next[b as usize][a as usize] = c;
            }
        }
        for v in block {
            let nbrs = g.neighbors(v) & block;
            let start = nbrs.first()?;
            let mut u = start;
            loop {
                rotation[v].push(u);
                u = next[v][u] as usize;
                if u == start {
                    break;
                }
            }
            debug_assert_eq!(
                rotation[v].iter().filter(|&&w| nbrs.contains(w)).count(),
                nbrs.len()
            );
        }
    }
    Some(RotationSystem::new(rotation))
}

/// Vertex sets of the biconnected blocks (bridges included as 2-sets).
fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: [u8; MAX_ORDER],
        low: [u8; MAX_ORDER],
        time: u8,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block = block.with(a).with(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        disc: [0; MAX_ORDER],
        low: [0; MAX_ORDER],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.order() {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.out
}

/// A piece of the block not yet embedded: either a chord between two
/// embedded vertices or a component of unembedded vertices with its edges.
struct Fragment {
    interior: VertexSet,
    attachments: VertexSet,
}

/// Path-addition embedding of a 2-connected block with at least 3 vertices.
/// Returns the oriented face cycles, or `None` if the block is non-planar.
fn block_faces(g: &Graph, block: VertexSet) -> Option<Vec<Vec<u8>>> {
    let adj = |v: usize| g.neighbors(v) & block;

    // Initial cycle through the edge (u, v): a shortest v..u path avoiding uv.
    let u = block.first()?;
    let v = adj(u).first()?;
    let path = bfs_path(
        v,
        |x| {
            let mut out = adj(x);
            if x == v {
                out.remove(u);
            }
            out
        },
        |x| x == u,
    )?;
    let mut cycle = vec![u as u8, v as u8];
    cycle.extend(path[..path.len() - 1].iter().map(|&x| x as u8));

    let mut embedded: VertexSet = cycle.iter().map(|&x| x as usize).collect();
    let mut h = [0u16; MAX_ORDER];
    let k = cycle.len();
    for i in 0..k {
        let (a, b) = (cycle[i] as usize, cycle[(i + 1) % k] as usize);
        h[a] |= 1 << b;
        h[b] |= 1 << a;
    }
    let mut faces: Vec<Vec<u8>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    loop {
        let fragments = fragments(g, block, embedded, &h);
        if fragments.is_empty() {
            return Some(faces);
        }
        let face_sets: Vec<VertexSet> = faces
            .iter()
            .map(|f| f.iter().map(|&x| x as usize).collect())
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let mut admissible = face_sets
                .iter()
                .enumerate()
                .filter(|(_, s)| frag.attachments.is_subset(**s))
                .map(|(i, _)| i);
            let first = admissible.next()?;
            let forced = admissible.next().is_none();
            if forced {
                choice = Some((fi, first));
                break;
            }
            if choice.is_none() {
                choice = Some((fi, first));
            }
        }
        let (fi, face_idx) = choice?;
        let frag = &fragments[fi];

        let path = fragment_path(g, frag, embedded)?;
        for w in path.windows(2) {
            h[w[0]] |= 1 << w[1];
            h[w[1]] |= 1 << w[0];
        }
        for &x in &path {
            embedded.insert(x);
        }

        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0] as u8, path[path.len() - 1] as u8);
        let ia = face.iter().position(|&x| x == a)?;
        let ib = face.iter().position(|&x| x == b)?;
        let interior = &path[1..path.len() - 1];
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % face.len();
            }
            out
        };
        let mut f1 = arc(ia, ib);
        f1.extend(interior.iter().rev().map(|&x| x as u8));
        let mut f2 = arc(ib, ia);
        f2.extend(interior.iter().map(|&x| x as u8));
        faces.push(f1);
        faces.push(f2);
    }
}

fn fragments(
    g: &Graph,
    block: VertexSet,
    embedded: VertexSet,
    h: &[u16; MAX_ORDER],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in embedded {
        let chords = (g.neighbors(u) & embedded & block) - VertexSet(h[u]);
        for v in chords {
            if u < v {
                out.push(Fragment {
                    interior: VertexSet::EMPTY,
                    attachments: VertexSet::singleton(u).with(v),
                });
            }
        }
    }
    let mut left = block - embedded;
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        let mut attachments = VertexSet::EMPTY;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                let nb = g.neighbors(v) & block;
                next = next | (nb - embedded);
                attachments = attachments | (nb & embedded);
            }
            frontier = next - comp;
            comp = comp | frontier;
        }
        left = left - comp;
        out.push(Fragment {
            interior: comp,
            attachments,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, embedded: VertexSet) -> Option<Vec<usize>> {
    let mut attach = frag.attachments.iter();
    let a = attach.next()?;
    if frag.interior.is_empty() {
        return Some(vec![a, attach.next()?]);
    }
    let others = frag.attachments.without(a);
    let mut path = bfs_path(
        a,
        |x| {
            if x == a {
                g.neighbors(a) & frag.interior
            } else {
                (g.neighbors(x) & frag.interior) | (g.neighbors(x) & others & embedded)
            }
        },
        |x| others.contains(x),
    )?;
    path.insert(0, a);
    Some(path)
}

/// Breadth-first search from `start`; returns the path `start, ..., goal`
/// excluding `start` itself, or `None`.
fn bfs_path(
    start: usize,
    step: impl Fn(usize) -> VertexSet,
    is_goal: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent = [u8::MAX; MAX_ORDER];
    let mut seen = VertexSet::singleton(start);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in step(x) - seen {
            seen.insert(y);
            parent[y] = x as u8;
            if is_goal(y) {
                let mut path = vec![y];
                let mut cur = y;
                while parent[cur] as usize != start {
                    cur = parent[cur] as usize;
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_of_a_bowtie_with_tail() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        let mut bs = blocks(&g);
        bs.sort();
        let expect: Vec<VertexSet> = vec![
            [0, 1, 2].into_iter().collect(),
            [0, 3, 4].into_iter().collect(),
            [4, 5].into_iter().collect(),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(bs, expect);
    }

    #[test]
    fn block_faces_partition_darts() {
        let g = Graph::complete(4).unwrap();
        let faces = block_faces(&g, g.vertices()).unwrap();
        assert_eq!(faces.len(), 4);
        assert_eq!(faces.iter().map(|f| f.len()).sum::<usize>(), 12);
    }
}
