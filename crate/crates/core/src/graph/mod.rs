//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, which keeps the
//! rule checks and the search inner loops down to a handful of bit operations.

mod canon;
mod graph6;

pub use canon::{automorphism_count, canonical_form, is_isomorphic, CanonicalForm, DigraphForm};
pub use graph6::{emit_graph6, parse_graph6};
pub(crate) use canon::canonical_digraph;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Unordered edge stored with `a < b`.
pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, capacity is {MAX_VERTICES}")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {to} unreachable from {from} (infinite distance)")]
    Disconnected { from: usize, to: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("graph is not bipartite")]
    NotBipartite,
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterate the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable simple graph with dense 0-based vertex labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        Ok(Graph { n, adj: vec![0; n], edges: Vec::new() })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Self::from_masks_unchecked(adj))
    }

    /// Builds a graph from neighbor masks; the masks must already be symmetric
    /// and loop-free.
    pub(crate) fn from_masks_unchecked(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for a in 0..n {
            debug_assert_eq!(adj[a] & bit(a), 0);
            for b in bits(adj[a] & !full_mask(a + 1)) {
                debug_assert!(adj[b] & bit(a) != 0);
                edges.push((a, b));
            }
        }
        Graph { n, adj, edges }
    }

    /// Same as [`Graph::from_edges`] with 1-based vertex labels, which is how
    /// most hand-written fixtures are stated.
    pub fn from_edges_1based(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let shifted: Vec<Edge> = edges
            .iter()
            .map(|&(a, b)| (a.wrapping_sub(1), b.wrapping_sub(1)))
            .collect();
        Self::from_edges(n, &shifted)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge as `(a, b)` with `a < b`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & bit(b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn common_neighbors(&self, a: usize, b: usize) -> u64 {
        self.adj[a] & self.adj[b]
    }

    /// Index of edge `(a, b)` in [`Graph::edges`], in either orientation.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[perm[a]] |= bit(perm[b]);
            adj[perm[b]] |= bit(perm[a]);
        }
        Graph::from_masks_unchecked(adj)
    }

    /// Subgraph induced on `vertices`, relabeled in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut adj = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate() {
                if self.has_edge(u, w) {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph::from_masks_unchecked(adj)
    }

    /// Graph with one extra vertex (index `n`) joined to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend(neighbors.iter().map(|&u| (u, self.n)));
        Graph::from_edges(self.n + 1, &edges)
    }

    /// BFS distances from `root`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut seen = bit(root);
        let mut frontier = bit(root);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize, GraphError> {
        self.bfs_distances(a)[b].ok_or(GraphError::Disconnected { from: a, to: b })
    }

    /// All-pairs distance matrix; fails on disconnected graphs.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        (0..self.n)
            .map(|a| {
                self.bfs_distances(a)
                    .into_iter()
                    .enumerate()
                    .map(|(b, d)| d.ok_or(GraphError::Disconnected { from: a, to: b }))
                    .collect()
            })
            .collect()
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize, GraphError> {
        let mut ecc = 0;
        for (b, d) in self.bfs_distances(v).into_iter().enumerate() {
            ecc = ecc.max(d.ok_or(GraphError::Disconnected { from: v, to: b })?);
        }
        Ok(ecc)
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut d = 0;
        for v in 0..self.n {
            d = d.max(self.eccentricity(v)?);
        }
        Ok(d)
    }

    /// Two-coloring or a shortest odd cycle.
    pub fn bipartition(&self) -> Bipartiteness {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in bits(self.adj[v]) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return Bipartiteness::OddCycle(self.shortest_odd_cycle());
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }

    fn shortest_odd_cycle(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for root in 0..self.n {
            let mut parent = vec![usize::MAX; self.n];
            let mut depth = vec![usize::MAX; self.n];
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in bits(self.adj[v]) {
                    if depth[u] == usize::MAX {
                        depth[u] = depth[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    }
                }
            }
            for &(a, b) in &self.edges {
                if depth[a] == usize::MAX || depth[a] != depth[b] {
                    continue;
                }
                let len = 2 * depth[a] + 1;
                if best.as_ref().is_some_and(|c| c.len() <= len) {
                    continue;
                }
                let path = |mut v: usize| {
                    let mut p = vec![v];
                    while v != root {
                        v = parent[v];
                        p.push(v);
                    }
                    p
                };
                let (pa, pb) = (path(a), path(b));
                // Both paths end at the root; the cycle is simple only if
                // they first meet there.
                let meet_early = pa[..pa.len() - 1].iter().any(|v| pb[..pb.len() - 1].contains(v));
                if meet_early {
                    continue;
                }
                let mut cycle: Vec<usize> = pa.iter().rev().copied().collect();
                cycle.extend(pb[..pb.len() - 1].iter());
                best = Some(cycle);
            }
        }
        best.expect("non-bipartite graph has an odd cycle")
    }

    /// BFS layers from `root`.
    pub fn layer_decomposition(&self, root: usize) -> Result<LayerDecomposition, GraphError> {
        let dist = self.bfs_distances(root);
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for (v, d) in dist.into_iter().enumerate() {
            let d = d.ok_or(GraphError::Disconnected { from: root, to: v })?;
            if layers.len() <= d {
                layers.resize(d + 1, Vec::new());
            }
            layers[d].push(v);
        }
        let sequence = layers.iter().map(Vec::len).collect();
        Ok(LayerDecomposition { root, layers, sequence })
    }

    /// Every 4-cycle exactly once, in canonical representative form.
    pub fn four_cycles(&self) -> Vec<FourCycle> {
        let mut out = Vec::new();
        for a in 0..self.n {
            // b ranges over vertices > a so that a is the minimum of the cycle.
            for b in (a + 1)..self.n {
                let common = self.adj[a] & self.adj[b] & !full_mask(a + 1);
                let cs: Vec<usize> = bits(common).collect();
                for i in 0..cs.len() {
                    for j in (i + 1)..cs.len() {
                        out.push(FourCycle { a, c: cs[i], b, d: cs[j] });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Every pair at distance exactly two together with its common neighbors.
    pub fn distance_two_pairs(&self) -> Vec<DistanceTwoPair> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.has_edge(a, b) {
                    continue;
                }
                let common = self.adj[a] & self.adj[b];
                if common != 0 {
                    out.push(DistanceTwoPair { a, b, common: bits(common).collect() });
                }
            }
        }
        out
    }

    /// Cartesian product; vertex `(u1, u2)` gets index `u1 * g2.n() + u2`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let idx = |u: usize, w: usize| u * other.n + w;
        let mut edges = Vec::new();
        for u in 0..self.n {
            for &(w1, w2) in &other.edges {
                edges.push((idx(u, w1), idx(u, w2)));
            }
        }
        for &(u1, u2) in &self.edges {
            for w in 0..other.n {
                edges.push((idx(u1, w), idx(u2, w)));
            }
        }
        Graph::from_edges(n, &edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Color (0 or 1) per vertex.
    Bipartite(Vec<u8>),
    /// Vertices of a shortest odd cycle in traversal order.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerDecomposition {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    pub sequence: Vec<usize>,
}

impl LayerDecomposition {
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v))
    }
}

/// A 4-cycle `a ~ c ~ b ~ d ~ a` with `a` its smallest vertex and `c < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FourCycle {
    pub a: usize,
    pub c: usize,
    pub b: usize,
    pub d: usize,
}

impl FourCycle {
    /// Builds the canonical representative of the cycle `v0 ~ v1 ~ v2 ~ v3 ~ v0`.
    pub fn from_cycle(v: [usize; 4]) -> FourCycle {
        let i = (0..4).min_by_key(|&i| v[i]).unwrap();
        let a = v[i];
        let b = v[(i + 2) % 4];
        let (x, y) = (v[(i + 1) % 4], v[(i + 3) % 4]);
        FourCycle { a, c: x.min(y), b, d: x.max(y) }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.c, self.b, self.d]
    }

    /// The two diagonals, each as a sorted pair: `(a, b)` and `(c, d)`.
    pub fn diagonals(&self) -> [(usize, usize); 2] {
        [(self.a.min(self.b), self.a.max(self.b)), (self.c, self.d)]
    }

    /// The four edges in traversal order `a-c, c-b, b-d, d-a`.
    pub fn edges(&self) -> [(usize, usize); 4] {
        [(self.a, self.c), (self.c, self.b), (self.b, self.d), (self.d, self.a)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistanceTwoPair {
    pub a: usize,
    pub b: usize,
    pub common: Vec<usize>,
}

impl DistanceTwoPair {
    pub fn multiplicity(&self) -> usize {
        self.common.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { .. })));
        assert_eq!(Graph::empty(65), Err(GraphError::Capacity(65)));
    }

    #[test]
    fn parallel_edges_merge() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn k23_basics() {
        let g = k23();
        assert_eq!(g.diameter(), Ok(2));
        assert_eq!(g.four_cycles().len(), 3);
        // Hubs 0,1 share three spokes; each spoke pair shares the two hubs.
        let pairs = g.distance_two_pairs();
        assert_eq!(pairs.len(), 4);
        assert_eq!(pairs.iter().filter(|p| p.multiplicity() == 2).count(), 3);
        assert_eq!(pairs[0], DistanceTwoPair { a: 0, b: 1, common: vec![2, 3, 4] });
        assert_eq!(g.layer_decomposition(0).unwrap().sequence, vec![1, 3, 1]);
        assert_eq!(g.layer_decomposition(2).unwrap().sequence, vec![1, 2, 2]);
    }

    #[test]
    fn disconnected_distance() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.distance(0, 2), Err(GraphError::Disconnected { from: 0, to: 2 }));
        assert!(g.diameter().is_err());
        assert!(g.layer_decomposition(0).is_err());
    }

    #[test]
    fn odd_cycle_witness() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        match c5.bipartition() {
            Bipartiteness::OddCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_cycle_representative() {
        let fc = FourCycle::from_cycle([3, 1, 2, 0]);
        // 3~1~2~0~3: 0 sits opposite 1.
        assert_eq!(fc, FourCycle { a: 0, c: 2, b: 1, d: 3 });
        assert_eq!(fc.diagonals(), [(0, 1), (2, 3)]);
    }

    #[test]
    fn product_capacity() {
        let big = Graph::empty(9).unwrap();
        assert_eq!(big.cartesian_product(&big), Err(GraphError::Capacity(81)));
    }
}
