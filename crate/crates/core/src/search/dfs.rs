use super::{Catalog, CatalogEntry, SeedGraph, SeedKind};
use crate::graph::{bit, bits, Edge, Graph};
use crate::rules::{find_lone_path, find_unrescued_1221};

/// One depth-first search tree: a seed embedded on vertices 0..8 of an
/// n-vertex graph and the ordered list of edges left to decide.
pub(super) struct Job {
    kind: SeedKind,
    n: usize,
    base: Vec<u64>,
    pub(super) vars: Vec<Edge>,
    /// Layer of each vertex in layered mode.
    layer_of: Option<Vec<usize>>,
}

impl Job {
    fn base_masks(n: usize, seed: &SeedGraph) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        for &(a, b) in &seed.base_edges {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        adj
    }

    pub(super) fn basic(n: usize, seed: &SeedGraph) -> Job {
        let mut vars = seed.optional_edges.clone();
        for v in 8..n {
            vars.extend((0..8).map(|s| (s, v)));
        }
        for v in 8..n {
            vars.extend((8..v).map(|u| (u, v)));
        }
        Job { kind: seed.kind, n, base: Self::base_masks(n, seed), vars, layer_of: None }
    }

    /// New vertices fill the layers in order; a sequence whose early layers
    /// are smaller than the seed's own yields a job with no leaves.
    pub(super) fn layered(n: usize, seed: &SeedGraph, seq: &[usize]) -> Job {
        let mut layer_of = vec![usize::MAX; n];
        for (i, layer) in seed.layers().iter().enumerate() {
            for &v in layer {
                layer_of[v] = i;
            }
        }
        let seed_sizes = [1, 3, 3, 1];
        let mut next = 8;
        let mut feasible = true;
        for (i, &size) in seq.iter().enumerate() {
            let have = seed_sizes.get(i).copied().unwrap_or(0);
            if size < have {
                feasible = false;
                break;
            }
            for _ in have..size {
                layer_of[next] = i;
                next += 1;
            }
        }
        if !feasible || next != n {
            return Job { kind: seed.kind, n: 0, base: Vec::new(), vars: Vec::new(), layer_of: None };
        }
        let adjacent = |a: usize, b: usize| layer_of[a].abs_diff(layer_of[b]) == 1;
        let mut vars: Vec<Edge> = seed.optional_edges.iter().copied().filter(|&(a, b)| adjacent(a, b)).collect();
        for v in 8..n {
            vars.extend((0..8).filter(|&s| adjacent(s, v)).map(|s| (s, v)));
        }
        for v in 8..n {
            vars.extend((8..v).filter(|&u| adjacent(u, v)).map(|u| (u, v)));
        }
        Job { kind: seed.kind, n, base: Self::base_masks(n, seed), vars, layer_of: Some(layer_of) }
    }

    /// Explores the subtree whose first `p` decisions are the low bits of
    /// `prefix` (bit i set = edge i present).
    pub(super) fn run_unit(&self, p: usize, prefix: u64) -> Catalog {
        let mut cat = Catalog::new(self.n);
        if self.n == 0 {
            return cat;
        }
        let mut adj = self.base.clone();
        self.dfs(0, p, prefix, &mut adj, &mut cat);
        cat
    }

    fn dfs(&self, idx: usize, p: usize, prefix: u64, adj: &mut [u64], cat: &mut Catalog) {
        if idx == self.vars.len() {
            self.leaf(adj, cat);
            return;
        }
        let forced = (idx < p).then(|| prefix >> idx & 1 == 1);
        if forced != Some(true) {
            self.dfs(idx + 1, p, prefix, adj, cat);
        }
        let (a, b) = self.vars[idx];
        if forced != Some(false) && adj[a] & adj[b] == 0 && !closes_k33(adj, a, b) {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
            self.dfs(idx + 1, p, prefix, adj, cat);
            adj[a] &= !bit(b);
            adj[b] &= !bit(a);
        }
    }

    fn leaf(&self, adj: &[u64], cat: &mut Catalog) {
        cat.counters.leaves += 1;
        match &self.layer_of {
            None => {
                if !connected(adj) {
                    return cat.counters.fail("connectivity");
                }
                if !bipartite(adj) {
                    return cat.counters.fail("bipartite");
                }
            }
            Some(layer_of) => {
                let ok = (1..self.n).all(|v| bits(adj[v]).any(|u| layer_of[u] + 1 == layer_of[v]));
                if !ok {
                    return cat.counters.fail("layering");
                }
            }
        }
        if find_lone_path(adj).is_some() {
            return cat.counters.fail("two_path");
        }
        if find_unrescued_1221(adj).is_some() {
            return cat.counters.fail("1221");
        }
        let g = Graph::from_masks_unchecked(adj.to_vec());
        cat.insert(CatalogEntry::from_graph(&g, self.kind));
    }
}

/// Whether adding edge a-b (absent) completes a K_{3,3}. Any such K_{3,3}
/// has a on one side with two neighbors of b, and b on the other side with
/// two common neighbors of those three.
pub(crate) fn closes_k33(adj: &[u64], a: usize, b: usize) -> bool {
    let nb = adj[b];
    if nb.count_ones() < 2 || adj[a].count_ones() < 2 {
        return false;
    }
    for a1 in bits(nb) {
        let with_a1 = adj[a] & adj[a1];
        if with_a1.count_ones() < 2 {
            continue;
        }
        for a2 in bits(nb & !((bit(a1) << 1) - 1)) {
            if (with_a1 & adj[a2]).count_ones() >= 2 {
                return true;
            }
        }
    }
    false
}

fn connected(adj: &[u64]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | adj[v]) & !seen;
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize == adj.len()
}

/// Assumes connectivity.
fn bipartite(adj: &[u64]) -> bool {
    let mut side = [1u64, 0u64];
    let mut frontier = 1u64;
    let mut k = 0;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | adj[v]);
        if next & side[k] != 0 {
            return false;
        }
        k ^= 1;
        let fresh = next & !side[k];
        side[k] |= next;
        frontier = fresh;
    }
    side[0] & side[1] == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::find_k33;

    #[test]
    fn incremental_k33_matches_full_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(6..11);
            let mut adj = vec![0u64; n];
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.45) {
                        adj[a] |= bit(b);
                        adj[b] |= bit(a);
                    }
                }
            }
            if find_k33(&adj).is_some() {
                continue;
            }
            for a in 0..n {
                for b in a + 1..n {
                    if adj[a] & bit(b) != 0 {
                        continue;
                    }
                    let mut with = adj.clone();
                    with[a] |= bit(b);
                    with[b] |= bit(a);
                    assert_eq!(closes_k33(&adj, a, b), find_k33(&with).is_some());
                }
            }
        }
    }

    #[test]
    fn bipartite_masks() {
        let c5 = [0b10010u64, 0b00101, 0b01010, 0b10100, 0b01001];
        assert!(connected(&c5));
        assert!(!bipartite(&c5));
        let c4 = [0b1010u64, 0b0101, 0b1010, 0b0101];
        assert!(bipartite(&c4));
    }
}
