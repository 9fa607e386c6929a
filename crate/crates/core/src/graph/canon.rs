//! Canonical labeling by individualization and refinement.
//!
//! The partition is refined to an equitable one by splitting cells on
//! neighbor counts into every other cell; ties are broken by individualizing
//! each vertex of the first smallest non-singleton cell in turn. The leaf
//! with the largest (refinement trace, permuted adjacency) certificate wins.
//! Subtrees are pruned when their trace prefix is already smaller than the
//! best one, or when an automorphism found at an earlier leaf maps them onto
//! an explored sibling.
//!
//! The same machinery handles directed graphs: splitting uses out- and
//! in-neighbor counts separately.

use super::graph6::graph6_bytes;
use super::{bit, bits, Graph};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonically relabeled graph.
    pub key: Vec<u8>,
    /// `relabeling[v]` is the canonical index of input vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn key_hex(&self) -> String {
        hex::encode(&self.key)
    }

    /// The canonical graph itself, as graph6 text.
    pub fn graph6(&self) -> String {
        String::from_utf8(self.key.clone()).expect("graph6 is ASCII")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphForm {
    /// Vertex count followed by the canonical out-neighbor masks, little endian.
    pub key: Vec<u8>,
    pub relabeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = Searcher::run(g.masks(), g.masks());
    let key = graph6_bytes(&g.permute(&perm));
    CanonicalForm { key, relabeling: perm }
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && g1.degree_sequence() == g2.degree_sequence()
        && canonical_form(g1).key == canonical_form(g2).key
}

/// Canonical form of the directed graph given by out-neighbor masks.
pub(crate) fn canonical_digraph(out: &[u64]) -> DigraphForm {
    let n = out.len();
    let mut inn = vec![0u64; n];
    for (v, &m) in out.iter().enumerate() {
        for u in bits(m) {
            inn[u] |= bit(v);
        }
    }
    let perm = Searcher::run(out, &inn);
    let mut rows = vec![0u64; n];
    for (v, &m) in out.iter().enumerate() {
        rows[perm[v]] = bits(m).fold(0, |acc, u| acc | bit(perm[u]));
    }
    let mut key = vec![n as u8];
    for r in rows {
        key.extend_from_slice(&r.to_le_bytes());
    }
    DigraphForm { key, relabeling: perm }
}

/// Number of automorphisms, by exhaustive isomorphism search. Only meant for
/// small or lightly symmetric graphs.
pub fn automorphism_count(g: &Graph) -> u64 {
    fn extend(g: &Graph, map: &mut Vec<usize>, used: u64, v: usize) -> u64 {
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n() {
            if used & bit(w) != 0 || g.degree(w) != g.degree(v) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w));
            if ok {
                map.push(w);
                total += extend(g, map, used | bit(w), v + 1);
                map.pop();
            }
        }
        total
    }
    extend(g, &mut Vec::with_capacity(g.n()), 0, 0)
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    traces: Vec<Vec<u32>>,
    cert: Vec<u64>,
    perm: Vec<usize>,
}

struct Searcher<'a> {
    n: usize,
    out: &'a [u64],
    inn: &'a [u64],
    path: Vec<Vec<u32>>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn run(out: &'a [u64], inn: &'a [u64]) -> Vec<usize> {
        let n = out.len();
        if n == 0 {
            return Vec::new();
        }
        let mut s = Searcher { n, out, inn, path: Vec::new(), best: None, generators: Vec::new() };
        s.search(vec![(0..n).collect()], &mut Vec::new());
        s.best.expect("search visits at least one leaf").perm
    }

    fn refine(&self, mut cells: Cells) -> (Cells, Vec<u32>) {
        let mut trace = Vec::new();
        'outer: loop {
            for w in 0..cells.len() {
                let wmask = cells[w].iter().fold(0u64, |m, &v| m | bit(v));
                for x in 0..cells.len() {
                    if cells[x].len() == 1 {
                        continue;
                    }
                    let sig = |v: usize| {
                        ((self.out[v] & wmask).count_ones(), (self.inn[v] & wmask).count_ones())
                    };
                    let first = sig(cells[x][0]);
                    if cells[x].iter().all(|&v| sig(v) == first) {
                        continue;
                    }
                    let mut keyed: Vec<((u32, u32), usize)> = cells[x].iter().map(|&v| (sig(v), v)).collect();
                    keyed.sort();
                    let mut parts: Cells = Vec::new();
                    trace.extend([w as u32, x as u32]);
                    let mut i = 0;
                    while i < keyed.len() {
                        let k = keyed[i].0;
                        let mut part = Vec::new();
                        while i < keyed.len() && keyed[i].0 == k {
                            part.push(keyed[i].1);
                            i += 1;
                        }
                        trace.extend([k.0, k.1, part.len() as u32]);
                        parts.push(part);
                    }
                    cells.splice(x..=x, parts);
                    continue 'outer;
                }
            }
            break;
        }
        trace.push(cells.len() as u32);
        (cells, trace)
    }

    fn compare_prefix(&self) -> Ordering {
        match &self.best {
            None => Ordering::Greater,
            Some(best) => {
                for (a, b) in self.path.iter().zip(&best.traces) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let (cells, trace) = self.refine(cells);
        self.path.push(trace);
        if self.compare_prefix() == Ordering::Less {
            self.path.pop();
            return;
        }
        if cells.len() == self.n {
            self.leaf(&cells);
            self.path.pop();
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
        self.path.pop();
    }

    fn leaf(&mut self, cells: &Cells) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut cert = vec![0u64; self.n];
        for v in 0..self.n {
            cert[perm[v]] = bits(self.out[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        let ord = match &self.best {
            None => Ordering::Greater,
            Some(best) => self.path.cmp(&best.traces).then_with(|| cert.cmp(&best.cert)),
        };
        match ord {
            Ordering::Greater => {
                self.best = Some(Leaf { traces: self.path.clone(), cert, perm });
            }
            Ordering::Equal => {
                let best = self.best.as_ref().unwrap();
                let mut inv = vec![0usize; self.n];
                for (v, &p) in best.perm.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = (0..self.n).map(|v| inv[perm[v]]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.generators.push(gamma);
                }
            }
            Ordering::Less => {}
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if prefix.iter().all(|&p| g[p] == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}
