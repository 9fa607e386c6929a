//! The four necessary rules for a candidate graph, plus the stricter
//! (0,2) class and the diameter bound.
//!
//! The 1221 pattern is K_{3,3} minus an edge, read as a layer graph
//! `1 | 2,3 | 4,5 | 6` with edges 1-2, 1-3, 2-4, 2-5, 3-4, 3-5, 4-6, 5-6. Its
//! four distance-2 pairs joined by a single 2-path are (1,4), (1,5), (2,6)
//! and (3,6); an embedding is rescued when a seventh vertex adds a second
//! 2-path to any of them.

use crate::graph::{bit, bits, full_mask, Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCheck<W> {
    pub pass: bool,
    /// First violation in lexicographic order, present iff `pass` is false.
    pub witness: Option<W>,
}

impl<W> RuleCheck<W> {
    fn from_witness(witness: Option<W>) -> Self {
        RuleCheck { pass: witness.is_none(), witness }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonePath {
    pub a: usize,
    pub b: usize,
    /// The only common neighbor of `a` and `b`.
    pub middle: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct K33 {
    pub left: [usize; 3],
    pub right: [usize; 3],
}

/// Images of pattern vertices 1..6 under an unrescued 1221 embedding.
pub type Embedding1221 = [usize; 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub no_k3: RuleCheck<[usize; 3]>,
    pub two_path: RuleCheck<LonePath>,
    pub no_k33: RuleCheck<K33>,
    pub no_1221: RuleCheck<Embedding1221>,
    pub candidate: bool,
    pub bipartite: bool,
    pub connected: bool,
}

pub fn check_no_k3(g: &Graph) -> RuleCheck<[usize; 3]> {
    RuleCheck::from_witness(find_triangle(g.masks()))
}

pub fn check_two_path(g: &Graph) -> RuleCheck<LonePath> {
    RuleCheck::from_witness(find_lone_path(g.masks()))
}

pub fn check_no_k33(g: &Graph) -> RuleCheck<K33> {
    RuleCheck::from_witness(find_k33(g.masks()))
}

pub fn check_no_1221(g: &Graph) -> RuleCheck<Embedding1221> {
    RuleCheck::from_witness(find_unrescued_1221(g.masks()))
}

pub fn is_candidate(g: &Graph) -> RuleReport {
    let no_k3 = check_no_k3(g);
    let two_path = check_two_path(g);
    let no_k33 = check_no_k33(g);
    let no_1221 = check_no_1221(g);
    let candidate = no_k3.pass && two_path.pass && no_k33.pass && no_1221.pass;
    RuleReport { no_k3, two_path, no_k33, no_1221, candidate, bipartite: g.is_bipartite(), connected: g.is_connected() }
}

pub fn is_zero_two_graph(g: &Graph) -> bool {
    let adj = g.masks();
    (0..g.n()).all(|a| (a + 1..g.n()).all(|b| matches!((adj[a] & adj[b]).count_ones(), 0 | 2)))
}

/// `n >= 3d - 1` for diameter `d >= 3`; vacuous below.
pub fn diameter_bound_holds(g: &Graph) -> Result<bool, GraphError> {
    let d = g.diameter()?;
    Ok(d <= 2 || g.n() + 1 >= 3 * d)
}

/// Whether the graph contains the 1221 pattern at all, rescued or not.
pub fn has_1221(g: &Graph) -> bool {
    contains_1221(g.masks())
}

pub(crate) fn find_triangle(adj: &[u64]) -> Option<[usize; 3]> {
    for a in 0..adj.len() {
        for b in bits(adj[a] & !full_mask(a + 1)) {
            if let Some(c) = bits(adj[a] & adj[b] & !full_mask(b + 1)).next() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

pub(crate) fn find_lone_path(adj: &[u64]) -> Option<LonePath> {
    for a in 0..adj.len() {
        for b in a + 1..adj.len() {
            let common = adj[a] & adj[b];
            if adj[a] & bit(b) == 0 && common.count_ones() == 1 {
                return Some(LonePath { a, b, middle: common.trailing_zeros() as usize });
            }
        }
    }
    None
}

pub(crate) fn find_k33(adj: &[u64]) -> Option<K33> {
    let n = adj.len();
    for a1 in 0..n {
        for a2 in a1 + 1..n {
            let c12 = adj[a1] & adj[a2];
            if c12.count_ones() < 3 {
                continue;
            }
            for a3 in a2 + 1..n {
                let c = c12 & adj[a3];
                if c.count_ones() >= 3 {
                    let mut it = bits(c);
                    let right = [it.next()?, it.next()?, it.next()?];
                    return Some(K33 { left: [a1, a2, a3], right });
                }
            }
        }
    }
    None
}

/// Walks 1221 embeddings in the order f1, then f2 < f3 in N(f1), then
/// f4 < f5 among the other common neighbors of f2 and f3, then f6. The
/// visitor returns `true` to stop.
fn walk_1221(adj: &[u64], mut visit: impl FnMut([usize; 6]) -> bool) {
    for f1 in 0..adj.len() {
        for f2 in bits(adj[f1]) {
            for f3 in bits(adj[f1] & !full_mask(f2 + 1)) {
                let mids = adj[f2] & adj[f3] & !bit(f1);
                if mids.count_ones() < 2 {
                    continue;
                }
                for f4 in bits(mids) {
                    for f5 in bits(mids & !full_mask(f4 + 1)) {
                        for f6 in bits(adj[f4] & adj[f5] & !(bit(f1) | bit(f2) | bit(f3))) {
                            if visit([f1, f2, f3, f4, f5, f6]) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

pub(crate) fn contains_1221(adj: &[u64]) -> bool {
    let mut found = false;
    walk_1221(adj, |_| {
        found = true;
        true
    });
    found
}

pub(crate) fn find_unrescued_1221(adj: &[u64]) -> Option<Embedding1221> {
    let mut witness = None;
    walk_1221(adj, |f| {
        let image = f.iter().fold(0u64, |m, &v| m | bit(v));
        let rescue = (adj[f[0]] & (adj[f[3]] | adj[f[4]])) | (adj[f[5]] & (adj[f[1]] | adj[f[2]]));
        if rescue & !image == 0 {
            witness = Some(f);
            true
        } else {
            false
        }
    });
    witness
}

/// The first of the four rules that fails, cheapest first.
pub fn first_failing_rule(g: &Graph) -> Option<Rule> {
    let adj = g.masks();
    if find_triangle(adj).is_some() {
        Some(Rule::K3)
    } else if find_lone_path(adj).is_some() {
        Some(Rule::TwoPath)
    } else if find_k33(adj).is_some() {
        Some(Rule::K33)
    } else if find_unrescued_1221(adj).is_some() {
        Some(Rule::Pattern1221)
    } else {
        None
    }
}

/// Names a failed rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    K3,
    TwoPath,
    K33,
    #[serde(rename = "1221")]
    Pattern1221,
}
