//! The branch strategy: orient edges one at a time, classify each 4-cycle as
//! soon as its last edge is oriented, and carry the induced linear
//! constraints on the path-sign bits along.

use super::gf2::Gf2System;
use super::system::{build_r_system, RAssignment, RConstraintSystem, SystemError};
use super::{classify_with, CycleOrientationClass, Orientation};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedCounts {
    /// A 4-cycle had a cyclic or adjacent source/sink pattern.
    pub invalid_cycle: u64,
    /// A cycle link contradicted earlier ones.
    pub link_contradiction: u64,
    /// Some pair's path signs were forced to be all equal.
    pub sign_clause: u64,
    /// Complete orientations whose sign clauses had no common solution.
    pub leaf_unsolvable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSurvivor {
    pub orientation: Orientation,
    pub r_solutions: Vec<RAssignment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationClass {
    /// Hex key shared under digraph isomorphism and global reversal.
    pub key: String,
    /// Member with the smallest sign vector.
    pub representative: Orientation,
    pub r_solutions: Vec<RAssignment>,
    pub members: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchResult {
    pub system: RConstraintSystem,
    pub classes: Vec<OrientationClass>,
    /// Every surviving labeled orientation, reversals included, by sign vector.
    pub raw: Vec<RawSurvivor>,
    /// Survivors counted up to global reversal only.
    pub reversal_classes: usize,
    /// Survivors counted up to digraph isomorphism only.
    pub isomorphism_classes: usize,
    pub pruned: PrunedCounts,
    pub nodes: u64,
}

/// Edge order that closes 4-cycles as early as possible.
fn edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let cycles: Vec<[usize; 4]> = g
        .four_cycles()
        .iter()
        .map(|c| c.edges().map(|(a, b)| g.edge_index(a, b).unwrap()))
        .collect();
    let mut chosen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let score = |e: usize| {
            let mut closes = 0;
            let mut touches = 0;
            for c in cycles.iter().filter(|c| c.contains(&e)) {
                let have = c.iter().filter(|&&x| chosen[x]).count();
                if have == 3 {
                    closes += 1;
                }
                touches += have;
            }
            (closes, touches)
        };
        let next = (0..m)
            .filter(|&e| !chosen[e])
            .max_by_key(|&e| (score(e), std::cmp::Reverse(e)))
            .unwrap();
        chosen[next] = true;
        order.push(next);
    }
    order
}

/// At least one of a pair's sign bits is set.
struct Clause {
    mask: Vec<u64>,
    units: Vec<Vec<u64>>,
}

struct Search<'a> {
    g: &'a Graph,
    sys: &'a RConstraintSystem,
    order: Vec<usize>,
    /// Cycles (as link indices) completed at each position of `order`.
    closing: Vec<Vec<usize>>,
    clauses: Vec<Clause>,
    signs: Vec<i8>,
    pruned: PrunedCounts,
    nodes: u64,
    survivors: Vec<RawSurvivor>,
}

impl Search<'_> {
    fn points(&self, a: usize, b: usize) -> bool {
        let i = self.g.edge_index(a, b).unwrap();
        let s = if a < b { self.signs[i] } else { -self.signs[i] };
        s == -1
    }

    fn dfs(&mut self, pos: usize, lin: &Gf2System) {
        self.nodes += 1;
        if pos == self.order.len() {
            return self.leaf(lin);
        }
        let e = self.order[pos];
        let choices: &[i8] = if pos == 0 { &[1] } else { &[1, -1] };
        'choice: for &s in choices {
            self.signs[e] = s;
            let mut next = lin.clone();
            for &li in &self.closing[pos] {
                let link = self.sys.cycle_links[li];
                let class = classify_with(&link.cycle, |a, b| self.points(a, b));
                let rhs = match class {
                    CycleOrientationClass::NonBipartiteClass => false,
                    CycleOrientationClass::BipartiteClass => true,
                    CycleOrientationClass::Invalid => {
                        self.pruned.invalid_cycle += 1;
                        continue 'choice;
                    }
                };
                let mut ones = self.sys.variable_bits(link.first);
                ones.extend(self.sys.variable_bits(link.second));
                if !next.add(next.vector(&ones), rhs) {
                    self.pruned.link_contradiction += 1;
                    continue 'choice;
                }
            }
            if !self.closing[pos].is_empty() && self.clause_dead(&next) {
                self.pruned.sign_clause += 1;
                continue;
            }
            self.dfs(pos + 1, &next);
        }
        self.signs[e] = 0;
    }

    /// Whether some pair with three or more paths has every sign bit
    /// forced to agree with its first path.
    fn clause_dead(&self, lin: &Gf2System) -> bool {
        self.clauses.iter().any(|c| c.units.iter().all(|u| lin.determined(u) == Some(false)))
    }

    fn leaf(&mut self, lin: &Gf2System) {
        let clauses = &self.clauses;
        let sols = lin.solutions(self.sys.sign_bits(), |x| {
            clauses.iter().all(|c| c.mask.iter().zip(x).any(|(m, v)| m & v != 0))
        });
        if sols.is_empty() {
            self.pruned.leaf_unsolvable += 1;
            return;
        }
        let mut r_solutions: Vec<RAssignment> = sols.iter().map(|x| self.sys.assignment_from_bits(x)).collect();
        r_solutions.sort();
        let orientation = Orientation::new(self.g, self.signs.clone());
        self.survivors.push(RawSurvivor { orientation, r_solutions });
    }
}

pub fn branch_search(g: &Graph) -> Result<BranchResult, SystemError> {
    let sys = build_r_system(g)?;
    let order = edge_order(g);
    let mut position = vec![0usize; g.edge_count()];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    let mut closing = vec![Vec::new(); order.len()];
    for (li, link) in sys.cycle_links.iter().enumerate() {
        let last = link.cycle.edges().iter().map(|&(a, b)| position[g.edge_index(a, b).unwrap()]).max().unwrap();
        closing[last].push(li);
    }
    let mut lin = sys.empty_gf2();
    let mut clauses = Vec::new();
    for bits in sys.clause_bits() {
        if bits.len() == 1 {
            // Two paths: their signs must differ.
            let ok = lin.add(lin.vector(&bits), true);
            debug_assert!(ok);
        } else {
            clauses.push(Clause { mask: lin.vector(&bits), units: bits.iter().map(|&b| lin.vector(&[b])).collect() });
        }
    }
    let mut search = Search {
        g,
        sys: &sys,
        order,
        closing,
        clauses,
        signs: vec![0; g.edge_count()],
        pruned: PrunedCounts::default(),
        nodes: 0,
        survivors: Vec::new(),
    };
    if g.edge_count() > 0 {
        search.dfs(0, &lin);
    }
    let Search { survivors, pruned, nodes, .. } = search;

    let mut raw: Vec<RawSurvivor> = survivors
        .iter()
        .flat_map(|s| {
            [
                s.clone(),
                RawSurvivor { orientation: s.orientation.reversed(), r_solutions: s.r_solutions.clone() },
            ]
        })
        .collect();
    raw.sort_by(|x, y| x.orientation.signs.cmp(&y.orientation.signs));

    let mut by_class: BTreeMap<Vec<u8>, Vec<&RawSurvivor>> = BTreeMap::new();
    let mut digraph_keys = std::collections::BTreeSet::new();
    for s in &raw {
        by_class.entry(s.orientation.class_key()).or_default().push(s);
        digraph_keys.insert(s.orientation.digraph_key());
    }
    let classes = by_class
        .into_iter()
        .map(|(key, members)| OrientationClass {
            key: hex::encode(key),
            representative: members[0].orientation.clone(),
            r_solutions: members[0].r_solutions.clone(),
            members: members.len(),
        })
        .collect();
    Ok(BranchResult {
        system: sys,
        classes,
        reversal_classes: raw.len() / 2,
        isomorphism_classes: digraph_keys.len(),
        raw,
        pruned,
        nodes,
    })
}
