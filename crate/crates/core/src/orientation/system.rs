use super::{classify_cycle, CycleOrientationClass, Orientation};
use super::gf2::Gf2System;
use crate::graph::{DistanceTwoPair, FourCycle, Graph};
use crate::rules::is_candidate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("graph is not a candidate graph")]
    NotCandidate,
    #[error("4-cycle {0:?} has an invalid orientation")]
    InvalidCycle(FourCycle),
    #[error("r assignment has {got} values, system has {expected} variables")]
    WrongLength { expected: usize, got: usize },
    #[error("r assignment violates parity on pair ({a},{b})")]
    Inconsistent { a: usize, b: usize },
}

/// `r_{acbd}`: the sign relating the 2-paths a~c~b and a~d~b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RVariable {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkRelation {
    Equal,
    Opposite,
}

/// The two r variables of a 4-cycle a~c~b~d: pair (a,b) through {c,d}, and
/// pair (c,d) through {a,b}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLink {
    pub cycle: FourCycle,
    pub first: usize,
    pub second: usize,
    /// Set once the cycle is oriented.
    pub relation: Option<LinkRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RConstraintSystem {
    pub pairs: Vec<DistanceTwoPair>,
    pub variables: Vec<RVariable>,
    /// Variables fixed to -1 (pairs with exactly two common neighbors).
    pub forced: Vec<usize>,
    /// Triples whose product is +1.
    pub parity: Vec<[usize; 3]>,
    /// Per pair with at least three common neighbors: its variables, not all
    /// of which may be +1.
    pub mixed_sign: Vec<Vec<usize>>,
    pub cycle_links: Vec<CycleLink>,
    /// First variable of each pair; variables of a pair are contiguous.
    pair_start: Vec<usize>,
    /// First sign bit of each pair (k - 1 bits per pair).
    bit_start: Vec<usize>,
    bits: usize,
}

/// A value in {+1, -1} for every variable of a system, in variable order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RAssignment {
    pub values: Vec<i8>,
}

impl RAssignment {
    pub fn positives<'a>(&'a self, sys: &'a RConstraintSystem) -> impl Iterator<Item = RVariable> + 'a {
        self.values.iter().zip(&sys.variables).filter(|(&v, _)| v == 1).map(|(_, &var)| var)
    }
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    // Position of (i, j), i < j, in the lexicographic list of k-choose-2 pairs.
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

pub fn build_r_system(g: &Graph) -> Result<RConstraintSystem, SystemError> {
    if !is_candidate(g).candidate {
        return Err(SystemError::NotCandidate);
    }
    let pairs = g.distance_two_pairs();
    let mut variables = Vec::new();
    let mut forced = Vec::new();
    let mut parity = Vec::new();
    let mut mixed_sign = Vec::new();
    let mut pair_start = Vec::new();
    let mut bit_start = Vec::new();
    let mut bits = 0;
    for p in &pairs {
        let start = variables.len();
        pair_start.push(start);
        bit_start.push(bits);
        let k = p.common.len();
        bits += k - 1;
        for i in 0..k {
            for j in i + 1..k {
                variables.push(RVariable { a: p.a, b: p.b, c: p.common[i], d: p.common[j] });
            }
        }
        if k == 2 {
            forced.push(start);
        } else {
            mixed_sign.push((start..variables.len()).collect());
        }
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    parity.push([
                        start + pair_index(k, i, j),
                        start + pair_index(k, j, l),
                        start + pair_index(k, i, l),
                    ]);
                }
            }
        }
    }
    let mut sys = RConstraintSystem {
        pairs,
        variables,
        forced,
        parity,
        mixed_sign,
        cycle_links: Vec::new(),
        pair_start,
        bit_start,
        bits,
    };
    sys.cycle_links = g
        .four_cycles()
        .into_iter()
        .map(|cycle| CycleLink {
            cycle,
            first: sys.variable_index(cycle.a, cycle.c, cycle.b, cycle.d).expect("diagonal pair"),
            second: sys.variable_index(cycle.c, cycle.a, cycle.d, cycle.b).expect("diagonal pair"),
            relation: None,
        })
        .collect();
    Ok(sys)
}

impl RConstraintSystem {
    fn pair_of(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.pairs.binary_search_by(|p| (p.a, p.b).cmp(&key)).ok()
    }

    /// Index of `r_{acbd}`; symmetric under a<->b and c<->d.
    pub fn variable_index(&self, a: usize, c: usize, b: usize, d: usize) -> Option<usize> {
        let p = self.pair_of(a, b)?;
        let common = &self.pairs[p].common;
        let i = common.binary_search(&c.min(d)).ok()?;
        let j = common.binary_search(&c.max(d)).ok()?;
        (i != j).then(|| self.pair_start[p] + pair_index(common.len(), i, j))
    }

    /// Links with their relation fixed by `o`: equal diagonal r's on a
    /// non-bipartite cycle, opposite on a bipartite one.
    pub fn with_orientation(&self, o: &Orientation) -> Result<RConstraintSystem, SystemError> {
        let mut sys = self.clone();
        for link in &mut sys.cycle_links {
            link.relation = Some(match classify_cycle(o, &link.cycle) {
                CycleOrientationClass::NonBipartiteClass => LinkRelation::Equal,
                CycleOrientationClass::BipartiteClass => LinkRelation::Opposite,
                CycleOrientationClass::Invalid => return Err(SystemError::InvalidCycle(link.cycle)),
            });
        }
        Ok(sys)
    }

    /// Checks every constraint family directly on the r values.
    pub fn is_satisfied_by(&self, r: &RAssignment) -> bool {
        let v = &r.values;
        v.len() == self.variables.len()
            && v.iter().all(|&x| x == 1 || x == -1)
            && self.forced.iter().all(|&i| v[i] == -1)
            && self.parity.iter().all(|t| v[t[0]] * v[t[1]] * v[t[2]] == 1)
            && self.mixed_sign.iter().all(|vars| vars.iter().any(|&i| v[i] == -1))
            && self.cycle_links.iter().all(|l| match l.relation {
                None => true,
                Some(LinkRelation::Equal) => v[l.first] == v[l.second],
                Some(LinkRelation::Opposite) => v[l.first] == -v[l.second],
            })
    }

    /// Path signs of pair `p`: `+1` on the smallest common neighbor, and
    /// `r` relative to it elsewhere. Errors if the r values of the pair are
    /// not products of these signs.
    pub fn sigma(&self, r: &RAssignment, p: usize) -> Result<Vec<i8>, SystemError> {
        if r.values.len() != self.variables.len() {
            return Err(SystemError::WrongLength { expected: self.variables.len(), got: r.values.len() });
        }
        let pair = &self.pairs[p];
        let k = pair.common.len();
        let start = self.pair_start[p];
        let mut sigma = vec![1i8; k];
        for j in 1..k {
            sigma[j] = r.values[start + pair_index(k, 0, j)];
        }
        for i in 0..k {
            for j in i + 1..k {
                if r.values[start + pair_index(k, i, j)] != sigma[i] * sigma[j] {
                    return Err(SystemError::Inconsistent { a: pair.a, b: pair.b });
                }
            }
        }
        Ok(sigma)
    }

    pub(crate) fn sign_bits(&self) -> usize {
        self.bits
    }

    /// Sign bits whose XOR is 1 exactly when the variable is -1. Bit i of a
    /// pair is set when its (i+1)-th common neighbor has the opposite path
    /// sign from the first.
    pub(crate) fn variable_bits(&self, var: usize) -> Vec<usize> {
        let p = self.pair_start.partition_point(|&s| s <= var) - 1;
        let v = self.variables[var];
        let common = &self.pairs[p].common;
        let i = common.binary_search(&v.c).unwrap();
        let j = common.binary_search(&v.d).unwrap();
        [i, j].into_iter().filter(|&x| x > 0).map(|x| self.bit_start[p] + x - 1).collect()
    }

    /// Bits of each pair, for the mixed-sign clauses.
    pub(crate) fn clause_bits(&self) -> Vec<Vec<usize>> {
        (0..self.pairs.len())
            .map(|p| (0..self.pairs[p].common.len() - 1).map(|i| self.bit_start[p] + i).collect())
            .collect()
    }

    pub(crate) fn empty_gf2(&self) -> Gf2System {
        Gf2System::new(self.bits)
    }

    pub(crate) fn assignment_from_bits(&self, x: &[u64]) -> RAssignment {
        let bit = |i: usize| x[i / 64] >> (i % 64) & 1 == 1;
        let values = (0..self.variables.len())
            .map(|v| {
                let odd = self.variable_bits(v).into_iter().fold(false, |acc, b| acc ^ bit(b));
                if odd {
                    -1
                } else {
                    1
                }
            })
            .collect();
        RAssignment { values }
    }
}
