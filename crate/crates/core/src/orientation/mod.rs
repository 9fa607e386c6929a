//! Edge orientations, the classification of directed 4-cycles, and the
//! r-factor constraint system with its branch search.
//!
//! Sign convention: `s^{ab} = -s^{ba}`, and the arrow `a -> b` is drawn when
//! `s^{ab} = -1`.

mod branch;
mod gf2;
mod system;

pub use branch::{branch_search, BranchResult, OrientationClass, PrunedCounts, RawSurvivor};
pub use system::{
    build_r_system, CycleLink, LinkRelation, RAssignment, RConstraintSystem, RVariable, SystemError,
};

use crate::graph::{bit, canonical_digraph, Edge, FourCycle, Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pub n: usize,
    /// Sorted edges (a < b).
    pub edges: Vec<Edge>,
    /// `s^{ab}` for each edge, in `edges` order.
    pub signs: Vec<i8>,
}

impl Orientation {
    pub fn new(g: &Graph, signs: Vec<i8>) -> Orientation {
        assert_eq!(signs.len(), g.edge_count(), "one sign per edge");
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "signs are +1 or -1");
        Orientation { n: g.n(), edges: g.edges().to_vec(), signs }
    }

    /// Orientation with every arrow `a -> b` given by `arrows`; `None` if an
    /// arrow is not an edge or an edge has no arrow.
    pub fn from_arrows(g: &Graph, arrows: &[Edge]) -> Option<Orientation> {
        let mut signs = vec![0i8; g.edge_count()];
        for &(from, to) in arrows {
            signs[g.edge_index(from, to)?] = if from < to { -1 } else { 1 };
        }
        signs.iter().all(|&s| s != 0).then(|| Orientation::new(g, signs))
    }

    fn index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// `s^{ab}`; panics if a-b is not an edge.
    pub fn s(&self, a: usize, b: usize) -> i8 {
        let i = self.index(a, b).expect("s is defined on edges only");
        if a < b {
            self.signs[i]
        } else {
            -self.signs[i]
        }
    }

    /// Whether the arrow points from `a` to `b`.
    pub fn points(&self, a: usize, b: usize) -> bool {
        self.s(a, b) == -1
    }

    /// All arrows as (from, to).
    pub fn arrows(&self) -> Vec<Edge> {
        self.edges.iter().zip(&self.signs).map(|(&(a, b), &s)| if s == -1 { (a, b) } else { (b, a) }).collect()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { n: self.n, edges: self.edges.clone(), signs: self.signs.iter().map(|s| -s).collect() }
    }

    pub(crate) fn out_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for (from, to) in self.arrows() {
            out[from] |= bit(to);
        }
        out
    }

    /// Key of the isomorphism class of the directed graph.
    pub fn digraph_key(&self) -> Vec<u8> {
        canonical_digraph(&self.out_masks()).key
    }

    /// Key shared by an orientation, its isomorphic copies, and their
    /// reversals.
    pub fn class_key(&self) -> Vec<u8> {
        self.digraph_key().min(self.reversed().digraph_key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleOrientationClass {
    /// Two sources and two sinks, alternating.
    BipartiteClass,
    /// One source and one sink at opposite corners.
    NonBipartiteClass,
    /// Cyclic, or a source adjacent to a sink.
    Invalid,
}

pub fn classify_cycle(o: &Orientation, c: &FourCycle) -> CycleOrientationClass {
    classify_with(c, |a, b| o.points(a, b))
}

pub(crate) fn classify_with(c: &FourCycle, points: impl Fn(usize, usize) -> bool) -> CycleOrientationClass {
    let v = c.vertices();
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for i in 0..4 {
        let (prev, next) = (v[(i + 3) % 4], v[(i + 1) % 4]);
        match (points(v[i], prev), points(v[i], next)) {
            (true, true) => sources.push(i),
            (false, false) => sinks.push(i),
            _ => {}
        }
    }
    match (sources.len(), sinks.len()) {
        (2, 2) => CycleOrientationClass::BipartiteClass,
        (1, 1) if (sources[0] + 2) % 4 == sinks[0] => CycleOrientationClass::NonBipartiteClass,
        _ => CycleOrientationClass::Invalid,
    }
}

/// Every edge directed away from `root`'s BFS layer towards the next one.
pub fn all_up_orientation(g: &Graph, root: usize) -> Result<Orientation, GraphError> {
    let layers = g.layer_decomposition(root)?;
    let mut signs = Vec::with_capacity(g.edge_count());
    for &(a, b) in g.edges() {
        let (la, lb) = (layers.layer_of(a).unwrap(), layers.layer_of(b).unwrap());
        if la == lb {
            return Err(GraphError::NotBipartite);
        }
        signs.push(if la < lb { -1 } else { 1 });
    }
    Ok(Orientation::new(g, signs))
}
