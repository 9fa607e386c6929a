//! Direct checks of explicit MTLZ data: signs, one linear form per edge, and
//! coupling magnitudes, tested against the cycle and multipath identities.

use crate::graph::{bits, parse_graph6, Edge, Graph, GraphError};
use crate::orientation::{CycleOrientationClass, Orientation};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("expected {expected} per-edge values, got {got}")]
    MissingData { expected: usize, got: usize },
    #[error("form on edge {edge:?} has {got} components, expected {m}")]
    WrongDimension { edge: Edge, m: usize, got: usize },
    #[error("{0:?} is not an edge")]
    NotAnEdge(Edge),
    #[error("no coupling magnitudes given")]
    MissingGamma,
    #[error("magnitude on edge {edge:?} is not strictly positive")]
    NotPositive { edge: Edge },
    #[error("transform needs a bipartite or non-bipartite cycle class")]
    InvalidKind,
    #[error("sign must be +1 or -1")]
    InvalidSign,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One form vector `Ā^{ab}` per edge, in edge order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormAssignment {
    pub m: usize,
    pub forms: Vec<Vec<f64>>,
}

impl FormAssignment {
    /// Builds from `(edge, form)` pairs given in any vertex order.
    pub fn from_pairs(g: &Graph, m: usize, pairs: &[(Edge, Vec<f64>)]) -> Result<FormAssignment, VerifyError> {
        let mut forms = vec![Vec::new(); g.edge_count()];
        for ((a, b), f) in pairs {
            let i = g.edge_index(*a, *b).ok_or(VerifyError::NotAnEdge((*a, *b)))?;
            forms[i] = f.clone();
        }
        let fa = FormAssignment { m, forms };
        fa.validate(g)?;
        Ok(fa)
    }

    fn validate(&self, g: &Graph) -> Result<(), VerifyError> {
        if self.forms.len() != g.edge_count() {
            return Err(VerifyError::MissingData { expected: g.edge_count(), got: self.forms.len() });
        }
        for (f, &edge) in self.forms.iter().zip(g.edges()) {
            if f.len() != self.m {
                return Err(VerifyError::WrongDimension { edge, m: self.m, got: f.len() });
            }
        }
        Ok(())
    }

    pub fn form(&self, g: &Graph, a: usize, b: usize) -> &[f64] {
        &self.forms[g.edge_index(a, b).expect("edge")]
    }
}

/// Sign factors and rapidity relating the forms around one 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CycleTransform {
    pub p: i8,
    pub r: i8,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MTLZData {
    pub graph: Graph,
    pub orientation: Orientation,
    pub forms: FormAssignment,
    /// `|γ|` per edge, in edge order.
    pub gamma: Option<Vec<f64>>,
}

impl MTLZData {
    pub fn new(
        graph: Graph,
        orientation: Orientation,
        forms: FormAssignment,
        gamma: Option<Vec<f64>>,
    ) -> Result<MTLZData, VerifyError> {
        let m = graph.edge_count();
        if orientation.signs.len() != m {
            return Err(VerifyError::MissingData { expected: m, got: orientation.signs.len() });
        }
        forms.validate(&graph)?;
        if let Some(gm) = &gamma {
            if gm.len() != m {
                return Err(VerifyError::MissingData { expected: m, got: gm.len() });
            }
            if let Some(i) = gm.iter().position(|&v| v.is_nan() || v <= 0.0) {
                return Err(VerifyError::NotPositive { edge: graph.edges()[i] });
            }
        }
        Ok(MTLZData { graph, orientation, forms, gamma })
    }
}

pub fn tensor(u: &[f64], v: &[f64]) -> DMatrix<f64> {
    DVector::from_column_slice(u) * DVector::from_column_slice(v).transpose()
}

/// `u ∧ v` as the antisymmetric matrix `u vᵀ - v uᵀ`.
pub fn wedge(u: &[f64], v: &[f64]) -> DMatrix<f64> {
    let t = tensor(u, v);
    &t - t.transpose()
}

fn max_entry(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleResidual {
    /// Vertices in traversal order; the last one closes back to the first.
    pub cycle: Vec<usize>,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleReport {
    pub cycles: Vec<CycleResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge.
pub fn fundamental_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in bits(g.neighbors(v)) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for &(a, b) in g.edges() {
        if parent[a] == b || parent[b] == a {
            continue;
        }
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x];
                left.push(x);
            } else {
                y = parent[y];
                right.push(y);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        cycles.push(left);
    }
    cycles
}

/// `Σ_l s^{a_l a_{l+1}} Ā ⊗ Ā` around every fundamental cycle.
pub fn check_cycle_property(data: &MTLZData, tol: f64) -> CycleReport {
    let g = &data.graph;
    let m = data.forms.m;
    let cycles: Vec<CycleResidual> = fundamental_cycles(g)
        .into_iter()
        .map(|cycle| {
            let mut sum = DMatrix::zeros(m, m);
            for l in 0..cycle.len() {
                let (a, b) = (cycle[l], cycle[(l + 1) % cycle.len()]);
                let f = data.forms.form(g, a, b);
                sum += tensor(f, f) * data.orientation.s(a, b) as f64;
            }
            CycleResidual { residual: max_entry(&sum), cycle }
        })
        .collect();
    let max_residual = cycles.iter().fold(0.0f64, |acc, c| acc.max(c.residual));
    CycleReport { pass: max_residual <= tol, cycles, max_residual }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairResidual {
    pub a: usize,
    pub b: usize,
    pub residual: f64,
    /// 2-paths whose two forms are linearly dependent.
    pub dependent_terms: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultipathReport {
    pub pairs: Vec<PairResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

/// `Σ_c sqrt(γ^{ac} γ^{bc}) Ā^{ac} ∧ Ā^{bc}` for every distance-2 pair.
pub fn check_multipath_property(data: &MTLZData, tol: f64) -> Result<MultipathReport, VerifyError> {
    let g = &data.graph;
    let gamma = data.gamma.as_ref().ok_or(VerifyError::MissingGamma)?;
    let m = data.forms.m;
    let x = |a: usize, b: usize| gamma[g.edge_index(a, b).unwrap()].sqrt();
    let pairs: Vec<PairResidual> = g
        .distance_two_pairs()
        .iter()
        .map(|p| {
            let mut sum = DMatrix::zeros(m, m);
            let mut dependent_terms = 0;
            for &c in &p.common {
                let w = wedge(data.forms.form(g, p.a, c), data.forms.form(g, p.b, c));
                if max_entry(&w) <= 1e-12 {
                    dependent_terms += 1;
                }
                sum += w * (x(p.a, c) * x(p.b, c));
            }
            PairResidual { a: p.a, b: p.b, residual: max_entry(&sum), dependent_terms }
        })
        .collect();
    let max_residual = pairs.iter().fold(0.0f64, |acc, p| acc.max(p.residual));
    Ok(MultipathReport { pass: max_residual <= tol, pairs, max_residual })
}

/// Forms `(Ā^{24}, Ā^{23})` of the 4-cycle 1~3~2~4 from `Ā^{13}` and `Ā^{14}`.
pub fn apply_cycle_transform(
    base13: &[f64],
    base14: &[f64],
    t: &CycleTransform,
    kind: CycleOrientationClass,
) -> Result<(Vec<f64>, Vec<f64>), VerifyError> {
    if ![t.p, t.r].iter().all(|&s| s == 1 || s == -1) {
        return Err(VerifyError::InvalidSign);
    }
    let (p, r) = (t.p as f64, t.r as f64);
    let (ch, sh) = (t.theta.cosh(), t.theta.sinh());
    let mix = |x: f64, y: f64| -> Vec<f64> { base13.iter().zip(base14).map(|(a, b)| p * (x * a + y * b)).collect() };
    match kind {
        CycleOrientationClass::NonBipartiteClass => Ok((mix(ch, -r * sh), mix(sh, -r * ch))),
        CycleOrientationClass::BipartiteClass => Ok((mix(r * sh, ch), mix(r * ch, sh))),
        CycleOrientationClass::Invalid => Err(VerifyError::InvalidKind),
    }
}

/// JSON input of the `verify` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub graph6: String,
    /// `s^{ab}` per edge (a < b), in edge order.
    pub signs: Vec<i8>,
    pub m: usize,
    pub forms: Vec<Vec<f64>>,
    #[serde(default)]
    pub gamma: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub cycle: CycleReport,
    pub multipath: Option<MultipathReport>,
    pub pass: bool,
}

impl VerifyDocument {
    pub fn into_data(self) -> Result<MTLZData, VerifyError> {
        let g = parse_graph6(&self.graph6)?;
        if self.signs.len() != g.edge_count() {
            return Err(VerifyError::MissingData { expected: g.edge_count(), got: self.signs.len() });
        }
        if !self.signs.iter().all(|&s| s == 1 || s == -1) {
            return Err(VerifyError::InvalidSign);
        }
        let o = Orientation::new(&g, self.signs);
        MTLZData::new(g, o, FormAssignment { m: self.m, forms: self.forms }, self.gamma)
    }
}

pub fn verify_data(data: &MTLZData, tol: f64) -> Result<VerifyReport, VerifyError> {
    let cycle = check_cycle_property(data, tol);
    let multipath = match data.gamma {
        Some(_) => Some(check_multipath_property(data, tol)?),
        None => None,
    };
    let pass = cycle.pass && multipath.as_ref().is_none_or(|m| m.pass);
    Ok(VerifyReport { cycle, multipath, pass })
}
