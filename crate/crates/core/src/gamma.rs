//! The multipath magnitude system and a multi-start Levenberg-Marquardt
//! solver for strictly positive solutions.
//!
//! For every distance-2 pair (a, b) the unknowns `x_e = sqrt|γ_e|` satisfy
//! `Σ_c σ_c x_{ac} x_{bc} = 0`, with path signs σ rebuilt from an r
//! assignment. The solver works in `y = ln x`, so positivity is automatic,
//! and rescales after every step so that `max x = 1`; the system is
//! homogeneous of degree two, so this only fixes the gauge.

use crate::graph::{Edge, Graph};
use crate::orientation::{build_r_system, RAssignment, SystemError};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GammaError {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("expected {expected} edge values, got {got}")]
    MissingValues { expected: usize, got: usize },
    #[error("edge value {value} on edge {edge:?} is not strictly positive")]
    NotPositive { edge: Edge, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTerm {
    /// The middle vertex of the 2-path.
    pub c: usize,
    pub sigma: i8,
    /// Edge indices of a-c and b-c.
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEquation {
    pub a: usize,
    pub b: usize,
    pub terms: Vec<GammaTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSystem {
    pub edges: Vec<Edge>,
    pub equations: Vec<GammaEquation>,
}

pub fn build_gamma_system(g: &Graph, r: &RAssignment) -> Result<GammaSystem, GammaError> {
    let sys = build_r_system(g)?;
    let mut equations = Vec::with_capacity(sys.pairs.len());
    for (p, pair) in sys.pairs.iter().enumerate() {
        let sigma = sys.sigma(r, p)?;
        let terms = pair
            .common
            .iter()
            .zip(sigma)
            .map(|(&c, sigma)| GammaTerm {
                c,
                sigma,
                left: g.edge_index(pair.a, c).unwrap(),
                right: g.edge_index(pair.b, c).unwrap(),
            })
            .collect();
        equations.push(GammaEquation { a: pair.a, b: pair.b, terms });
    }
    Ok(GammaSystem { edges: g.edges().to_vec(), equations })
}

impl GammaSystem {
    pub fn residuals_x(&self, x: &[f64]) -> Vec<f64> {
        self.equations
            .iter()
            .map(|eq| eq.terms.iter().map(|t| t.sigma as f64 * x[t.left] * x[t.right]).sum())
            .collect()
    }

    /// Residuals at `x = exp(y)`.
    pub fn residuals(&self, y: &[f64]) -> Vec<f64> {
        let x: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        self.residuals_x(&x)
    }

    /// Jacobian of [`Self::residuals`] with respect to `y`.
    pub fn jacobian(&self, y: &[f64]) -> DMatrix<f64> {
        let x: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        let mut j = DMatrix::zeros(self.equations.len(), self.edges.len());
        for (row, eq) in self.equations.iter().enumerate() {
            for t in &eq.terms {
                let v = t.sigma as f64 * x[t.left] * x[t.right];
                j[(row, t.left)] += v;
                j[(row, t.right)] += v;
            }
        }
        j
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaStatus {
    /// A positive solution with every magnitude at least `eps_trivial`.
    Nontrivial,
    /// Every converged start drove some magnitude below `eps_trivial`.
    TrivialOnly,
    /// No start reached the residual tolerance.
    NoneFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaConfig {
    pub restarts: usize,
    pub tol_resid: f64,
    pub eps_trivial: f64,
    pub seed: u64,
    pub max_iter: usize,
    /// Multiplies every starting point; the outcome must not depend on it.
    pub init_scale: f64,
}

impl Default for GammaConfig {
    fn default() -> Self {
        GammaConfig { restarts: 1000, tol_resid: 1e-10, eps_trivial: 1e-6, seed: 0, max_iter: 500, init_scale: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaSolution {
    pub edges: Vec<Edge>,
    /// Best point found, normalized to `max x = 1`.
    pub x: Vec<f64>,
    pub residual: f64,
    pub status: GammaStatus,
    pub restarts_used: usize,
    pub best_restart: usize,
    /// Starts that reached the tolerance, and how many of those were trivial.
    pub converged: usize,
    pub trivial: usize,
    pub seed: u64,
}

/// Lower bound on `ln x`; keeps vanishing magnitudes finite.
const Y_FLOOR: f64 = -300.0;
const STEP_TOL: f64 = 1e-9;

struct Local {
    x: Vec<f64>,
    residual: f64,
    status: GammaStatus,
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn normalize(y: &mut [f64]) {
    let top = y.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    for v in y.iter_mut() {
        *v = (*v - top).max(Y_FLOOR);
    }
}

fn local_solve(sys: &GammaSystem, mut y: Vec<f64>, cfg: &GammaConfig) -> Local {
    let m = y.len();
    normalize(&mut y);
    let sq = |f: &[f64]| f.iter().map(|v| v * v).sum::<f64>();
    let mut f = sys.residuals(&y);
    let mut cost = sq(&f);
    let mut lambda = 1e-3;
    let mut last_step = f64::INFINITY;
    for _ in 0..cfg.max_iter {
        if max_abs(&f) <= cfg.tol_resid && last_step < STEP_TOL {
            break;
        }
        let j = sys.jacobian(&y);
        let jt = j.transpose();
        let jtj = &jt * &j;
        let g = &jt * DVector::from_column_slice(&f);
        let mut accepted = false;
        for _ in 0..30 {
            let mut a = jtj.clone();
            for i in 0..m {
                a[(i, i)] += lambda * (jtj[(i, i)] + 1e-12);
            }
            let Some(step) = a.lu().solve(&(-&g)) else {
                lambda *= 10.0;
                continue;
            };
            let mut trial: Vec<f64> = y.iter().zip(step.iter()).map(|(v, s)| v + s).collect();
            normalize(&mut trial);
            let ft = sys.residuals(&trial);
            let ct = sq(&ft);
            if ct <= cost {
                last_step = y.iter().zip(&trial).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                y = trial;
                f = ft;
                cost = ct;
                lambda = (lambda / 3.0).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= 2.0;
        }
        if !accepted {
            last_step = 0.0;
            if max_abs(&f) > cfg.tol_resid {
                break;
            }
        }
    }
    let x: Vec<f64> = y.iter().map(|v| v.exp()).collect();
    let residual = max_abs(&f);
    let status = if residual > cfg.tol_resid {
        GammaStatus::NoneFound
    } else if x.iter().cloned().fold(f64::INFINITY, f64::min) < cfg.eps_trivial {
        GammaStatus::TrivialOnly
    } else {
        GammaStatus::Nontrivial
    };
    Local { x, residual, status }
}

fn rank(s: GammaStatus) -> u8 {
    match s {
        GammaStatus::Nontrivial => 0,
        GammaStatus::TrivialOnly => 1,
        GammaStatus::NoneFound => 2,
    }
}

/// Independent local solves from uniform starts in `[-2, 2]` per log
/// coordinate; restart `i` draws from stream `i` of the seeded generator.
pub fn solve_gamma(sys: &GammaSystem, cfg: &GammaConfig) -> GammaSolution {
    let m = sys.edges.len();
    let shift = cfg.init_scale.ln();
    let locals: Vec<Local> = (0..cfg.restarts.max(1))
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64);
            let y0: Vec<f64> = (0..m).map(|_| rng.gen_range(-2.0..=2.0) + shift).collect();
            local_solve(sys, y0, cfg)
        })
        .collect();
    let converged = locals.iter().filter(|l| l.status != GammaStatus::NoneFound).count();
    let trivial = locals.iter().filter(|l| l.status == GammaStatus::TrivialOnly).count();
    let (best_restart, best) = locals
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| {
            rank(a.status).cmp(&rank(b.status)).then(a.residual.total_cmp(&b.residual)).then(i.cmp(j))
        })
        .expect("at least one restart");
    GammaSolution {
        edges: sys.edges.clone(),
        x: best.x.clone(),
        residual: best.residual,
        status: best.status,
        restarts_used: locals.len(),
        best_restart,
        converged,
        trivial,
        seed: cfg.seed,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    /// One value per distance-2 pair, in pair order.
    pub per_equation: Vec<f64>,
    pub max_residual: f64,
}

/// Plugs explicit magnitudes (one per edge, in edge order) into the system.
pub fn verify_gamma_assignment(g: &Graph, r: &RAssignment, x: &[f64]) -> Result<ResidualReport, GammaError> {
    if x.len() != g.edge_count() {
        return Err(GammaError::MissingValues { expected: g.edge_count(), got: x.len() });
    }
    if let Some(i) = x.iter().position(|&v| v.is_nan() || v <= 0.0) {
        return Err(GammaError::NotPositive { edge: g.edges()[i], value: x[i] });
    }
    let sys = build_gamma_system(g, r)?;
    let per_equation = sys.residuals_x(x);
    Ok(ResidualReport { max_residual: max_abs(&per_equation), per_equation })
}
