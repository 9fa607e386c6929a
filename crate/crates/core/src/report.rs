//! Table reproduction from catalogs, the per-graph pipeline, and the run
//! manifest embedded in every output document.

use crate::gamma::{build_gamma_system, solve_gamma, GammaConfig, GammaError, GammaSolution};
use crate::graph::{parse_graph6, GraphError};
use crate::orientation::{branch_search, OrientationClass, PrunedCounts, SystemError};
use crate::rules::{is_candidate, RuleReport};
use crate::search::Catalog;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

/// Published (1221-free, with-1221) counts for n = 8..13.
pub const PUBLISHED_TABLE1: [(usize, usize, usize); 6] =
    [(8, 1, 1), (9, 0, 2), (10, 1, 7), (11, 0, 7), (12, 1, 30), (13, 0, 46)];

/// Published edge counts of the n = 10 candidates.
pub const PUBLISHED_TABLE2_EDGES: [usize; 8] = [17, 18, 18, 18, 18, 18, 19, 20];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: String,
    pub config: serde_json::Value,
    pub seeds: Vec<u64>,
    pub wall_time_s: f64,
    /// sha256 of each input, by name.
    pub input_digests: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str, config: serde_json::Value, seeds: Vec<u64>) -> RunManifest {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config,
            seeds,
            wall_time_s: 0.0,
            input_digests: BTreeMap::new(),
        }
    }

    pub fn digest_input(&mut self, name: &str, bytes: &[u8]) {
        self.input_digests.insert(name.to_string(), hex::encode(Sha256::digest(bytes)));
    }

    pub fn finish(&mut self, started: Instant) {
        self.wall_time_s = started.elapsed().as_secs_f64();
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReportError {
    #[error("no catalogs given")]
    Empty,
    #[error("no catalog for n = {0}")]
    MissingN(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub n: usize,
    pub free_1221: usize,
    pub with_1221: usize,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub graph6: String,
    pub edges: usize,
    /// Vertex degrees, largest first.
    pub degrees: Vec<usize>,
    pub has_1221: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table1: Vec<Table1Row>,
    /// Rows for the n = 10 catalog, by edge count then degrees.
    pub table2: Vec<Table2Row>,
    /// Differences from the published values, and incomplete inputs.
    pub notes: Vec<String>,
}

/// Candidate counts per n and the n = 10 candidate list. Every n in `require` must have a
/// catalog; when several catalogs share an n they are merged.
pub fn report_tables(catalogs: &[Catalog], require: &[usize]) -> Result<TableReport, ReportError> {
    if catalogs.is_empty() {
        return Err(ReportError::Empty);
    }
    let mut by_n: BTreeMap<usize, Catalog> = BTreeMap::new();
    for c in catalogs {
        match by_n.get_mut(&c.n) {
            Some(have) => {
                have.merge(c.clone());
                have.complete |= c.complete;
            }
            None => {
                by_n.insert(c.n, c.clone());
            }
        }
    }
    if let Some(&n) = require.iter().find(|n| !by_n.contains_key(n)) {
        return Err(ReportError::MissingN(n));
    }
    let mut notes = Vec::new();
    let mut table1 = Vec::new();
    for (&n, c) in &by_n {
        let (free_1221, with_1221) = c.split_counts();
        if !c.complete {
            notes.push(format!("n={n}: catalog is incomplete"));
        }
        if let Some(&(_, f, w)) = PUBLISHED_TABLE1.iter().find(|row| row.0 == n) {
            if (f, w) != (free_1221, with_1221) {
                notes.push(format!("n={n}: counted ({free_1221}, {with_1221}), published ({f}, {w})"));
            }
        }
        table1.push(Table1Row { n, free_1221, with_1221, complete: c.complete });
    }
    let mut table2: Vec<Table2Row> = by_n
        .get(&10)
        .map(|c| {
            c.entries
                .values()
                .map(|e| Table2Row {
                    graph6: e.graph6.clone(),
                    edges: e.edges,
                    degrees: e.degrees.clone(),
                    has_1221: e.has_1221,
                })
                .collect()
        })
        .unwrap_or_default();
    table2.sort_by(|a, b| (a.edges, &a.degrees).cmp(&(b.edges, &b.degrees)));
    if !table2.is_empty() {
        let edges: Vec<usize> = table2.iter().map(|r| r.edges).collect();
        if edges != PUBLISHED_TABLE2_EDGES {
            notes.push(format!("n=10 edge counts {edges:?} differ from published {PUBLISHED_TABLE2_EDGES:?}"));
        }
    }
    Ok(TableReport { table1, table2, notes })
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PipelineError {
    #[error("parse: {0}")]
    Parse(GraphError),
    #[error("orient: {0}")]
    Orient(SystemError),
    #[error("gamma: {0}")]
    Gamma(GammaError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrientationSummary {
    pub variables: usize,
    pub pairs: usize,
    pub forced: usize,
    pub classes: Vec<OrientationClass>,
    pub raw_survivors: usize,
    pub reversal_classes: usize,
    pub isomorphism_classes: usize,
    pub pruned: PrunedCounts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaRun {
    /// Index into the orientation classes.
    pub class: usize,
    /// Index into that class's r solutions.
    pub r_solution: usize,
    pub solution: GammaSolution,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub graph6: String,
    pub rules: RuleReport,
    /// Absent when the graph is not a candidate.
    pub orientation: Option<OrientationSummary>,
    pub gamma: Vec<GammaRun>,
}

impl PipelineReport {
    pub fn any_nontrivial(&self) -> bool {
        self.gamma.iter().any(|g| g.solution.status == crate::gamma::GammaStatus::Nontrivial)
    }
}

/// Rules, then the branch search, then a γ solve for every r solution of
/// every orientation class.
pub fn pipeline(graph6: &str, cfg: &GammaConfig) -> Result<PipelineReport, PipelineError> {
    let g = parse_graph6(graph6).map_err(PipelineError::Parse)?;
    let rules = is_candidate(&g);
    let mut report = PipelineReport { graph6: graph6.to_string(), rules, orientation: None, gamma: Vec::new() };
    if !report.rules.candidate {
        return Ok(report);
    }
    let branch = branch_search(&g).map_err(PipelineError::Orient)?;
    for (ci, class) in branch.classes.iter().enumerate() {
        for (ri, r) in class.r_solutions.iter().enumerate() {
            let sys = build_gamma_system(&g, r).map_err(PipelineError::Gamma)?;
            report.gamma.push(GammaRun { class: ci, r_solution: ri, solution: solve_gamma(&sys, cfg) });
        }
    }
    report.orientation = Some(OrientationSummary {
        variables: branch.system.variables.len(),
        pairs: branch.system.pairs.len(),
        forced: branch.system.forced.len(),
        raw_survivors: branch.raw.len(),
        reversal_classes: branch.reversal_classes,
        isomorphism_classes: branch.isomorphism_classes,
        pruned: branch.pruned,
        classes: branch.classes,
    });
    Ok(report)
}
