//! Seeded exhaustive enumeration of candidate graphs.
//!
//! Every candidate with diameter at least 3 contains one of two 8-vertex
//! seeds as an induced subgraph. The search fixes a seed on vertices 0..8,
//! adds the remaining vertices, and decides every undetermined edge by
//! depth-first search. Branches are cut only when a triangle or a K_{3,3}
//! appears, since both persist under edge addition; the other rules are
//! checked on complete assignments. Survivors are deduplicated by canonical
//! form.
//!
//! The decision tree is split into work units by fixing its first few
//! decisions. Units run on a rayon pool and their catalogs are merged at a
//! single point, so the result does not depend on the thread count.

mod catalog;
mod checkpoint;
mod dfs;

pub use catalog::{Catalog, CatalogEntry, Counters, Summary};

use crate::graph::{Edge, Graph};
use checkpoint::Checkpoint;
use dfs::Job;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("checkpoint {path} belongs to a different configuration (hash {found}, expected {expected})")]
    ConfigMismatch { path: String, expected: String, found: String },
    #[error("corrupt checkpoint {path}: {reason}")]
    Corrupt { path: String, reason: String },
    #[error("checkpoint I/O on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedKind {
    Free1221,
    With1221,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedGraph {
    pub kind: SeedKind,
    /// 0-based edges among vertices 0..8.
    pub base_edges: Vec<Edge>,
    pub optional_edges: Vec<Edge>,
}

impl SeedGraph {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(8, &self.base_edges).expect("seed edges are valid")
    }

    /// Seed vertices grouped by distance from vertex 0.
    pub fn layers(&self) -> [Vec<usize>; 4] {
        [vec![0], vec![1, 4, 6], vec![2, 5, 7], vec![3]]
    }
}

fn zero_based(edges: &[Edge]) -> Vec<Edge> {
    edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
}

/// The two minimal subgraphs with diameter at least 3: without and with a
/// 1221 pattern. Labels here are 1-based as drawn; the returned edges are
/// 0-based.
pub fn minimal_seeds() -> (SeedGraph, SeedGraph) {
    let free = SeedGraph {
        kind: SeedKind::Free1221,
        base_edges: zero_based(&[(1, 2), (2, 3), (3, 4), (1, 5), (3, 5), (2, 6), (4, 6), (1, 7), (6, 7), (4, 8), (5, 8)]),
        optional_edges: zero_based(&[(7, 8)]),
    };
    let with = SeedGraph {
        kind: SeedKind::With1221,
        base_edges: zero_based(&[(1, 2), (2, 3), (3, 4), (1, 5), (3, 5), (2, 6), (4, 6), (5, 6), (4, 8), (5, 8), (1, 7), (7, 8)]),
        optional_edges: zero_based(&[(3, 7)]),
    };
    (free, with)
}

/// Undetermined edge count of the basic strategy: the optional seed edge,
/// every new-to-seed pair, and every new-new pair.
pub fn undetermined_edge_count(n: usize) -> usize {
    let m = n.saturating_sub(8);
    1 + 8 * m + m * m.saturating_sub(1) / 2
}

/// Layer-size sequences of a diameter-`d` candidate on `n` vertices, outer
/// layers at least 1 and inner layers at least 3, one representative per
/// reversal pair (the lexicographically smaller one). `d = None` means every
/// `d >= 3`.
pub fn layer_sequences(n: usize, d: Option<usize>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = all_sequences(n, d, false)
        .into_iter()
        .map(|s| {
            let r: Vec<usize> = s.iter().rev().copied().collect();
            s.min(r)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Sequences as seen from a single root vertex (first layer of size 1).
pub fn rooted_layer_sequences(n: usize, d: Option<usize>) -> Vec<Vec<usize>> {
    all_sequences(n, d, true)
}

fn all_sequences(n: usize, d: Option<usize>, rooted: bool) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, layers_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if layers_left == 1 {
            if remaining >= 1 {
                cur.push(remaining);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for size in 3..=remaining {
            cur.push(size);
            rec(remaining - size, layers_left - 1, cur, out);
            cur.pop();
        }
    }
    let ds: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (3..=n).collect(),
    };
    let mut out = Vec::new();
    for d in ds.into_iter().filter(|&d| d >= 3) {
        let firsts: Vec<usize> = if rooted { vec![1] } else { (1..n).collect() };
        for first in firsts {
            if first < n {
                let mut cur = vec![first];
                rec(n - first, d, &mut cur, &mut out);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedChoice {
    Both,
    Free,
    With1221,
}

impl SeedChoice {
    fn seeds(self) -> Vec<SeedGraph> {
        let (free, with) = minimal_seeds();
        match self {
            SeedChoice::Both => vec![free, with],
            SeedChoice::Free => vec![free],
            SeedChoice::With1221 => vec![with],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Basic,
    /// Edges only between consecutive BFS layers from seed vertex 0. `d`
    /// restricts the diameter seen from that vertex; `sequences`, when
    /// non-empty, restricts the rooted layer sizes.
    Layered { d: Option<usize>, sequences: Vec<Vec<usize>> },
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub strategy: Strategy,
    pub seeds: SeedChoice,
    pub threads: usize,
    pub checkpoint: Option<PathBuf>,
    /// Reserved; exhaustive mode draws no random numbers.
    pub rng_seed: u64,
    /// Leaves between checkpoint writes.
    pub checkpoint_interval: u64,
    /// Stop scheduling work after this many units finish, as if killed.
    pub stop_after_units: Option<usize>,
}

impl SearchConfig {
    pub fn new(n: usize) -> SearchConfig {
        SearchConfig {
            n,
            strategy: Strategy::Basic,
            seeds: SeedChoice::Both,
            threads: 1,
            checkpoint: None,
            rng_seed: 0,
            checkpoint_interval: 10_000_000,
            stop_after_units: None,
        }
    }

    /// Hash of everything that determines the catalog.
    fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let echo = serde_json::json!({
            "version": checkpoint::VERSION,
            "n": self.n,
            "strategy": self.strategy,
            "seeds": self.seeds,
        });
        hex::encode(Sha256::digest(echo.to_string().as_bytes()))
    }
}

fn prefix_depth(threads: usize) -> usize {
    let units = 8 * threads.max(1);
    units.next_power_of_two().trailing_zeros() as usize
}

fn jobs(cfg: &SearchConfig) -> Result<Vec<Job>, SearchError> {
    if !(8..=crate::graph::MAX_VERTICES).contains(&cfg.n) {
        return Err(SearchError::InvalidConfig(format!("n = {} outside 8..=64", cfg.n)));
    }
    let mut out = Vec::new();
    for seed in cfg.seeds.seeds() {
        match &cfg.strategy {
            Strategy::Basic => out.push(Job::basic(cfg.n, &seed)),
            Strategy::Layered { d, sequences } => {
                if d.is_some_and(|d| d < 3) {
                    return Err(SearchError::InvalidConfig("layered search needs d >= 3".into()));
                }
                for seq in rooted_layer_sequences(cfg.n, *d) {
                    if sequences.is_empty() || sequences.contains(&seq) {
                        out.push(Job::layered(cfg.n, &seed, &seq));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs the search described by `cfg`. With a checkpoint path, an existing
/// checkpoint for the same configuration is resumed, a checkpoint for a
/// different one is an error, and progress is saved as units finish.
pub fn enumerate_candidates(cfg: &SearchConfig) -> Result<Catalog, SearchError> {
    let jobs = jobs(cfg)?;
    let digest = cfg.digest();
    let mut state = match &cfg.checkpoint {
        Some(path) if path.exists() => {
            let ck = Checkpoint::load(path)?;
            if ck.config_hash != digest {
                return Err(SearchError::ConfigMismatch {
                    path: path.display().to_string(),
                    expected: digest,
                    found: ck.config_hash,
                });
            }
            ck
        }
        _ => Checkpoint::fresh(digest, cfg.n, prefix_depth(cfg.threads)),
    };

    let depth = state.prefix_depth;
    let units: Vec<(usize, u64)> = jobs
        .iter()
        .enumerate()
        .flat_map(|(j, job)| {
            let p = depth.min(job.vars.len());
            (0..1u64 << p).map(move |bits| (j, bits))
        })
        .collect();
    let pending: Vec<(usize, (usize, u64))> =
        units.into_iter().enumerate().filter(|(i, _)| !state.completed.contains(i)).collect();

    let stop = AtomicBool::new(false);
    let finished = AtomicUsize::new(0);
    let shared = Mutex::new((&mut state, 0u64));
    let work = || {
        pending.par_iter().try_for_each(|&(unit, (j, bits))| -> Result<(), SearchError> {
            if stop.load(Ordering::SeqCst) {
                return Ok(());
            }
            let job = &jobs[j];
            let part = job.run_unit(depth.min(job.vars.len()), bits);
            let mut guard = shared.lock().expect("no panics while holding the lock");
            let (st, since) = &mut *guard;
            *since += part.counters.leaves;
            st.catalog.merge(part);
            st.completed.insert(unit);
            if let Some(path) = &cfg.checkpoint {
                if *since >= cfg.checkpoint_interval {
                    st.save(path)?;
                    *since = 0;
                }
            }
            let done = finished.fetch_add(1, Ordering::SeqCst) + 1;
            if cfg.stop_after_units.is_some_and(|k| done >= k) {
                stop.store(true, Ordering::SeqCst);
            }
            Ok(())
        })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.max(1))
        .build()
        .map_err(|e| SearchError::InvalidConfig(e.to_string()))?;
    pool.install(work)?;

    let total_units: usize =
        jobs.iter().map(|job| 1usize << depth.min(job.vars.len())).sum();
    state.catalog.complete = state.completed.len() == total_units;
    if let Some(path) = &cfg.checkpoint {
        state.save(path)?;
    }
    Ok(state.catalog)
}

/// Layered enumeration; same as [`enumerate_candidates`] with a layered
/// strategy, using every rooted sequence when `cfg` is set to basic.
pub fn enumerate_by_layers(cfg: &SearchConfig) -> Result<Catalog, SearchError> {
    let mut cfg = cfg.clone();
    if cfg.strategy == Strategy::Basic {
        cfg.strategy = Strategy::Layered { d: None, sequences: Vec::new() };
    }
    enumerate_candidates(&cfg)
}

/// Continues an interrupted run. The checkpoint must exist.
pub fn resume(cfg: &SearchConfig) -> Result<Catalog, SearchError> {
    let path = cfg
        .checkpoint
        .as_ref()
        .ok_or_else(|| SearchError::InvalidConfig("resume needs a checkpoint path".into()))?;
    if !path.exists() {
        return Err(SearchError::Io {
            path: path.display().to_string(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no checkpoint"),
        });
    }
    enumerate_candidates(cfg)
}
