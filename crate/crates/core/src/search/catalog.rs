use super::SeedKind;
use crate::graph::{canonical_form, parse_graph6, Graph};
use crate::rules::has_1221;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// graph6 of the canonically relabeled graph.
    pub graph6: String,
    /// Hex of the canonical key.
    pub key: String,
    pub n: usize,
    pub edges: usize,
    pub diameter: usize,
    /// Degrees in descending order.
    pub degrees: Vec<usize>,
    pub has_1221: bool,
    /// Seeds whose completion produced this graph.
    pub seeds: Vec<SeedKind>,
}

impl CatalogEntry {
    pub fn from_graph(g: &Graph, seed: SeedKind) -> CatalogEntry {
        let cf = canonical_form(g);
        CatalogEntry {
            graph6: cf.graph6(),
            key: cf.key_hex(),
            n: g.n(),
            edges: g.edge_count(),
            diameter: g.diameter().unwrap_or(usize::MAX),
            degrees: g.degree_sequence(),
            has_1221: has_1221(g),
            seeds: vec![seed],
        }
    }

    pub fn graph(&self) -> Graph {
        parse_graph6(&self.graph6).expect("catalog graph6 is valid")
    }
}

/// Exact search counters. All of them are independent of thread count and of
/// how the run was split across interruptions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Complete edge assignments reached by the search.
    pub leaves: u64,
    /// Leaves rejected, keyed by the first failing check.
    pub failures: BTreeMap<String, u64>,
    /// Leaves that passed every check.
    pub accepted: u64,
    /// Accepted leaves isomorphic to an earlier one.
    pub duplicates_merged: u64,
}

impl Counters {
    pub(crate) fn fail(&mut self, what: &str) {
        *self.failures.entry(what.to_string()).or_default() += 1;
    }

    fn absorb(&mut self, other: &Counters) {
        self.leaves += other.leaves;
        self.accepted += other.accepted;
        for (k, v) in &other.failures {
            *self.failures.entry(k.clone()).or_default() += v;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub n: usize,
    pub entries: BTreeMap<String, CatalogEntry>,
    pub counters: Counters,
    /// False when the run stopped before every work unit finished.
    pub complete: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Record {
    Entry(CatalogEntry),
    Summary(Summary),
    /// Provenance written ahead of the entries; ignored on reading.
    Manifest { manifest: serde_json::Value },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub free_1221: usize,
    pub with_1221: usize,
    pub complete: bool,
    pub counters: Counters,
}

impl Catalog {
    pub fn new(n: usize) -> Catalog {
        Catalog { n, entries: BTreeMap::new(), counters: Counters::default(), complete: false }
    }

    pub(crate) fn insert(&mut self, entry: CatalogEntry) {
        self.counters.accepted += 1;
        self.add(entry);
    }

    fn add(&mut self, entry: CatalogEntry) {
        match self.entries.get_mut(&entry.key) {
            Some(existing) => {
                for s in entry.seeds {
                    if !existing.seeds.contains(&s) {
                        existing.seeds.push(s);
                        existing.seeds.sort();
                    }
                }
            }
            None => {
                self.entries.insert(entry.key.clone(), entry);
            }
        }
        self.counters.duplicates_merged = self.counters.accepted - self.entries.len() as u64;
    }

    /// Associative, commutative union.
    pub fn merge(&mut self, other: Catalog) {
        self.counters.absorb(&other.counters);
        for (_, e) in other.entries {
            self.add(e);
        }
        self.counters.duplicates_merged = self.counters.accepted - self.entries.len() as u64;
    }

    /// (1221-free, with-1221) counts.
    pub fn split_counts(&self) -> (usize, usize) {
        let with = self.entries.values().filter(|e| e.has_1221).count();
        (self.entries.len() - with, with)
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.entries.values().map(CatalogEntry::graph).collect()
    }

    pub fn summary(&self) -> Summary {
        let (free_1221, with_1221) = self.split_counts();
        Summary { n: self.n, free_1221, with_1221, complete: self.complete, counters: self.counters.clone() }
    }

    /// One record per entry in key order, then a summary record.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for e in self.entries.values() {
            serde_json::to_writer(&mut w, &Record::Entry(e.clone()))?;
            w.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut w, &Record::Summary(self.summary()))?;
        w.write_all(b"\n")
    }

    /// Like [`Catalog::write_jsonl`], with a leading manifest record.
    pub fn write_jsonl_with_manifest<W: Write, M: Serialize>(&self, mut w: W, manifest: &M) -> io::Result<()> {
        let manifest = serde_json::to_value(manifest).map_err(io::Error::other)?;
        serde_json::to_writer(&mut w, &Record::Manifest { manifest })?;
        w.write_all(b"\n")?;
        self.write_jsonl(w)
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    pub fn read_jsonl<R: BufRead>(r: R) -> io::Result<Catalog> {
        let mut entries = BTreeMap::new();
        let mut summary = None;
        for line in r.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str(&line).map_err(io::Error::other)? {
                Record::Entry(e) => {
                    entries.insert(e.key.clone(), e);
                }
                Record::Summary(s) => summary = Some(s),
                Record::Manifest { .. } => {}
            }
        }
        let s = summary.ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "missing summary record"))?;
        Ok(Catalog { n: s.n, entries, counters: s.counters, complete: s.complete })
    }
}
