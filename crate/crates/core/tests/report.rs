mod common;

use common::*;
use mtlz::gamma::{GammaConfig, GammaStatus};
use mtlz::graph::emit_graph6;
use mtlz::report::*;
use mtlz::search::{enumerate_candidates, Catalog, SearchConfig};

fn catalog(n: usize) -> Catalog {
    enumerate_candidates(&SearchConfig::new(n)).unwrap()
}

#[test]
fn tables_from_catalogs() {
    let cats: Vec<Catalog> = (8..=11).map(catalog).collect();
    let rep = report_tables(&cats, &[8, 9, 10, 11]).unwrap();
    let rows: Vec<(usize, usize, usize)> = rep.table1.iter().map(|r| (r.n, r.free_1221, r.with_1221)).collect();
    assert_eq!(rows, vec![(8, 1, 1), (9, 0, 2), (10, 1, 7), (11, 0, 7)]);
    assert!(rep.table1.iter().all(|r| r.complete));
    assert!(rep.notes.is_empty(), "{:?}", rep.notes);
    let edges: Vec<usize> = rep.table2.iter().map(|r| r.edges).collect();
    assert_eq!(edges, PUBLISHED_TABLE2_EDGES);
    assert_eq!(rep.table2.iter().filter(|r| !r.has_1221).count(), 1);
    assert_eq!(report_tables(&cats, &[12]), Err(ReportError::MissingN(12)));
}

#[test]
fn split_catalogs_merge() {
    let mut free = SearchConfig::new(10);
    free.seeds = mtlz::search::SeedChoice::Free;
    let mut with = SearchConfig::new(10);
    with.seeds = mtlz::search::SeedChoice::With1221;
    let parts = [enumerate_candidates(&free).unwrap(), enumerate_candidates(&with).unwrap()];
    let rep = report_tables(&parts, &[10]).unwrap();
    assert_eq!(rep.table1[0].free_1221, 1);
    assert_eq!(rep.table1[0].with_1221, 7);
}

#[test]
fn pipeline_stops_for_non_candidates() {
    let rep = pipeline(&emit_graph6(&family("k3,3")), &GammaConfig::default()).unwrap();
    assert!(!rep.rules.candidate && rep.rules.no_k33.witness.is_some());
    assert!(rep.orientation.is_none() && rep.gamma.is_empty());
}

#[test]
fn pipeline_finds_product_solutions() {
    let rep = pipeline(&emit_graph6(&family("k2*k2,3")), &GammaConfig::default()).unwrap();
    assert!(rep.rules.candidate);
    assert!(rep.any_nontrivial());
}

#[test]
fn pipeline_errors_carry_the_stage() {
    let err = pipeline("garbage", &GammaConfig::default()).unwrap_err();
    assert!(err.to_string().starts_with("parse:"));
}

#[test]
fn reports_are_byte_stable() {
    let cfg = GammaConfig { restarts: 50, ..GammaConfig::default() };
    let g6 = emit_graph6(&family("fan4"));
    let a = serde_json::to_string(&pipeline(&g6, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&pipeline(&g6, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
    let rep = pipeline(&g6, &cfg).unwrap();
    assert!(rep.gamma.iter().all(|g| g.solution.restarts_used == 50));
    assert!(rep.gamma.iter().any(|g| g.solution.status == GammaStatus::Nontrivial));
}

#[test]
fn manifests_digest_inputs() {
    let mut m = RunManifest::new("check", serde_json::json!({}), vec![3]);
    m.digest_input("graph6", b"abc");
    assert_eq!(m.input_digests["graph6"], "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    assert_eq!(m.tool_version, env!("CARGO_PKG_VERSION"));
}
