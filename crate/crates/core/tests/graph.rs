mod common;

use common::*;
use mtlz::graph::{canonical_form, emit_graph6, is_isomorphic, parse_graph6, Bipartiteness, Graph};
use rand::Rng;
use std::collections::BTreeSet;

fn named() -> Vec<Graph> {
    ["k2", "q2", "q3", "q4", "k2,3", "k3,3", "fan5", "k2*k2,3", "1441-2", "g1463", "g14631", "g13631", "clebsch16"]
        .iter()
        .map(|n| family(n))
        .collect()
}

#[test]
fn graph6_round_trips_over_fixtures() {
    for name in ["n10.g6", "bipartite_connected_8.g6", "bipartite_connected_9.g6", "bipartite_connected_10.g6"] {
        for line in fixture_lines(name) {
            let g = parse_graph6(&line).unwrap();
            assert_eq!(emit_graph6(&g), line);
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn graph6_examples() {
    let c4 = parse_graph6(&emit_graph6(&family("q2"))).unwrap();
    assert_eq!((c4.n(), c4.edge_count()), (4, 4));
    let err = parse_graph6("garbage").unwrap_err().to_string();
    assert!(err.contains("at byte"), "{err}");
}

#[test]
fn canonical_form_is_label_invariant() {
    let mut rng = rng(7);
    let mut graphs = fixture_graphs("n10.g6");
    graphs.extend(named());
    for g in graphs {
        let key = canonical_form(&g).key;
        for _ in 0..1000 {
            let p = random_permutation(g.n(), &mut rng);
            assert_eq!(canonical_form(&g.permute(&p)).key, key);
        }
    }
}

#[test]
fn relabeling_maps_onto_the_canonical_graph() {
    for g in named() {
        let cf = canonical_form(&g);
        assert_eq!(emit_graph6(&g.permute(&cf.relabeling)), cf.graph6());
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let mut rng = rng(11);
    let mut same = 0;
    for _ in 0..400 {
        let n = rng.gen_range(4..=7);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = rng.gen_range(0..=pairs.len());
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = pairs.clone();
            rand::seq::SliceRandom::shuffle(p.as_mut_slice(), rng);
            Graph::from_edges(n, &p[..m]).unwrap()
        };
        let g = pick(&mut rng);
        let h = if rng.gen_bool(0.5) { g.permute(&random_permutation(n, &mut rng)) } else { pick(&mut rng) };
        let expected = brute_isomorphic(&g, &h);
        same += expected as usize;
        assert_eq!(is_isomorphic(&g, &h), expected, "{} vs {}", emit_graph6(&g), emit_graph6(&h));
    }
    assert!(same > 100);
}

#[test]
fn fixture_catalogs_are_pairwise_non_isomorphic() {
    for (name, count) in [("n10.g6", 8), ("bipartite_connected_8.g6", 182), ("bipartite_connected_9.g6", 730)] {
        let keys: BTreeSet<Vec<u8>> = fixture_graphs(name).iter().map(|g| canonical_form(g).key).collect();
        assert_eq!(keys.len(), count, "{name}");
    }
    assert!(!is_isomorphic(&family("q3"), &family("k3,3")));
}

#[test]
fn four_cycles_match_brute_force() {
    let mut graphs = fixture_graphs("bipartite_connected_8.g6");
    graphs.extend(fixture_graphs("n10.g6"));
    graphs.extend(fixture_graphs("bipartite_connected_10.g6").into_iter().step_by(10));
    graphs.extend(["q3", "k2,3", "k3,3", "k2*k2,3", "1441-2", "fan6"].iter().map(|n| family(n)));
    let mut rng = rng(3);
    for _ in 0..200 {
        let n = rng.gen_range(4..=12);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.4)).collect();
        graphs.push(Graph::from_edges(n, &edges).unwrap());
    }
    for g in &graphs {
        let cycles = g.four_cycles();
        assert_eq!(cycles.len(), brute_four_cycles(g), "{}", emit_graph6(g));
        let distinct: BTreeSet<_> = cycles.iter().map(|c| c.vertices()).collect();
        assert_eq!(distinct.len(), cycles.len());
        for c in &cycles {
            assert!(c.a < c.c && c.a < c.b && c.a < c.d && c.c < c.d);
            assert!(c.edges().iter().all(|&(x, y)| g.has_edge(x, y)));
        }
    }
}

#[test]
fn four_cycle_counts() {
    assert_eq!(family("k2,3").four_cycles().len(), 3);
    assert_eq!(family("q3").four_cycles().len(), 6);
    assert_eq!(family("1441-2").four_cycles().len(), 18);
}

#[test]
fn distance_two_pairs() {
    let g = family("1441-2");
    let pairs = g.distance_two_pairs();
    assert_eq!(pairs.len(), 20);
    assert_eq!(pairs.iter().filter(|p| p.common.len() == 2).count(), 12);
    assert_eq!(pairs.iter().filter(|p| p.common.len() == 3).count(), 8);
    assert!(family("k2").distance_two_pairs().is_empty());

    // K_{2,3}: three spoke pairs through both hubs, and the hub pair
    // through all three spokes.
    let k23 = family("k2,3").distance_two_pairs();
    let mut ks: Vec<usize> = k23.iter().map(|p| p.common.len()).collect();
    ks.sort();
    assert_eq!(ks, vec![2, 2, 2, 3]);

    for g in named() {
        let d = g.distance_matrix().unwrap();
        let pairs = g.distance_two_pairs();
        let expected = (0..g.n()).flat_map(|a| (a + 1..g.n()).map(move |b| (a, b))).filter(|&(a, b)| d[a][b] == 2).count();
        assert_eq!(pairs.len(), expected);
        for p in &pairs {
            assert!(!g.has_edge(p.a, p.b) && !p.common.is_empty());
            assert!(p.common.iter().all(|&c| g.has_edge(p.a, c) && g.has_edge(p.b, c)));
            assert_eq!(p.common.len(), g.common_neighbors(p.a, p.b).count_ones() as usize);
        }
        // Diagonals of every 4-cycle in a triangle-free graph are distance-2 pairs.
        if mtlz::rules::check_no_k3(&g).pass {
            let keys: BTreeSet<(usize, usize)> = pairs.iter().map(|p| (p.a, p.b)).collect();
            for c in g.four_cycles() {
                for diag in c.diagonals() {
                    assert!(keys.contains(&diag));
                }
            }
        }
    }
}

#[test]
fn distances_and_diameter() {
    assert_eq!(family("k2,3").diameter().unwrap(), 2);
    assert_eq!(family("q3").diameter().unwrap(), 3);
    assert_eq!(family("g1463").diameter().unwrap(), 3);
    let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(disconnected.diameter().is_err());
    assert!(disconnected.distance(0, 3).is_err());

    for g in named().into_iter().chain(fixture_graphs("n10.g6")) {
        let d = g.distance_matrix().unwrap();
        assert_eq!(d, floyd(&g));
        let max = d.iter().flatten().copied().max().unwrap();
        assert_eq!(g.diameter().unwrap(), max);
        for a in 0..g.n() {
            assert_eq!(d[a][a], 0);
            for b in 0..g.n() {
                assert_eq!(d[a][b], d[b][a]);
            }
        }
    }
}

#[test]
fn bipartiteness() {
    for name in ["q3", "k2"] {
        assert!(family(name).is_bipartite());
    }
    let c = family("clebsch16");
    match c.bipartition() {
        Bipartiteness::OddCycle(cycle) => {
            assert_eq!(cycle.len(), 5);
            for i in 0..5 {
                assert!(c.has_edge(cycle[i], cycle[(i + 1) % 5]));
            }
        }
        Bipartiteness::Bipartite(_) => panic!("Clebsch graph has 5-cycles"),
    }
    match family("q3").bipartition() {
        Bipartiteness::Bipartite(color) => {
            let g = family("q3");
            assert!(g.edges().iter().all(|&(a, b)| color[a] != color[b]));
        }
        Bipartiteness::OddCycle(_) => panic!("cube is bipartite"),
    }
}

#[test]
fn layer_decompositions() {
    let g = family("g1463");
    let bottom = (0..g.n()).find(|&v| g.layer_decomposition(v).unwrap().sequence == vec![1, 4, 6, 3]);
    assert!(bottom.is_some());
    let k23 = family("k2,3");
    assert_eq!(k23.layer_decomposition(0).unwrap().sequence, vec![1, 3, 1]);
    assert_eq!(k23.layer_decomposition(2).unwrap().sequence, vec![1, 2, 2]);
    assert_eq!(family("k2").layer_decomposition(1).unwrap().sequence, vec![1, 1]);
    assert!(Graph::from_edges(3, &[(0, 1)]).unwrap().layer_decomposition(0).is_err());

    for g in named().into_iter().chain(fixture_graphs("bipartite_connected_9.g6")) {
        for root in 0..g.n() {
            let ld = g.layer_decomposition(root).unwrap();
            assert_eq!(ld.sequence.iter().sum::<usize>(), g.n());
            let dist = g.bfs_distances(root);
            for (i, layer) in ld.layers.iter().enumerate() {
                assert!(layer.iter().all(|&v| dist[v] == Some(i)));
            }
            if g.is_bipartite() {
                for &(a, b) in g.edges() {
                    assert_eq!(ld.layer_of(a).unwrap().abs_diff(ld.layer_of(b).unwrap()), 1);
                }
            }
        }
    }
}

#[test]
fn cartesian_products() {
    let k2 = family("k2");
    assert!(is_isomorphic(&k2.cartesian_product(&k2).unwrap(), &family("q2")));
    let p = k2.cartesian_product(&family("k2,3")).unwrap();
    assert_eq!((p.n(), p.edge_count()), (10, 17));
    assert!(is_isomorphic(&k2.cartesian_product(&family("q2")).unwrap(), &family("q3")));
    let mut cube = k2.clone();
    for d in 2..=4 {
        cube = cube.cartesian_product(&k2).unwrap();
        assert!(is_isomorphic(&cube, &family(&format!("q{d}"))));
    }
    let big = family("q3").cartesian_product(&family("q3")).unwrap();
    assert!(big.cartesian_product(&k2).is_err());
}
