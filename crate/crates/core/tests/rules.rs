mod common;

use common::*;
use mtlz::graph::Graph;
use mtlz::rules::*;
use proptest::prelude::*;
use rand::Rng;

const PATTERN: [(usize, usize); 8] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
const RESCUE: [(usize, usize); 4] = [(0, 3), (0, 4), (1, 5), (2, 5)];

fn brute_triangle(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    (0..n).any(|a| (a + 1..n).any(|b| adj[a][b] && (b + 1..n).any(|c| adj[a][c] && adj[b][c])))
}

fn brute_lone_path(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    (0..n).any(|a| {
        (a + 1..n).any(|b| !adj[a][b] && (0..n).filter(|&c| adj[a][c] && adj[b][c]).count() == 1)
    })
}

fn brute_k33(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let triples: Vec<[usize; 3]> =
        (0..n).flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))).collect();
    triples.iter().any(|l| {
        triples.iter().any(|r| l.iter().all(|&x| !r.contains(&x) && r.iter().all(|&y| adj[x][y])))
    })
}

/// Some injective image of the pattern has no rescuing seventh vertex.
fn brute_unrescued_1221(adj: &[Vec<bool>]) -> bool {
    fn extend(adj: &[Vec<bool>], f: &mut Vec<usize>) -> bool {
        let n = adj.len();
        if f.len() == 6 {
            return !(0..n).any(|a| {
                !f.contains(&a) && RESCUE.iter().any(|&(x, y)| adj[f[x]][a] && adj[a][f[y]])
            });
        }
        let i = f.len();
        for v in 0..n {
            if f.contains(&v) {
                continue;
            }
            if PATTERN.iter().filter(|&&(x, y)| y == i && x < i).all(|&(x, _)| adj[f[x]][v]) {
                f.push(v);
                if extend(adj, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    extend(adj, &mut Vec::new())
}

fn random_graph(rng: &mut rand_chacha::ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn assert_witnesses(g: &Graph) {
    let r = is_candidate(g);
    if let Some([a, b, c]) = r.no_k3.witness {
        assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
    }
    if let Some(w) = r.two_path.witness {
        assert!(!g.has_edge(w.a, w.b));
        assert_eq!(g.common_neighbors(w.a, w.b), 1u64 << w.middle);
    }
    if let Some(w) = r.no_k33.witness {
        let mut all: Vec<usize> = w.left.iter().chain(&w.right).copied().collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 6);
        assert!(w.left.iter().all(|&x| w.right.iter().all(|&y| g.has_edge(x, y))));
    }
    if let Some(f) = r.no_1221.witness {
        assert!(PATTERN.iter().all(|&(x, y)| g.has_edge(f[x], f[y])));
        for a in (0..g.n()).filter(|a| !f.contains(a)) {
            assert!(RESCUE.iter().all(|&(x, y)| !(g.has_edge(f[x], a) && g.has_edge(a, f[y]))));
        }
    }
    assert_eq!(r.candidate, r.no_k3.pass && r.two_path.pass && r.no_k33.pass && r.no_1221.pass);
}

#[test]
fn rules_agree_with_brute_force() {
    let mut rng = rng(5);
    let mut graphs = fixture_graphs("bipartite_connected_8.g6");
    for _ in 0..300 {
        let n = rng.gen_range(6..=9);
        let p = rng.gen_range(0.2..0.8);
        graphs.push(random_graph(&mut rng, n, p));
    }
    for g in &graphs {
        let adj = adjacency(g);
        assert_eq!(!check_no_k3(g).pass, brute_triangle(&adj));
        assert_eq!(!check_two_path(g).pass, brute_lone_path(&adj));
        assert_eq!(!check_no_k33(g).pass, brute_k33(&adj));
        assert_eq!(!check_no_1221(g).pass, brute_unrescued_1221(&adj));
        assert_witnesses(g);
    }
}

#[test]
fn rule_examples() {
    let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let r = check_no_k3(&k3);
    assert!(!r.pass && r.witness == Some([0, 1, 2]));
    assert!(check_no_k3(&family("q4")).pass);
    assert!(check_no_k3(&family("clebsch16")).pass);

    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!check_two_path(&p4).pass);
    assert!(check_two_path(&family("k2,3")).pass);
    assert!(check_two_path(&family("1441-2")).pass);

    assert!(!check_no_k33(&family("k3,3")).pass);
    for n in 1..=8 {
        assert!(check_no_k33(&family(&format!("k2,{n}"))).pass);
    }
    assert!(!check_no_k33(&family("inner-layer-two")).pass);

    let bare = Graph::from_edges(6, &PATTERN).unwrap();
    assert!(!check_no_1221(&bare).pass);
    let product = family("k2*k2,3");
    assert!(check_no_1221(&product).pass && !has_1221(&product));
    let worked = family("1441-2");
    assert!(check_no_1221(&worked).pass && has_1221(&worked));
}

#[test]
fn candidates() {
    for n in 3..=6 {
        assert!(is_candidate(&family(&format!("fan{n}"))).candidate);
    }
    let g = is_candidate(&family("g1463"));
    assert!(g.candidate && g.bipartite && g.connected);
    let k33 = is_candidate(&family("k3,3"));
    assert!(!k33.candidate && !k33.no_k33.pass);
    let c = is_candidate(&family("clebsch16"));
    assert!(c.candidate && !c.bipartite);
}

#[test]
fn zero_two_graphs() {
    for name in ["q2", "q3", "q4", "g1463", "clebsch16"] {
        let g = family(name);
        assert!(is_zero_two_graph(&g), "{name}");
        // (0,2), connected and triangle-free give the 2-path rule and exclude
        // K_{2,3}, hence K_{3,3} and the 1221 pattern.
        assert!(g.is_connected() && check_no_k3(&g).pass);
        let r = is_candidate(&g);
        assert!(r.two_path.pass && r.no_k33.pass && r.no_1221.pass && !has_1221(&g));
        assert!(g.distance_two_pairs().iter().all(|p| p.common.len() == 2));
    }
    assert!(!is_zero_two_graph(&family("k2,3")));
    assert!(!is_zero_two_graph(&family("1441-2")));
}

#[test]
fn diameter_bound() {
    assert!(diameter_bound_holds(&family("q3")).unwrap());
    assert!(diameter_bound_holds(&family("g1463")).unwrap());
    // A 7-vertex graph of diameter 3: the path 0-1-2-3 with pendant vertices.
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
    assert_eq!(g.diameter().unwrap(), 3);
    assert!(!diameter_bound_holds(&g).unwrap());
    assert!(diameter_bound_holds(&Graph::from_edges(3, &[(0, 1)]).unwrap()).is_err());
}

fn arb_graph() -> impl Strategy<Value = (Graph, (usize, usize))> {
    (5usize..=10).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (proptest::collection::vec(any::<bool>(), pairs), 0..pairs).prop_map(move |(mask, extra)| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let edges: Vec<_> = all.iter().zip(&mask).filter(|(_, &m)| m).map(|(&e, _)| e).collect();
            (Graph::from_edges(n, &edges).unwrap(), all[extra])
        })
    })
}

proptest! {
    #[test]
    fn adding_an_edge_never_repairs_k3_or_k33((g, (a, b)) in arb_graph()) {
        let mut edges = g.edges().to_vec();
        edges.push((a, b));
        let h = Graph::from_edges(g.n(), &edges).unwrap();
        if !check_no_k3(&g).pass {
            prop_assert!(!check_no_k3(&h).pass);
        }
        if !check_no_k33(&g).pass {
            prop_assert!(!check_no_k33(&h).pass);
        }
    }

    #[test]
    fn witnesses_revalidate((g, _) in arb_graph()) {
        assert_witnesses(&g);
    }
}
