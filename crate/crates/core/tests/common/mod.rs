#![allow(dead_code)]

use mtlz::families::{build, FamilySpec};
use mtlz::graph::{parse_graph6, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture_lines(name: &str) -> Vec<String> {
    std::fs::read_to_string(fixture_path(name))
        .expect("fixture exists")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

pub fn fixture_graphs(name: &str) -> Vec<Graph> {
    fixture_lines(name).iter().map(|l| parse_graph6(l).expect("fixture parses")).collect()
}

pub fn family(name: &str) -> Graph {
    let spec: FamilySpec = name.parse().expect("known family");
    build(&spec).expect("family builds")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let ha = adjacency(h);
    let mut p: Vec<usize> = (0..g.n()).collect();
    loop {
        if g.edges().iter().all(|&(a, b)| ha[p[a]][p[b]]) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Number of 4-cycles, counted over all 4-vertex subsets.
pub fn brute_four_cycles(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // The three ways to close a cycle through four vertices.
                    for [w, x, y, z] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        if adj[w][x] && adj[x][y] && adj[y][z] && adj[z][w] {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

/// Distances by Floyd-Warshall; `usize::MAX` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Name of an r variable as printed for the 1441-2 graph: vertices 1..9
/// keep their labels and vertex 10 is written 0.
pub fn label_1441(v: usize) -> char {
    if v == 9 {
        '0'
    } else {
        char::from(b'1' + v as u8)
    }
}

/// Parses a printed `acbd` name into 0-based vertices.
pub fn parse_r_name(name: &str) -> (usize, usize, usize, usize) {
    let v: Vec<usize> = name
        .chars()
        .map(|ch| match ch.to_digit(10).unwrap() as usize {
            0 => 9,
            d => d - 1,
        })
        .collect();
    (v[0], v[1], v[2], v[3])
}
