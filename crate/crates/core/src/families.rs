//! Named graphs: fans, hypercubes, products, the (0,2)-graph 1463 and its
//! descendants, the 16-vertex Clebsch-type graph, and the worked 1441-2
//! candidate.

use crate::graph::{Edge, Graph, GraphError, MAX_VERTICES};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown family name {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    K2,
    /// K_{2,n}, n >= 3.
    Fan(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    Product(Vec<FamilySpec>),
    G1463,
    G14631,
    G13631,
    Clebsch16,
    Catalog1441_2,
    /// Seven-vertex graph obtained when an inner layer is assumed to hold only
    /// two vertices; contains K_{3,3}.
    InnerLayerTwo,
}

const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];

pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::K2 => Ok(Graph::from_edges(2, &[(0, 1)])?),
        FamilySpec::Fan(n) => {
            if *n < 3 {
                return Err(FamilyError::InvalidParameter(format!("fan needs n >= 3, got {n}")));
            }
            complete_bipartite(2, *n)
        }
        FamilySpec::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
        FamilySpec::Hypercube(dim) => hypercube(*dim),
        FamilySpec::Product(factors) => {
            let mut it = factors.iter();
            let first = it.next().ok_or_else(|| FamilyError::InvalidParameter("empty product".into()))?;
            let mut g = build(first)?;
            for f in it {
                g = g.cartesian_product(&build(f)?)?;
            }
            Ok(g)
        }
        FamilySpec::G1463 => Ok(Graph::from_edges(14, &g1463_edges())?),
        FamilySpec::G14631 => {
            let mut edges = g1463_edges();
            // The last BFS layer from point 1 is the three blocks avoiding it.
            edges.extend([(7, 14), (8, 14), (9, 14)]);
            Ok(Graph::from_edges(15, &edges)?)
        }
        FamilySpec::G13631 => Ok(Graph::from_edges(14, &g13631_edges())?),
        FamilySpec::Clebsch16 => Ok(Graph::from_edges(16, &clebsch_edges())?),
        FamilySpec::Catalog1441_2 => Ok(Graph::from_edges_1based(
            10,
            &[
                (1, 2), (1, 3), (1, 4), (1, 5),
                (2, 6), (2, 7), (2, 8),
                (3, 6), (3, 7),
                (4, 6), (4, 8), (4, 9),
                (5, 7), (5, 9),
                (6, 10), (7, 10), (8, 10), (9, 10),
            ],
        )?),
        FamilySpec::InnerLayerTwo => Ok(Graph::from_edges_1based(
            7,
            &[(1, 2), (2, 3), (3, 4), (1, 5), (3, 5), (2, 6), (4, 6), (5, 6), (2, 7), (4, 7), (5, 7)],
        )?),
    }
}

fn complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m == 0 || n == 0 || m + n > MAX_VERTICES {
        return Err(FamilyError::InvalidParameter(format!("K_{{{m},{n}}} out of range")));
    }
    let edges: Vec<Edge> = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))).collect();
    Ok(Graph::from_edges(m + n, &edges)?)
}

fn hypercube(dim: usize) -> Result<Graph, FamilyError> {
    if dim == 0 || dim > 6 {
        return Err(FamilyError::InvalidParameter(format!("hypercube dimension {dim} not in 1..=6")));
    }
    let n = 1usize << dim;
    let edges: Vec<Edge> = (0..n)
        .flat_map(|v| (0..dim).map(move |i| (v, v ^ (1 << i))))
        .filter(|&(a, b)| a < b)
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Points 1..7 are vertices 0..6; block i (complement of the i-th Fano line)
/// is vertex 7 + i.
fn g1463_edges() -> Vec<Edge> {
    let mut edges = Vec::new();
    for (i, line) in FANO_LINES.iter().enumerate() {
        for p in 1..=7 {
            if !line.contains(&p) {
                edges.push((p - 1, 7 + i));
            }
        }
    }
    edges
}

/// Vertex order: v, v1..v3, 12, 12', 13, 13', 23, 23', u1..u3, u.
fn g13631_edges() -> Vec<Edge> {
    let (v, u) = (0, 13);
    let vi = |i: usize| i;
    let ui = |i: usize| 9 + i;
    let mut edges = Vec::new();
    for i in 1..=3 {
        edges.push((v, vi(i)));
        edges.push((ui(i), u));
    }
    for (k, (i, j)) in [(1, 2), (1, 3), (2, 3)].into_iter().enumerate() {
        for mid in [4 + 2 * k, 5 + 2 * k] {
            for end in [ui(i), ui(j), vi(i), vi(j)] {
                edges.push((mid.min(end), mid.max(end)));
            }
        }
    }
    edges
}

fn clebsch_pairs() -> Vec<(usize, usize)> {
    (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j))).collect()
}

/// Vertex order: 0, then 1..5, then the ten pairs ij in lexicographic order.
fn clebsch_edges() -> Vec<Edge> {
    let pairs = clebsch_pairs();
    let mut edges: Vec<Edge> = (1..=5).map(|i| (0, i)).collect();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        edges.push((i, 6 + k));
        edges.push((j, 6 + k));
        for (l, &(p, q)) in pairs.iter().enumerate().skip(k + 1) {
            if p != i && p != j && q != i && q != j {
                edges.push((6 + k, 6 + l));
            }
        }
    }
    edges
}

/// Human-readable vertex names matching the labels used in the literature
/// for each construction; plain 0-based indices otherwise.
pub fn vertex_names(spec: &FamilySpec) -> Result<Vec<String>, FamilyError> {
    let g = build(spec)?;
    let names = match spec {
        FamilySpec::Catalog1441_2 | FamilySpec::InnerLayerTwo => (1..=g.n()).map(|v| v.to_string()).collect(),
        FamilySpec::G1463 | FamilySpec::G14631 => {
            let mut v: Vec<String> = (1..=7).map(|p| format!("p{p}")).collect();
            v.extend(FANO_LINES.iter().map(|l| format!("b{}{}{}", l[0], l[1], l[2])));
            if g.n() == 15 {
                v.push("u".into());
            }
            v
        }
        FamilySpec::G13631 => ["v", "v1", "v2", "v3", "12", "12'", "13", "13'", "23", "23'", "u1", "u2", "u3", "u"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        FamilySpec::Clebsch16 => {
            let mut v: Vec<String> = (0..=5).map(|i| i.to_string()).collect();
            v.extend(clebsch_pairs().iter().map(|(i, j)| format!("{i}{j}")));
            v
        }
        _ => (0..g.n()).map(|v| v.to_string()).collect(),
    };
    Ok(names)
}

/// Looks a vertex up by the name returned from [`vertex_names`].
pub fn vertex_by_name(spec: &FamilySpec, name: &str) -> Option<usize> {
    vertex_names(spec).ok()?.iter().position(|s| s == name)
}

/// Explicit r and magnitude data that satisfy the multipath system of a
/// named graph under its all-up orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSolution {
    /// BFS root whose all-up orientation the data refers to.
    pub root: usize,
    /// r variables set to +1, as (a, c, b, d): pair (a, b) through middles c, d.
    /// Every other r is -1.
    pub positive_r: Vec<(usize, usize, usize, usize)>,
    /// Edges whose |γ| is twice the common value.
    pub doubled_edges: Vec<Edge>,
}

pub fn closed_form_solution(spec: &FamilySpec) -> Option<ClosedFormSolution> {
    match spec {
        FamilySpec::G14631 => {
            let g = build(spec).ok()?;
            let u = 14;
            let top = [7, 8, 9];
            let mut positive_r = Vec::new();
            for (i, &a) in top.iter().enumerate() {
                for &b in &top[i + 1..] {
                    let mids: Vec<usize> = crate::graph::bits(g.common_neighbors(a, b) & !(1 << u)).collect();
                    positive_r.push((a, mids[0], b, mids[1]));
                }
            }
            Some(ClosedFormSolution { root: 0, positive_r, doubled_edges: top.iter().map(|&t| (t, u)).collect() })
        }
        FamilySpec::G13631 => {
            let (v, u) = (0, 13);
            let vi = |i: usize| i;
            let ui = |i: usize| 9 + i;
            let mut positive_r = Vec::new();
            for (k, (i, j)) in [(1, 2), (1, 3), (2, 3)].into_iter().enumerate() {
                let (m, m2) = (4 + 2 * k, 5 + 2 * k);
                positive_r.push((ui(i), m, ui(j), m2));
                positive_r.push((vi(i), m, vi(j), m2));
                positive_r.push((ui(i), m, vi(i), m2));
                positive_r.push((ui(j), m, vi(j), m2));
                positive_r.push((m, vi(i), m2, ui(i)));
                positive_r.push((m, vi(j), m2, ui(j)));
            }
            let mut doubled_edges: Vec<Edge> = (1..=3).map(|i| (v, vi(i))).collect();
            doubled_edges.extend((1..=3).map(|i| (ui(i), u)));
            Some(ClosedFormSolution { root: v, positive_r, doubled_edges })
        }
        _ => None,
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::K2 => write!(f, "k2"),
            FamilySpec::Fan(n) => write!(f, "fan{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "k{m},{n}"),
            FamilySpec::Hypercube(d) => write!(f, "q{d}"),
            FamilySpec::Product(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join("*"))
            }
            FamilySpec::G1463 => write!(f, "g1463"),
            FamilySpec::G14631 => write!(f, "g14631"),
            FamilySpec::G13631 => write!(f, "g13631"),
            FamilySpec::Clebsch16 => write!(f, "clebsch16"),
            FamilySpec::Catalog1441_2 => write!(f, "1441-2"),
            FamilySpec::InnerLayerTwo => write!(f, "inner-layer-two"),
        }
    }
}

/// Accepts `k2`, `fanN`, `kM,N`, `qD`, `g1463`, `g14631`, `g13631`,
/// `clebsch16`, `1441-2`, `inner-layer-two`, and products joined by `*`
/// (for example `k2*k2,3`).
impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if s.contains('*') {
            let parts = s.split('*').map(str::parse).collect::<Result<Vec<_>, _>>()?;
            return Ok(FamilySpec::Product(parts));
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| FamilyError::Unknown(s.clone()));
        match s.as_str() {
            "k2" => Ok(FamilySpec::K2),
            "g1463" => Ok(FamilySpec::G1463),
            "g14631" => Ok(FamilySpec::G14631),
            "g13631" => Ok(FamilySpec::G13631),
            "clebsch16" => Ok(FamilySpec::Clebsch16),
            "1441-2" => Ok(FamilySpec::Catalog1441_2),
            "inner-layer-two" => Ok(FamilySpec::InnerLayerTwo),
            _ => {
                if let Some(rest) = s.strip_prefix("fan") {
                    Ok(FamilySpec::Fan(num(rest)?))
                } else if let Some(rest) = s.strip_prefix('q') {
                    Ok(FamilySpec::Hypercube(num(rest)?))
                } else if let Some((m, n)) = s.strip_prefix('k').and_then(|r| r.split_once(',')) {
                    Ok(FamilySpec::CompleteBipartite(num(m)?, num(n)?))
                } else {
                    Err(FamilyError::Unknown(s.clone()))
                }
            }
        }
    }
}
