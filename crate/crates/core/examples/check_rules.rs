//! Run the four candidate rules and print the first witness of each failure.
//!
//! ```text
//! cargo run --example check_rules
//! cargo run --example check_rules -- 'I??KKBw~?'
//! ```

use mtlz::families::{build, FamilySpec};
use mtlz::graph::{emit_graph6, parse_graph6, Graph};
use mtlz::rules::is_candidate;

fn show(label: &str, g: &Graph) {
    let rep = is_candidate(g);
    println!("{label}: candidate={} bipartite={} connected={}", rep.candidate, rep.bipartite, rep.connected);
    if let Some(t) = rep.no_k3.witness {
        println!("  triangle {t:?}");
    }
    if let Some(p) = rep.two_path.witness {
        println!("  lone 2-path {}~{}~{}", p.a, p.middle, p.b);
    }
    if let Some(k) = rep.no_k33.witness {
        println!("  K33 {:?} x {:?}", k.left, k.right);
    }
    if let Some(e) = rep.no_1221.witness {
        println!("  unrescued 1221 at {e:?}");
    }
}

fn main() {
    if let Some(text) = std::env::args().nth(1) {
        show(&text, &parse_graph6(&text).expect("graph6 input"));
        return;
    }
    for name in ["q3", "k3,3", "inner-layer-two", "1441-2"] {
        let g = build(&name.parse::<FamilySpec>().unwrap()).unwrap();
        show(&format!("{name} ({})", emit_graph6(&g)), &g);
    }
    let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    show("triangle", &triangle);
}
