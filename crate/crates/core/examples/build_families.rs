//! Build the named graphs and print their basic invariants.
//!
//! ```text
//! cargo run --example build_families
//! ```

use mtlz::families::{build, vertex_names, FamilySpec};
use mtlz::graph::emit_graph6;

fn main() {
    for name in ["k2,3", "q3", "k2*k2,3", "1441-2", "g1463", "g14631", "g13631", "clebsch16"] {
        let spec: FamilySpec = name.parse().unwrap();
        let g = build(&spec).unwrap();
        let diameter = g.diameter().map_or("-".to_string(), |d| d.to_string());
        println!(
            "{name:>10}  n={:<3} e={:<3} d={diameter}  degrees {:?}  {}",
            g.n(),
            g.edge_count(),
            g.degree_sequence(),
            emit_graph6(&g)
        );
    }
    let names = vertex_names(&FamilySpec::G13631).unwrap();
    println!("G13631 vertices: {}", names.join(" "));
}
