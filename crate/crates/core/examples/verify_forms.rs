//! Check explicit model data: the square, and a perturbed copy.
//!
//! ```text
//! cargo run --example verify_forms
//! ```

use mtlz::graph::Graph;
use mtlz::orientation::Orientation;
use mtlz::verifier::{fundamental_cycles, verify_data, FormAssignment, MTLZData};

fn square(signs: Vec<i8>) -> MTLZData {
    let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let forms = FormAssignment::from_pairs(
        &g,
        2,
        &[((0, 2), vec![1.0, 0.0]), ((0, 3), vec![0.0, 1.0]), ((1, 2), vec![0.0, 1.0]), ((1, 3), vec![1.0, 0.0])],
    )
    .unwrap();
    let o = Orientation::new(&g, signs);
    MTLZData::new(g, o, forms, Some(vec![1.0; 4])).unwrap()
}

fn main() {
    let good = square(vec![1, -1, 1, -1]);
    println!("cycles: {:?}", fundamental_cycles(&good.graph));
    let rep = verify_data(&good, 1e-12).unwrap();
    println!("square: pass={} cycle={} multipath={:?}", rep.pass, rep.cycle.max_residual, rep.multipath.map(|m| m.max_residual));
    let bad = verify_data(&square(vec![1, 1, 1, -1]), 1e-12).unwrap();
    println!("one arrow flipped: pass={} cycle={}", bad.pass, bad.cycle.max_residual);
}
