//! Rules, orientations and magnitudes for one graph in a single call.
//!
//! ```text
//! cargo run --release --example pipeline -- 'graph6'
//! ```

use mtlz::families::{build, FamilySpec};
use mtlz::gamma::GammaConfig;
use mtlz::graph::emit_graph6;
use mtlz::report::pipeline;

fn main() {
    let g6 = std::env::args()
        .nth(1)
        .unwrap_or_else(|| emit_graph6(&build(&"k2*k2,3".parse::<FamilySpec>().unwrap()).unwrap()));
    let cfg = GammaConfig { restarts: 100, ..GammaConfig::default() };
    let rep = pipeline(&g6, &cfg).unwrap();
    println!("{g6}: candidate={}", rep.rules.candidate);
    if let Some(o) = &rep.orientation {
        println!(
            "{} r variables on {} pairs ({} forced), {} orientation classes from {} survivors",
            o.variables,
            o.pairs,
            o.forced,
            o.classes.len(),
            o.raw_survivors
        );
    }
    for run in &rep.gamma {
        println!("class {} r#{}: {:?}", run.class, run.r_solution, run.solution.status);
    }
    println!("nontrivial solution found: {}", rep.any_nontrivial());
}
