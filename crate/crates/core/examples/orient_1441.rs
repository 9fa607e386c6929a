//! The r-factor system and the orientation search on the 1441-2 graph.
//! Vertices print 1-based with vertex 10 written as 0.
//!
//! ```text
//! cargo run --example orient_1441
//! ```

use mtlz::families::{build, FamilySpec};
use mtlz::orientation::{branch_search, RVariable};

fn label(v: usize) -> char {
    if v == 9 {
        '0'
    } else {
        char::from(b'1' + v as u8)
    }
}

fn name(v: &RVariable) -> String {
    [v.a, v.c, v.b, v.d].iter().map(|&x| label(x)).collect()
}

fn main() {
    let g = build(&FamilySpec::Catalog1441_2).unwrap();
    let res = branch_search(&g).unwrap();
    let sys = &res.system;
    println!("{} variables over {} distance-2 pairs", sys.variables.len(), sys.pairs.len());
    let forced: Vec<String> = sys.forced.iter().map(|&i| name(&sys.variables[i])).collect();
    println!("forced to -1: {}", forced.join(" "));
    println!(
        "classes: {} (reversal only {}, isomorphism only {}), {} search nodes",
        res.classes.len(),
        res.reversal_classes,
        res.isomorphism_classes,
        res.nodes
    );
    println!("pruned: {:?}", res.pruned);
    for (i, class) in res.classes.iter().enumerate() {
        let arrows: Vec<String> =
            class.representative.arrows().iter().map(|&(a, b)| format!("{}>{}", label(a), label(b))).collect();
        println!("class {i}: {}", arrows.join(" "));
        for r in &class.r_solutions {
            let pos: Vec<String> = r.positives(sys).map(|v| name(&v)).collect();
            println!("  r = +1 on {}", pos.join(" "));
        }
    }
}
