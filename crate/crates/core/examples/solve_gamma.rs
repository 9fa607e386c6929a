//! Solve the magnitude equations for every r solution of a few graphs.
//!
//! ```text
//! cargo run --release --example solve_gamma
//! ```

use mtlz::families::{build, FamilySpec};
use mtlz::gamma::{build_gamma_system, solve_gamma, GammaConfig, GammaStatus};
use mtlz::orientation::branch_search;

fn main() {
    let cfg = GammaConfig { restarts: 200, ..GammaConfig::default() };
    for name in ["q3", "k2*k2,3", "1441-2"] {
        let g = build(&name.parse::<FamilySpec>().unwrap()).unwrap();
        let res = branch_search(&g).unwrap();
        for (ci, class) in res.classes.iter().enumerate() {
            for (ri, r) in class.r_solutions.iter().enumerate() {
                let sys = build_gamma_system(&g, r).unwrap();
                let sol = solve_gamma(&sys, &cfg);
                let gamma: Vec<String> = sol.x.iter().map(|x| format!("{:.3}", x * x)).collect();
                println!(
                    "{name:>8} class {ci} r#{ri}: {:?}  residual {:.1e}  restart {}",
                    sol.status, sol.residual, sol.best_restart
                );
                if sol.status == GammaStatus::Nontrivial {
                    println!("          |gamma| = {}", gamma.join(" "));
                }
            }
        }
    }
}
