use clap::{Parser, Subcommand, ValueEnum};
use mtlz::families::{build, vertex_names, FamilySpec};
use mtlz::gamma::{build_gamma_system, solve_gamma, GammaConfig};
use mtlz::graph::{emit_graph6, parse_graph6};
use mtlz::orientation::{branch_search, RAssignment};
use mtlz::report::{pipeline, report_tables, GammaRun, RunManifest};
use mtlz::rules::is_candidate;
use mtlz::search::{enumerate_candidates, Catalog, SearchConfig, SeedChoice, Strategy};
use mtlz::verifier::{verify_data, VerifyDocument};
use serde::Serialize;
use serde_json::json;
use std::error::Error;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "mtlz", version, about = "Candidate graphs and constraint systems for MTLZ models")]
struct Cli {
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, global = true, env = "MTLZ_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Basic,
    Layered,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedsArg {
    Both,
    Free,
    With1221,
}

#[derive(clap::Args, Clone)]
struct GammaArgs {
    #[arg(long, default_value_t = 1000)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    eps_trivial: f64,
    #[arg(long, default_value_t = 500)]
    max_iter: usize,
}

impl GammaArgs {
    fn config(&self) -> GammaConfig {
        GammaConfig {
            restarts: self.restarts,
            tol_resid: self.tol,
            eps_trivial: self.eps_trivial,
            seed: self.seed,
            max_iter: self.max_iter,
            init_scale: 1.0,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph, e.g. `family fan 4`, `family k 2,3`, `family 1441-2`.
    Family { name: String, params: Vec<String> },
    /// Evaluate the four candidate rules.
    Check { graph6: String },
    /// Enumerate candidate graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "basic")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "both")]
        seeds: SeedsArg,
        /// Catalog output (JSON lines); the summary goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Surviving orientations and their r solutions.
    Orient { graph6: String },
    /// Solve the magnitude system for one r assignment, or for all of them.
    Gamma {
        graph6: String,
        /// JSON file holding `{"values": [...]}`.
        #[arg(long, conflicts_with = "auto")]
        r: Option<PathBuf>,
        /// Take every r solution from the orientation search.
        #[arg(long)]
        auto: bool,
        #[command(flatten)]
        args: GammaArgs,
    },
    /// Check explicit forms, signs and magnitudes.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Rules, orientations and magnitudes for one graph.
    Pipeline {
        graph6: String,
        #[command(flatten)]
        args: GammaArgs,
    },
    /// Candidate counts and the n = 10 list from catalog files.
    Report { catalogs: Vec<PathBuf> },
}

fn print<T: Serialize>(manifest: &mut RunManifest, started: Instant, result: &T) -> Result<(), Box<dyn Error>> {
    manifest.finish(started);
    println!("{}", serde_json::to_string_pretty(&json!({ "manifest": manifest, "result": result }))?);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Box<dyn Error>> {
    let started = Instant::now();
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    match cli.command {
        Command::Family { name, params } => {
            let text = if params.is_empty() { name } else { format!("{name}{}", params.join(",")) };
            let spec: FamilySpec = text.parse()?;
            let g = build(&spec)?;
            let mut m = RunManifest::new("family", json!({ "name": spec.to_string() }), vec![]);
            let out = json!({
                "name": spec.to_string(),
                "graph6": emit_graph6(&g),
                "n": g.n(),
                "edge_count": g.edge_count(),
                "degrees": g.degrees(),
                "diameter": g.diameter().ok(),
                "edges": g.edges(),
                "vertex_names": vertex_names(&spec).ok(),
            });
            print(&mut m, started, &out)
        }
        Command::Check { graph6 } => {
            let g = parse_graph6(&graph6)?;
            let mut m = RunManifest::new("check", json!({}), vec![]);
            m.digest_input("graph6", graph6.as_bytes());
            print(&mut m, started, &is_candidate(&g))
        }
        Command::Enumerate { n, strategy, seeds, out, checkpoint } => {
            let mut cfg = SearchConfig::new(n);
            cfg.threads = threads;
            cfg.checkpoint = checkpoint;
            cfg.strategy = match strategy {
                StrategyArg::Basic => Strategy::Basic,
                StrategyArg::Layered => Strategy::Layered { d: None, sequences: Vec::new() },
            };
            cfg.seeds = match seeds {
                SeedsArg::Both => SeedChoice::Both,
                SeedsArg::Free => SeedChoice::Free,
                SeedsArg::With1221 => SeedChoice::With1221,
            };
            let config = json!({
                "n": n,
                "strategy": format!("{:?}", cfg.strategy),
                "seeds": format!("{:?}", cfg.seeds),
                "threads": threads,
            });
            let cat = enumerate_candidates(&cfg)?;
            let mut m = RunManifest::new("enumerate", config, vec![cfg.rng_seed]);
            m.finish(started);
            match out {
                Some(path) => cat.write_jsonl_with_manifest(std::fs::File::create(path)?, &m)?,
                None => cat.write_jsonl_with_manifest(std::io::stdout().lock(), &m)?,
            }
            Ok(())
        }
        Command::Orient { graph6 } => {
            let g = parse_graph6(&graph6)?;
            let res = branch_search(&g)?;
            let mut m = RunManifest::new("orient", json!({}), vec![]);
            m.digest_input("graph6", graph6.as_bytes());
            let out = json!({
                "variables": res.system.variables,
                "forced": res.system.forced,
                "classes": res.classes,
                "orientations": res.raw,
                "reversal_classes": res.reversal_classes,
                "isomorphism_classes": res.isomorphism_classes,
                "pruned_counts": res.pruned,
                "nodes": res.nodes,
            });
            print(&mut m, started, &out)
        }
        Command::Gamma { graph6, r, auto, args } => {
            let g = parse_graph6(&graph6)?;
            let cfg = args.config();
            let mut m = RunManifest::new("gamma", serde_json::to_value(cfg)?, vec![cfg.seed]);
            m.digest_input("graph6", graph6.as_bytes());
            let runs: Vec<GammaRun> = if auto {
                let res = branch_search(&g)?;
                let mut runs = Vec::new();
                for (ci, class) in res.classes.iter().enumerate() {
                    for (ri, r) in class.r_solutions.iter().enumerate() {
                        let solution = solve_gamma(&build_gamma_system(&g, r)?, &cfg);
                        runs.push(GammaRun { class: ci, r_solution: ri, solution });
                    }
                }
                runs
            } else {
                let path = r.ok_or("either --r or --auto is required")?;
                let text = std::fs::read_to_string(&path)?;
                m.digest_input("r", text.as_bytes());
                let r: RAssignment = serde_json::from_str(&text)?;
                vec![GammaRun { class: 0, r_solution: 0, solution: solve_gamma(&build_gamma_system(&g, &r)?, &cfg) }]
            };
            print(&mut m, started, &runs)
        }
        Command::Verify { file, tol } => {
            let text = std::fs::read_to_string(&file)?;
            let doc: VerifyDocument = serde_json::from_str(&text)?;
            let mut m = RunManifest::new("verify", json!({ "tol": tol }), vec![]);
            m.digest_input("document", text.as_bytes());
            print(&mut m, started, &verify_data(&doc.into_data()?, tol)?)
        }
        Command::Pipeline { graph6, args } => {
            let cfg = args.config();
            let mut m = RunManifest::new("pipeline", serde_json::to_value(cfg)?, vec![cfg.seed]);
            m.digest_input("graph6", graph6.as_bytes());
            print(&mut m, started, &pipeline(&graph6, &cfg)?)
        }
        Command::Report { catalogs } => {
            let mut m = RunManifest::new("report", json!({}), vec![]);
            let mut loaded = Vec::new();
            for path in &catalogs {
                let bytes = std::fs::read(path)?;
                m.digest_input(&path.display().to_string(), &bytes);
                loaded.push(Catalog::read_jsonl(bytes.as_slice())?);
            }
            print(&mut m, started, &report_tables(&loaded, &[])?)
        }
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
