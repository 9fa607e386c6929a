//! Enumerate candidates for n = 8..=11 and print the 1221 split per n,
//! then the n = 10 catalog.
//!
//! ```text
//! cargo run --release --example table1
//! ```

use mtlz::report::report_tables;
use mtlz::search::{enumerate_candidates, SearchConfig};

fn main() {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let catalogs: Vec<_> = (8..=11)
        .map(|n| enumerate_candidates(&SearchConfig { threads, ..SearchConfig::new(n) }).unwrap())
        .collect();
    let report = report_tables(&catalogs, &[8, 9, 10, 11]).unwrap();
    println!(" n  free  with-1221");
    for row in &report.table1 {
        println!("{:>2}  {:>4}  {:>9}", row.n, row.free_1221, row.with_1221);
    }
    println!("\nn = 10 candidates:");
    for row in &report.table2 {
        println!("  {}  e={}  1221={}  degrees {:?}", row.graph6, row.edges, row.has_1221, row.degrees);
    }
    let c = &catalogs[3].counters;
    println!("\nn = 11: {} leaves, {} accepted, {} duplicates merged", c.leaves, c.accepted, c.duplicates_merged);
}
