//! Interrupt a search, then resume it from its checkpoint with a different
//! thread count.
//!
//! ```text
//! cargo run --release --example checkpoint_resume
//! ```

use mtlz::search::{enumerate_candidates, resume, SearchConfig};

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = SearchConfig::new(10);
    cfg.checkpoint = Some(dir.path().join("n10.ckpt"));
    cfg.checkpoint_interval = 0;
    cfg.stop_after_units = Some(2);
    let partial = enumerate_candidates(&cfg).unwrap();
    println!("stopped early: complete={} entries={}", partial.complete, partial.entries.len());

    cfg.stop_after_units = None;
    cfg.threads = 2;
    let resumed = resume(&cfg).unwrap();
    let fresh = enumerate_candidates(&SearchConfig::new(10)).unwrap();
    println!("resumed: complete={} entries={}", resumed.complete, resumed.entries.len());
    println!("identical to an uninterrupted run: {}", resumed.to_jsonl() == fresh.to_jsonl());
}
