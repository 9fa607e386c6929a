//! The layered strategy: list rooted layer sequences and check that it
//! finds the same catalog as the plain search.
//!
//! ```text
//! cargo run --release --example layered_search
//! ```

use mtlz::search::{enumerate_by_layers, enumerate_candidates, rooted_layer_sequences, SearchConfig};

fn main() {
    let n = 10;
    let sequences = rooted_layer_sequences(n, Some(3));
    println!("{} rooted layer sequences of depth 3 on {n} vertices, e.g. {:?}", sequences.len(), &sequences[..3]);
    let layered = enumerate_by_layers(&SearchConfig::new(n)).unwrap();
    let basic = enumerate_candidates(&SearchConfig::new(n)).unwrap();
    println!("layered: {} entries, basic: {} entries", layered.entries.len(), basic.entries.len());
    assert_eq!(layered.entries, basic.entries);
    for e in layered.entries.values() {
        let seq = e.graph().layer_decomposition(0).unwrap().sequence;
        println!("  {}  d={}  layers from 0: {seq:?}", e.graph6, e.diameter);
    }
}
