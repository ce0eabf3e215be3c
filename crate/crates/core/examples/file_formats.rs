//! Writing a construction as JSON, graph6 and DOT, and reading it back.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use std::collections::BTreeSet;

use defset::construct::build_theorem1;
use defset::io::{encode_graph6, export_dot, graph_to_json, read_graph, read_graph6, write_graph, write_graph6};

fn main() {
    let h = build_theorem1(4, 0).unwrap();
    println!("graph6: {}", String::from_utf8(encode_graph6(&h.graph)).unwrap());

    let dir = std::env::temp_dir().join("defset-formats");
    std::fs::create_dir_all(&dir).unwrap();
    write_graph(&dir.join("h.json"), &h.graph).unwrap();
    write_graph6(&dir.join("h.g6"), &h.graph).unwrap();
    assert_eq!(read_graph(&dir.join("h.json")).unwrap(), h.graph);
    assert_eq!(read_graph6(&dir.join("h.g6")).unwrap(), h.graph);
    println!("json bytes: {}", graph_to_json(&h.graph).len());

    let s: BTreeSet<_> = h.defining_set.vertices().collect();
    let dot = export_dot(&h.graph, &h.canonical_coloring, &s);
    std::fs::write(dir.join("h.dot"), &dot).unwrap();
    println!("wrote {}", dir.display());
}
