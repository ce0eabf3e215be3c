//! Degree above `2(k-1)`: new vertices joined to both layers, surplus
//! removed by matchings. Prints the edit steps of one instance.
//!
//! ```text
//! cargo run --example higher_degree
//! ```

use defset::construct::build_theorem4;

fn main() {
    let h = build_theorem4(7, 5, 2).unwrap();
    println!("n={} r={} k={}", h.graph.n(), h.claimed_r, h.claimed_k);
    for (i, step) in h.trace.steps.iter().enumerate() {
        let added = step.new_vertex.map(|v| format!(" add {v}")).unwrap_or_default();
        println!("step {i}:{added} -{} +{}", step.deleted_edges.len(), step.added_edges.len());
    }
    let s: Vec<String> = h.defining_set.iter().map(|(v, c)| format!("{}={c}", h.graph.label(v))).collect();
    println!("defining set {}", s.join(" "));
}
