//! The layered graphs `G_l(k)` and the chromatic join they are made of.
//!
//! ```text
//! cargo run --example layered_graphs
//! ```

use defset::construct::{build_glk, chromatic_join};
use defset::engine::{chromatic_number, is_defining_set, SearchBudget};
use defset::{ColorAssignment, Family, Graph, VertexLabel};

fn main() {
    // K_3 joined with a relabeled K_3 under the same coloring: the octahedron
    let k3 = Graph::complete(3);
    let v_side: Vec<VertexLabel> = (1..=3).map(|i| VertexLabel::new(Family::V, i)).collect();
    let k3v =
        Graph::from_labels(v_side.clone(), &[(v_side[0], v_side[1]), (v_side[0], v_side[2]), (v_side[1], v_side[2])])
            .unwrap();
    let c = ColorAssignment::from_slice(3, &[1, 2, 3]).unwrap();
    let oct = chromatic_join(&k3, &c, &k3v, &c).unwrap();
    println!("K3 join K3: n={} edges={} 4-regular={}", oct.n(), oct.edge_count(), oct.is_regular(4));

    let budget = SearchBudget::default();
    for (l, k) in [(2, 3), (3, 4), (4, 5)] {
        let g = build_glk(l, k).unwrap();
        let chi = chromatic_number(&g.graph, &budget).unwrap();
        let unique = is_defining_set(&g.graph, &g.defining_set, chi).unwrap();
        println!(
            "G_{l}({k}): n={} r={} chi={chi} |S|={} unique={unique}",
            g.graph.n(),
            g.claimed_r,
            g.defining_set.len()
        );
    }
}
