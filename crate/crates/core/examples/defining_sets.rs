//! Defining sets: verification and the exact defining number.
//!
//! ```text
//! cargo run --example defining_sets
//! ```

use defset::construct::{build_glk, build_theorem3};
use defset::engine::{defining_number, extend, SearchBudget};
use defset::ColorAssignment;

fn main() {
    let oct = build_glk(2, 3).unwrap().graph;
    for pairs in [vec![(0, 1)], vec![(0, 1), (1, 2)], vec![(0, 1), (3, 2)]] {
        let s = ColorAssignment::from_pairs(3, pairs.clone()).unwrap();
        let verdict = extend(&oct, &s, 3).unwrap();
        let named: Vec<String> = pairs.iter().map(|&(v, c)| format!("{}={c}", oct.label(v))).collect();
        println!("octahedron {{{}}}: {:?}", named.join(","), verdict.outcome);
    }

    let budget = SearchBudget::default();
    for (name, g) in [("octahedron", oct), ("t3(k=4,s=1)", build_theorem3(4, 1).unwrap().graph)] {
        let d = defining_number(&g, &budget).unwrap();
        let w: Vec<String> = d.witness.iter().map(|(v, c)| format!("{}={c}", g.label(v))).collect();
        println!("{name}: d={} chi={} witness {}", d.value, d.chi, w.join(" "));
    }
}
