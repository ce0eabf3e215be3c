//! Exact chromatic number and extension counting.
//!
//! ```text
//! cargo run --example coloring_engine
//! ```

use defset::engine::{chromatic_number_with_witness, count_extensions, extend, SearchBudget};
use defset::{ColorAssignment, Graph};

fn main() {
    let budget = SearchBudget::default();
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (6, 9),
            (6, 8),
            (5, 8),
        ],
    )
    .unwrap();
    for (name, g) in [("C5", Graph::cycle(5)), ("K6", Graph::complete(6)), ("Petersen", petersen)] {
        let (chi, w) = chromatic_number_with_witness(&g, &budget).unwrap();
        let colors: Vec<String> = w.iter().map(|(_, c)| c.to_string()).collect();
        println!("{name}: chi={chi} witness {}", colors.join(""));
    }

    let c6 = Graph::cycle(6);
    let one = ColorAssignment::from_pairs(2, [(0, 1)]).unwrap();
    println!("C6 with v0=1: {} 2-colorings", count_extensions(&c6, &one, 2, u64::MAX).unwrap());
    println!("C6 with v0=1: {:?}", extend(&c6, &one, 2).unwrap().outcome);
    let free = ColorAssignment::new(3);
    println!("C6 uncolored: {} 3-colorings", count_extensions(&c6, &free, 3, u64::MAX).unwrap());
}
