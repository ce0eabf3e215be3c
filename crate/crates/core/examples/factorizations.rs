//! 1-factorizations (round robin) and 2-factorizations (Walecki) of
//! complete graphs, plus the cyclic matchings of `K_{m,m}`.
//!
//! ```text
//! cargo run --example factorizations
//! ```

use defset::factor::{cyclic_bipartite_matchings, one_factorization, two_factorization};

fn main() {
    let six: Vec<usize> = (0..6).collect();
    for (i, f) in one_factorization(&six).unwrap().factors.iter().enumerate() {
        println!("K6 factor {}: {f:?}", i + 1);
    }
    let seven: Vec<usize> = (0..7).collect();
    for (i, f) in two_factorization(&seven, 3).unwrap().factors.iter().enumerate() {
        println!("K7 cycle {}: {f:?}", i + 1);
    }
    for (i, m) in cyclic_bipartite_matchings(3).iter().enumerate() {
        let text: Vec<String> = m.iter().map(|(a, b)| format!("u{a}u{b}'")).collect();
        println!("M_{}: {}", i + 1, text.join(" "));
    }
}
