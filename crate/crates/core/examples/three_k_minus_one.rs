//! Regular `k`-chromatic graphs on `3k - 1` vertices, and the degree that
//! cannot be reached.
//!
//! ```text
//! cargo run --example three_k_minus_one
//! ```

use defset::construct::{build_theorem1, feasibility, ConstructError};

fn main() {
    for k in 3..=7 {
        for t in 0..=k - 2 {
            match build_theorem1(k, t) {
                Ok(h) => println!("k={k} t={t}: n={} r={} |S|={}", h.graph.n(), h.claimed_r, h.defining_set.len()),
                Err(ConstructError::TEqualsKMinus2 { .. }) => {
                    let v = feasibility(3 * k - 1, 3 * k - 4, k);
                    println!("k={k} t={t}: impossible ({})", v.reason);
                }
                Err(e) => println!("k={k} t={t}: {e}"),
            }
        }
    }
}
