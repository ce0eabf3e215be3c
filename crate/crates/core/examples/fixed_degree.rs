//! `2(k-1)`-regular `k`-chromatic graphs on `2k + s` vertices.
//!
//! ```text
//! cargo run --example fixed_degree -- 7
//! ```

use defset::construct::{build_theorem2, build_theorem3};

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for s in 1..=k.saturating_sub(2) {
        let built = if k % 2 == 1 { build_theorem2(k, s) } else { build_theorem3(k, s) };
        match built {
            Ok(h) => {
                let new: Vec<String> =
                    h.trace.steps.iter().filter_map(|st| st.new_vertex.map(|v| v.to_string())).collect();
                println!("s={s}: n={} r={} new vertices {}", h.graph.n(), h.claimed_r, new.join(" "));
            }
            Err(e) => println!("s={s}: {e}"),
        }
    }
}
