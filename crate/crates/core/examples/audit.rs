//! Build and verify every family member up to a given `k`.
//!
//! ```text
//! cargo run --release --example audit -- 8
//! ```

use defset::cli::audit_sweep;
use defset::engine::SearchBudget;

fn main() {
    let kmax: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let rows = audit_sweep(kmax, &SearchBudget::default());
    for row in rows.iter().filter(|r| !r.passed()) {
        println!("{row}");
    }
    let passed = rows.iter().filter(|r| r.passed()).count();
    println!("{passed} of {} instances certified", rows.len());
}
