//! Deleted edges per new vertex for `k = 7` and `k = 8`, checked against
//! the reference tables.
//!
//! ```text
//! cargo run --example reference_tables
//! ```

fn main() {
    for table in [1, 2] {
        let report = defset::repro::reproduce(table).unwrap();
        print!("{}", report.render());
    }
}
