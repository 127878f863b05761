//! Runs every invariant over the catalog and prints any failures.
//!
//! cargo run --example verify_catalog -- 8

use lieorbits::verify::verify_catalog;

fn main() {
    let max_rank = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let summary = verify_catalog(max_rank);
    for f in &summary.failures {
        println!("FAIL {f}");
    }
    println!(
        "{} real forms and {} root systems up to rank {max_rank}: {} failures",
        summary.entries,
        summary.types,
        summary.failures.len()
    );
    if !summary.passed() {
        std::process::exit(1);
    }
}
