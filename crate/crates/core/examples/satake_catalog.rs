//! Satake diagrams of the catalog, each checked against the involution
//! invariants.
//!
//! cargo run --example satake_catalog -- 4

use lieorbits::satake::{catalog, validate_satake};

fn main() {
    let max_rank = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    for sd in catalog(max_rank) {
        let black: Vec<usize> = sd.black().iter().map(|b| b + 1).collect();
        let arrows: Vec<(usize, usize)> = sd.arrows().iter().map(|(a, b)| (a + 1, b + 1)).collect();
        let report = validate_satake(&sd);
        println!(
            "{:<10} {:<3} black {:<14} arrows {:<18} {}",
            sd.name(),
            sd.root_system().simple_type().to_string(),
            format!("{black:?}"),
            format!("{arrows:?}"),
            if report.is_valid() {
                "ok".to_string()
            } else {
                report.failures.join("; ")
            }
        );
    }
}
