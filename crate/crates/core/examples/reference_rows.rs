//! The five families where O_min,g is strictly larger than O_min, computed
//! and compared with their reference diagrams and dimensions.
//!
//! cargo run --example reference_rows

use lieorbits::golden::{reference_row, representatives};
use lieorbits::orbits::orbit_report;
use lieorbits::satake::build_satake;

fn main() -> lieorbits::Result<()> {
    for d in representatives() {
        let r = orbit_report(&build_satake(d)?)?;
        let row = reference_row(d).expect("every representative has a row");
        let weights = r.min_g_wdd.integer_weights().unwrap_or_default();
        let ok = weights == row.weights && r.min_g_dim == row.dim;
        println!(
            "{:<10} {:?} dim {} {}",
            d.to_string(),
            weights,
            r.min_g_dim,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
