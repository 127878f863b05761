//! Full orbit report of one real form, as JSON.
//!
//! cargo run --example describe -- "f4(-20)"

use lieorbits::orbits::orbit_report;
use lieorbits::satake::build_satake;

fn main() -> lieorbits::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "f4(-20)".into());
    let report = orbit_report(&build_satake(name.parse()?)?)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}
