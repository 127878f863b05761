//! Graphviz drawing of a Satake diagram labeled by the diagram of O_min,g.
//!
//! cargo run --example dot_diagram -- "e6(-26)" | dot -Tsvg > e6.svg

use lieorbits::cli::emit_dot;
use lieorbits::orbits::orbit_report;
use lieorbits::satake::build_satake;

fn main() -> lieorbits::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "e6(-26)".into());
    print!(
        "{}",
        emit_dot(&orbit_report(&build_satake(name.parse()?)?)?)
    );
    Ok(())
}
