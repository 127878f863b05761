//! Restricted roots of a real form with their multiplicities.
//!
//! cargo run --example restricted_roots -- "su(2,5)"

use lieorbits::restricted::{is_c_or_bc, parity_criterion, restricted_root_system};
use lieorbits::satake::build_satake;

fn main() -> lieorbits::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "su(2,5)".into());
    let sd = build_satake(name.parse()?)?;
    let rrs = restricted_root_system(&sd)?;
    println!(
        "{}: restricted type {}, real rank {}",
        sd.name(),
        rrs.type_label(),
        rrs.real_rank()
    );
    for xi in rrs.positive() {
        let coords: Vec<String> = xi.iter().map(ToString::to_string).collect();
        println!("  ({})  multiplicity {}", coords.join(", "), rrs.mult(xi));
    }
    let lambda: Vec<String> = rrs.highest().iter().map(ToString::to_string).collect();
    println!(
        "highest ({}) with dim g_lambda = {}",
        lambda.join(", "),
        rrs.highest_mult()
    );
    println!(
        "type C or BC: {}, parity criterion: {}",
        is_c_or_bc(&rrs),
        parity_criterion(&rrs)
    );
    Ok(())
}
