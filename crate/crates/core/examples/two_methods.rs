//! The diagram of O_min,g for e6(-26), solved as a linear system over the
//! white nodes and compared with the direct formula.
//!
//! cargo run --example two_methods

use lieorbits::orbits::{min_g_wdd_direct, solve_min_g_linear_system};
use lieorbits::satake::build_satake;

fn main() -> lieorbits::Result<()> {
    let sd = build_satake("e6(-26)".parse()?)?;
    let sol = solve_min_g_linear_system(&sd)?;
    for (class, value) in &sol.class_weights {
        let nodes: Vec<usize> = class.iter().map(|i| i + 1).collect();
        println!("white class {nodes:?}: {value}");
    }
    let coefficients: Vec<String> = sol.coefficients.iter().map(ToString::to_string).collect();
    println!("compact part coefficients: {}", coefficients.join(" "));
    println!("scale {}", sol.scale);
    let direct = min_g_wdd_direct(&sd)?;
    println!(
        "linear system {:?}",
        sol.wdd.integer_weights().unwrap_or_default()
    );
    println!(
        "direct        {:?}",
        direct.integer_weights().unwrap_or_default()
    );
    assert_eq!(sol.wdd, direct);
    Ok(())
}
