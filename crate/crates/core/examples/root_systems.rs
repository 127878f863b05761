//! Root systems, highest roots, and the minimal nilpotent orbit of each
//! exceptional type.
//!
//! cargo run --example root_systems

use lieorbits::rootsys::{
    build_root_system, extended_neighbors, min_orbit_wdd, orbit_dim_from_wdd, Letter,
};

fn main() -> lieorbits::Result<()> {
    for (letter, rank) in [
        (Letter::G, 2),
        (Letter::F, 4),
        (Letter::E, 6),
        (Letter::E, 7),
        (Letter::E, 8),
    ] {
        let rs = build_root_system(letter, rank)?;
        let min = min_orbit_wdd(&rs);
        let nbrs: Vec<usize> = extended_neighbors(&rs)?.iter().map(|i| i + 1).collect();
        println!(
            "{}: {} roots, highest {:?}, O_min weights {:?}, extended node joins {:?}, dim O_min = {}",
            rs.simple_type(),
            rs.roots().len(),
            rs.highest(),
            min.integer_weights().unwrap_or_default(),
            nbrs,
            orbit_dim_from_wdd(&rs, &min)?
        );
    }
    Ok(())
}
