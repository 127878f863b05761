//! Number of minimal real nilpotent orbits of every catalog entry, grouped by
//! count, with the Hermitian flag it follows.
//!
//! cargo run --example orbit_counts -- 6

use lieorbits::orbits::orbit_report;
use lieorbits::satake::catalog;

fn main() -> lieorbits::Result<()> {
    let max_rank = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let (mut one, mut two) = (vec![], vec![]);
    for sd in catalog(max_rank) {
        let r = orbit_report(&sd)?;
        assert_eq!(r.minimal_real_orbit_count == 2, r.hermitian);
        let bucket = if r.minimal_real_orbit_count == 2 {
            &mut two
        } else {
            &mut one
        };
        bucket.push(sd.name());
    }
    println!("two minimal orbits (Hermitian):\n  {}", two.join(" "));
    println!("one minimal orbit:\n  {}", one.join(" "));
    Ok(())
}
