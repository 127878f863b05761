//! Exact rational solves and orthogonal splitting under a Gram form.
//!
//! cargo run --example exact_linear_algebra

use lieorbits::ratmat::{gram_split, rat, rat_solve, to_rat_vec, RatMatrix};
use lieorbits::rootsys::build_root_system;
use lieorbits::rootsys::Letter;

fn main() -> lieorbits::Result<()> {
    let a = RatMatrix::from_int_rows(&[vec![2, -1], vec![-1, 2]])?;
    let x = rat_solve(&a, &[rat(1), rat(0)])?;
    println!("A2 Cartan matrix solve: x = ({}, {})", x[0], x[1]);

    // split the highest root of B3 along the span of a2, a3
    let rs = build_root_system(Letter::B, 3)?;
    let basis = vec![rs.simple_root(1), rs.simple_root(2)];
    let (inside, perp) = gram_split(rs.gram(), &basis, &to_rat_vec(rs.highest()))?;
    let show = |v: &[lieorbits::ratmat::Rat]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("phi = ({}) + ({})", show(&inside), show(&perp));
    Ok(())
}
