//! Exact enumeration versus bounded-weight search.

use mpc_hull::code::{self, DistanceCaps};
use mpc_hull::ring::Ring;

fn main() -> mpc_hull::error::Result<()> {
    let z25 = Ring::new(25)?;
    let c = code::cyclic_code(z25, 12, &[1, 1, 1])?;
    println!("|C| = {}", c.cardinality_string());
    for weight_cap in [1, 2, 3] {
        let caps = DistanceCaps {
            weight_cap,
            ..DistanceCaps::default()
        };
        match c.min_distance(caps)?.expect("nonzero code") {
            code::MinDistance::Exact(d) => println!("weight cap {weight_cap}: d = {d}"),
            code::MinDistance::Bounds { lo, hi } => {
                println!("weight cap {weight_cap}: d in [{lo}, {hi}] (weight search capped at {weight_cap})")
            }
        }
    }

    let z3 = Ring::new(3)?;
    let small = code::cyclic_code(z3, 4, &[1, 1])?;
    let d = small.min_distance(DistanceCaps::default())?.expect("nonzero code");
    println!("<x+1> over Z_3, n=4: {} codewords enumerated, d = {d}", small.cardinality());
    Ok(())
}
